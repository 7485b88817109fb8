"""Exception types raised across the package."""


class FlagubError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(FlagubError, ValueError):
    pass


class NotAClique(FlagubError, ValueError):
    pass


class TooFewVertices(FlagubError, ValueError):
    pass


class NotPure(FlagubError, ValueError):
    pass


class BadLength(FlagubError, ValueError):
    pass


class NotPalindromic(FlagubError, ValueError):
    pass


class OutOfClass(FlagubError, ValueError):
    pass


class BadPartition(FlagubError, ValueError):
    pass


class BadInput(FlagubError, ValueError):
    pass


class KPlusOneClique(FlagubError, ValueError):
    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class TooLargeForExact(FlagubError, ValueError):
    pass


class NotExtremal(FlagubError, ValueError):
    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NonImprovingMove(FlagubError, RuntimeError):
    def __init__(self, message, kind=None, gain=None, log=None):
        super().__init__(message)
        self.kind = kind
        self.gain = gain
        self.log = log


class NotSingleCycle(FlagubError, ValueError):
    def __init__(self, message, part=None):
        super().__init__(message)
        self.part = part


class BadReplacement(FlagubError, ValueError):
    pass


class BudgetExceeded(FlagubError, RuntimeError):
    def __init__(self, message, visited=0):
        super().__init__(message)
        self.visited = visited
