"""Exact f/h/g/gamma transforms plus clique-function arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import BadLength, NotPalindromic, OutOfClass
from .graph import CliqueVector, Graph, clique_vector


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_pow(base: Sequence[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = _poly_mul(out, base)
    return out


def f_to_h(f: Sequence[int], d: int) -> list[int]:
    """h-vector from ``f = (f_{-1}, ..., f_{d-1})`` by polynomial expansion."""
    f = list(f)
    if len(f) != d + 1 or (f and f[0] != 1):
        raise BadLength(f"f must have length d+1={d + 1} and start with 1, got {f}")
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        # f_{i-1} x^i (1 - x)^(d - i)
        term = _poly_pow([1, -1], d - i)
        for j, c in enumerate(term):
            h[i + j] += fi * c
    return h


def h_to_f(h: Sequence[int], d: int | None = None) -> list[int]:
    """Inverse of :func:`f_to_h`: ``f_i = sum_j C(d-j, i+1-j) h_j``."""
    h = list(h)
    if d is None:
        d = len(h) - 1
    if len(h) != d + 1:
        raise BadLength(f"h must have length d+1={d + 1}, got {len(h)}")
    return [sum(comb(d - j, i + 1 - j) * h[j] for j in range(i + 2)) for i in range(-1, d)]


def dehn_sommerville_holds(h: Sequence[int]) -> bool:
    h = list(h)
    return h == h[::-1]


def h_to_gamma(h: Sequence[int]) -> list[int]:
    """Coefficients of ``h(x)`` in the basis ``x^i (1+x)^(d-2i)``."""
    h = list(h)
    if not dehn_sommerville_holds(h):
        raise NotPalindromic(f"h = {h} is not palindromic; gamma is undefined")
    d = len(h) - 1
    rest = list(h)
    gamma = []
    for i in range(d // 2 + 1):
        g = rest[i]
        gamma.append(g)
        basis = _poly_pow([1, 1], d - 2 * i)
        for j, c in enumerate(basis):
            rest[i + j] -= g * c
    assert not any(rest), "palindromic h must decompose exactly"
    return gamma


def gamma_to_h(gamma: Sequence[int], d: int) -> list[int]:
    h = [0] * (d + 1)
    for i, g in enumerate(gamma):
        for j, c in enumerate(_poly_pow([1, 1], d - 2 * i)):
            h[i + j] += g * c
    return h


def h_to_g(h: Sequence[int]) -> list[int]:
    h = list(h)
    d = len(h) - 1
    return [h[0]] + [h[i] - h[i - 1] for i in range(1, d // 2 + 1)]


@dataclass(frozen=True)
class FaceVectorSet:
    d: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    g: tuple[int, ...]
    gamma: tuple[int, ...] | None

    @classmethod
    def from_f(cls, f: Sequence[int]) -> "FaceVectorSet":
        f = tuple(f)
        d = len(f) - 1
        h = tuple(f_to_h(f, d))
        gamma = tuple(h_to_gamma(h)) if dehn_sommerville_holds(h) else None
        return cls(d, f, h, tuple(h_to_g(h)), gamma)

    @classmethod
    def of_graph(cls, g: Graph) -> "FaceVectorSet":
        """Vectors of the clique complex of ``g`` (``f_i = e_{i+1}``)."""
        return cls.from_f(clique_vector(g).counts)

    @property
    def palindromic(self) -> bool:
        return self.gamma is not None

    def vector(self, kind: str) -> tuple[int, ...] | None:
        return {"f": self.f, "h": self.h, "g": self.g, "gamma": self.gamma}[kind]

    def to_json(self, kinds=("f", "h", "g", "gamma")) -> dict:
        out: dict = {"d": self.d}
        for k in kinds:
            if k == "gamma" and self.gamma is None:
                out["warning"] = "h-vector is not palindromic; gamma omitted"
                continue
            out[k] = list(self.vector(k))
        return out


@dataclass(frozen=True)
class CliqueFunction:
    """``F(G) = c_k e_k(G) + ... + c_1 e_1(G) + c_0`` with ``c_k > 0``.

    ``coefficients`` is ``(c_k, ..., c_1, c_0)``.  A face function in
    dimension ``l`` has the same coefficient tuple read as
    ``(c_l, ..., c_0, c_{-1})`` because ``f_i = e_{i+1}``.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coefficients)
        if len(cs) < 2:
            raise ValueError("a clique function needs order >= 1")
        if cs[0] <= 0:
            raise ValueError(f"leading coefficient must be positive, got {cs[0]}")
        object.__setattr__(self, "coefficients", cs)

    @classmethod
    def face_function(cls, coefficients) -> "CliqueFunction":
        return cls(tuple(coefficients))

    @classmethod
    def e(cls, k: int) -> "CliqueFunction":
        """The clique function ``e_k``."""
        return cls((1,) + (0,) * k)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coef(self, i: int) -> Fraction:
        """``c_i``."""
        k = self.order
        return self.coefficients[k - i] if 0 <= i <= k else Fraction(0)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Graph):
            x = clique_vector(x, self.order)
        return eval_clique_function(self, x)

    def multipartite_coefficients(self) -> list[Fraction]:
        """``c'_j`` with ``F = sum_j c'_j sigma_j(part sizes)`` on the cycle-part class."""
        k = self.order
        return [sum((self.coef(l) * comb(j, l - j) for l in range(j, k + 1)), Fraction(0)) for j in range(k + 1)]

    def __str__(self):
        k = self.order
        return " + ".join(f"{c}*e{k - i}" for i, c in enumerate(self.coefficients) if c)


def eval_clique_function(F: CliqueFunction, e) -> Fraction:
    counts = e.counts if isinstance(e, CliqueVector) else tuple(e)
    total = Fraction(0)
    for i in range(F.order + 1):
        ei = counts[i] if i < len(counts) else 0
        total += F.coef(i) * ei
    return total


def elementary_symmetric(xs: Sequence, j: int):
    """``sigma_j(xs)``; zero for ``j < 0`` or ``j > len(xs)``."""
    if j < 0 or j > len(xs):
        return 0
    coeffs = [1] + [0] * j
    for x in xs:
        for t in range(j, 0, -1):
            coeffs[t] += coeffs[t - 1] * x
    return coeffs[j]


def multipartite_clique_count(parts: Sequence[int], intra_edges: Sequence[int], l: int) -> int:
    """``e_l`` of a complete multipartite graph whose parts induce cycles.

    Each part must induce a triangle-free graph of maximum degree 2 with as
    many edges as vertices; only the counts are checked here.
    """
    parts = list(parts)
    r = len(parts)
    if len(intra_edges) != r:
        raise BadLength("intra_edges must have one entry per part")
    for p, e in zip(parts, intra_edges):
        if e != p or (p and p < 4):
            raise OutOfClass(f"part of size {p} with {e} internal edges is outside the cycle-part class")
    if l < 0 or l > 2 * r:
        raise ValueError(f"l must lie in [0, 2r] = [0, {2 * r}]")
    return sum(comb(j, l - j) * elementary_symmetric(parts, j) for j in range(l + 1))


def sigma_shift_delta(parts: Sequence[int], j: int, src: int = 0, dst: int = 1) -> int:
    """``sigma_j`` after moving one unit from ``parts[src]`` to ``parts[dst]``, minus before.

    Closed form ``(x_src - x_dst - 1) * sigma_{j-2}(other parts)``.
    """
    if len(parts) < 2:
        raise ValueError("need at least two parts")
    if src == dst:
        raise ValueError("src and dst must differ")
    others = [x for i, x in enumerate(parts) if i not in (src, dst)]
    return (parts[src] - parts[dst] - 1) * elementary_symmetric(others, j - 2)


def middle_dehn_sommerville(r: int) -> list[int]:
    """Coefficients ``a_0..a_r`` with ``e_{r+1} = sum a_j e_j`` on homology (2r-1)-manifolds.

    Obtained from ``h_{r+1} = h_{r-1}`` with ``d = 2r`` and ``f_{j-1} = e_j``.
    """
    d = 2 * r
    out = []
    for j in range(r + 1):
        a = 0
        if j <= r - 1:
            a += (-1) ** (r - 1 - j) * comb(d - j, r - 1 - j)
        a -= (-1) ** (r + 1 - j) * comb(d - j, r + 1 - j)
        out.append(a)
    return out


def growth_constant(r: int) -> int:
    """A constant ``C_r`` with ``e_{r+1} <= C_r n^r`` on homology (2r-1)-manifolds."""
    return sum(abs(a) for a in middle_dehn_sommerville(r))
