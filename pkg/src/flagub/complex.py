"""Simplicial complexes with reduced integer homology and link checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphFormatError, NotPure
from .graph import Graph, iter_cliques, maximal_cliques
from .snf import smith_invariants

Face = tuple[int, ...]


class SimplicialComplex:
    """A finite abstract simplicial complex stored as faces by dimension.

    The empty face is always present (``f_{-1} = 1``).  ``faces[k]`` lists the
    faces with ``k`` vertices (dimension ``k - 1``) in lexicographic order.
    """

    __slots__ = ("n", "faces", "_facets", "_face_set")

    def __init__(self, n: int, faces_by_size: Sequence[Iterable[Face]]):
        self.n = n
        fs = [sorted(set(tuple(sorted(f)) for f in layer)) for layer in faces_by_size]
        if not fs:
            fs = [[()]]
        fs[0] = [()]
        while len(fs) > 1 and not fs[-1]:
            fs.pop()
        self.faces: tuple[tuple[Face, ...], ...] = tuple(tuple(layer) for layer in fs)
        self._face_set = None
        self._facets = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], n: int | None = None) -> "SimplicialComplex":
        """Downward closure of ``facets``."""
        tops = [tuple(sorted(set(f))) for f in facets]
        if n is None:
            n = max((max(f) + 1 for f in tops if f), default=0)
        for f in tops:
            if f and (f[0] < 0 or f[-1] >= n):
                raise GraphFormatError(f"facet {f} out of range for n={n}")
        top = max((len(f) for f in tops), default=0)
        layers: list[set] = [set() for _ in range(top + 1)]
        for f in tops:
            for k in range(len(f) + 1):
                layers[k].update(combinations(f, k))
        return cls(n, layers)

    @classmethod
    def from_graph(cls, g: Graph) -> "SimplicialComplex":
        """Clique complex: every clique of ``g`` is a face."""
        layers: list[list] = [[()]]
        for c in iter_cliques(g):
            while len(layers) <= len(c):
                layers.append([])
            layers[len(c)].append(c)
        cx = cls(g.n, layers)
        cx._facets = tuple(sorted(c for c in maximal_cliques(g)))
        return cx

    # -- queries ----------------------------------------------------------
    @property
    def dimension(self) -> int:
        return len(self.faces) - 2

    @property
    def f_vector(self) -> tuple[int, ...]:
        """``(f_{-1}, f_0, ..., f_dim)``."""
        return tuple(len(layer) for layer in self.faces)

    def faces_of_dim(self, k: int) -> tuple[Face, ...]:
        i = k + 1
        return self.faces[i] if 0 <= i < len(self.faces) else ()

    def all_faces(self) -> list[Face]:
        return [f for layer in self.faces for f in layer]

    def __contains__(self, face) -> bool:
        if self._face_set is None:
            self._face_set = frozenset(f for layer in self.faces for f in layer)
        return tuple(sorted(face)) in self._face_set

    @property
    def facets(self) -> tuple[Face, ...]:
        if self._facets is None:
            tops = []
            for k in range(len(self.faces) - 1, -1, -1):
                for f in self.faces[k]:
                    if not any(set(f) <= set(t) for t in tops if len(t) > len(f)):
                        tops.append(f)
            self._facets = tuple(sorted(tops))
        return self._facets

    def is_pure(self) -> bool:
        dims = {len(f) for f in self.facets}
        return len(dims) <= 1

    def vertices(self) -> list[int]:
        return [f[0] for f in self.faces_of_dim(0)]

    def one_skeleton(self) -> Graph:
        return Graph(self.n, self.faces_of_dim(1))

    def is_flag(self) -> bool:
        """True iff the complex is the clique complex of its 1-skeleton."""
        other = SimplicialComplex.from_graph(self.one_skeleton())
        return other.faces == self.faces

    def link(self, sigma: Iterable[int]) -> "SimplicialComplex":
        s = set(sigma)
        tops = [tuple(v for v in f if v not in s) for f in self.facets if s <= set(f)]
        if not tops:
            raise ValueError(f"{tuple(sorted(s))} is not a face")
        return SimplicialComplex.from_facets(tops, self.n)

    def is_connected(self) -> bool:
        vs = self.vertices()
        if not vs:
            return True
        g = self.one_skeleton()
        seen = {vs[0]}
        stack = [vs[0]]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vs)

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (k - 1) * len(layer) for k, layer in enumerate(self.faces))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, f={self.f_vector})"

    # -- serialisation ----------------------------------------------------
    def to_text(self) -> str:
        lines = [str(self.n)]
        lines.extend(" ".join(map(str, f)) for f in self.facets if f)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimplicialComplex":
        lines = [ln for ln in text.split("\n") if ln.strip()]
        if not lines:
            raise GraphFormatError("empty complex file")
        head = lines[0].split()
        if len(head) != 1:
            raise GraphFormatError("first line of a complex file must be 'n'")
        try:
            n = int(head[0])
            rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
        except ValueError:
            raise GraphFormatError("complex file contains a non-integer token") from None
        facets = []
        for ln, f in zip(lines[1:], rows):
            if f != sorted(set(f)):
                raise GraphFormatError(f"facet line {ln!r} must be strictly increasing")
            facets.append(f)
        return cls.from_facets(facets, n)


def read_complex(path) -> SimplicialComplex:
    with open(path) as fh:
        return SimplicialComplex.from_text(fh.read())


def clique_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex.from_graph(g)


def boundary_rows(k: SimplicialComplex, size: int) -> list[dict[int, int]]:
    """Rows of the augmented boundary map from ``size``-faces to ``(size-1)``-faces.

    Row ``i`` is the boundary of the ``i``-th face with ``size`` vertices;
    ``size = 1`` maps every vertex to the empty face.
    """
    if size < 1 or size >= len(k.faces):
        return []
    lower = {f: i for i, f in enumerate(k.faces[size - 1])}
    rows = []
    for f in k.faces[size]:
        row = {}
        for j in range(size):
            row[lower[f[:j] + f[j + 1:]]] = -1 if j % 2 else 1
        rows.append(row)
    return rows


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology, indexed by dimension from -1 up."""

    betti: dict[int, int]
    torsion: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def rank(self, i: int) -> int:
        return self.betti.get(i, 0)

    def torsion_of(self, i: int) -> tuple[int, ...]:
        return self.torsion.get(i, ())

    def is_sphere(self, q: int) -> bool:
        """Same reduced homology as ``S^q`` (``q = -1``: the empty-face complex)."""
        if any(self.torsion.values()):
            return False
        return all(b == (1 if i == q else 0) for i, b in self.betti.items()) and self.rank(q) == 1

    def is_acyclic(self) -> bool:
        return not any(self.betti.values()) and not any(self.torsion.values())

    def to_json(self) -> dict:
        return {
            "betti": {str(i): b for i, b in sorted(self.betti.items())},
            "torsion": {str(i): list(t) for i, t in sorted(self.torsion.items()) if t},
        }


def homology(k: SimplicialComplex) -> HomologyProfile:
    """Reduced homology with integer coefficients via Smith normal form."""
    top = len(k.faces) - 1
    invariants = {size: smith_invariants(boundary_rows(k, size)) for size in range(1, top + 1)}
    betti, torsion = {}, {}
    for size in range(0, top + 1):
        dim = size - 1
        n_faces = len(k.faces[size])
        rk_out = len(invariants.get(size, ()))
        into = invariants.get(size + 1, [])
        betti[dim] = n_faces - rk_out - len(into)
        tors = tuple(d for d in into if d > 1)
        if tors:
            torsion[dim] = tors
    return HomologyProfile(betti, torsion)


@dataclass(frozen=True)
class ManifoldCertificate:
    is_manifold: bool
    failing_face: Face | None
    dimension: int
    connected: bool
    checked_faces: int

    def __bool__(self):
        return self.is_manifold

    def to_json(self) -> dict:
        return {
            "homology_manifold": self.is_manifold,
            "failing_face": list(self.failing_face) if self.failing_face is not None else None,
            "dimension": self.dimension,
            "connected": self.connected,
            "checked_faces": self.checked_faces,
        }


def _link_ok(k: SimplicialComplex, face: Face, q: int) -> bool:
    return homology(k.link(face)).is_sphere(q - len(face))


def is_homology_manifold(k: SimplicialComplex) -> ManifoldCertificate:
    """Check that every non-empty face has a sphere-homological link.

    Faces are visited from the top dimension down and the scan stops at
    the first failure; the faces lexicographically before that failure are
    then rechecked so the certificate always names the lexicographically
    smallest failing face.  Connectivity is reported, not required.
    """
    if not k.is_pure():
        raise NotPure(f"complex with facet sizes {sorted({len(f) for f in k.facets})} is not pure")
    q = k.dimension
    checked = 0
    first_bad = None
    for size in range(len(k.faces) - 1, 0, -1):
        for f in k.faces[size]:
            checked += 1
            if not _link_ok(k, f, q):
                first_bad = f
                break
        if first_bad is not None:
            break
    if first_bad is not None:
        earlier = sorted(f for f in k.all_faces() if f and f < first_bad)
        for f in earlier:
            checked += 1
            if not _link_ok(k, f, q):
                first_bad = f
                break
    return ManifoldCertificate(first_bad is None, first_bad, q, k.is_connected(), checked)


def is_homology_sphere(k: SimplicialComplex) -> bool:
    if not k.is_pure():
        return False
    return bool(is_homology_manifold(k)) and homology(k).is_sphere(k.dimension)


def is_eulerian(k: SimplicialComplex) -> bool:
    """Every link, the empty face's included, has the Euler characteristic of a sphere."""
    if not k.is_pure():
        raise NotPure("Eulerian check needs a pure complex")
    q = k.dimension
    for f in k.all_faces():
        lk = k.link(f) if f else k
        if lk.reduced_euler_characteristic() != (-1) ** (q - len(f)):
            return False
    return True


def is_weak_pseudomanifold(k: SimplicialComplex) -> bool:
    """Pure, and every codimension-one face lies in exactly two facets."""
    if not k.is_pure() or k.dimension < 0:
        return False
    counts: dict[Face, int] = {}
    for f in k.facets:
        for j in range(len(f)):
            ridge = f[:j] + f[j + 1:]
            counts[ridge] = counts.get(ridge, 0) + 1
    return all(c == 2 for c in counts.values()) and len(counts) == len(k.faces[len(k.faces) - 2])
