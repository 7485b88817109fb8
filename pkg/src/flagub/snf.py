"""Smith normal form invariants of integer matrices.

Only the invariant factors are produced, not the transforms.  Matrices
are given as sparse rows (``dict`` column -> value) over Python ints.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence


def _divisibility_chain(diag: list[int]) -> list[int]:
    d = sorted(abs(x) for x in diag if x)
    k = len(d)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = d[i], d[j]
            g = gcd(a, b)
            if g != a:
                d[i], d[j] = g, a // g * b
    return sorted(d)


def smith_invariants(rows: Sequence[dict[int, int]]) -> list[int]:
    """Non-zero invariant factors ``d_1 | d_2 | ... | d_rank``.

    Unit pivots are eliminated first on the sparse rows; whatever is
    left is diagonalised by repeatedly pivoting on an entry of minimal
    absolute value.
    """
    active = [dict(r) for r in rows if r]
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(active):
        for c in r:
            cols.setdefault(c, set()).add(i)
    alive = set(range(len(active)))
    diag: list[int] = []

    while True:
        pivot = None
        for i in sorted(alive, key=lambda x: len(active[x])):
            row = active[i]
            for c, v in row.items():
                if v == 1 or v == -1:
                    pivot = (i, c)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, c = pivot
        prow = active[i]
        pv = prow[c]
        for j in list(cols.get(c, ())):
            if j == i:
                continue
            row = active[j]
            f = row[c] * pv  # pv is a unit, so this equals row[c] / pv
            for cc, vv in prow.items():
                nv = row.get(cc, 0) - f * vv
                if nv:
                    if cc not in row:
                        cols.setdefault(cc, set()).add(j)
                    row[cc] = nv
                else:
                    if cc in row:
                        del row[cc]
                        cols[cc].discard(j)
            if not row:
                alive.discard(j)
        for cc in prow:
            cols[cc].discard(i)
        alive.discard(i)
        diag.append(1)

    rest = [active[i] for i in sorted(alive) if active[i]]
    if rest:
        colset = sorted({c for r in rest for c in r})
        index = {c: k for k, c in enumerate(colset)}
        dense = [[0] * len(colset) for _ in rest]
        for k, r in enumerate(rest):
            for c, v in r.items():
                dense[k][index[c]] = v
        diag.extend(_dense_diagonal(dense))
    return _divisibility_chain(diag)


def _dense_diagonal(a: list[list[int]]) -> list[int]:
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    top = 0
    while top < min(m, n):
        best = None
        for i in range(top, m):
            for j in range(top, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, pi, pj = best
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = a[top][top]
            dirty = False
            for i in range(top + 1, m):
                if a[i][top]:
                    q = a[i][top] // p
                    if q:
                        ri, rt = a[i], a[top]
                        for j in range(top, n):
                            ri[j] -= q * rt[j]
                    if a[i][top]:
                        dirty = True
            for j in range(top + 1, n):
                if a[top][j]:
                    q = a[top][j] // p
                    if q:
                        for i in range(top, m):
                            a[i][j] -= q * a[i][top]
                    if a[top][j]:
                        dirty = True
            if not dirty:
                break
            # a remainder smaller than |p| survived; move it to the pivot slot
            best = None
            for i in range(top, m):
                if a[i][top] and (best is None or abs(a[i][top]) < best[0]):
                    best = (abs(a[i][top]), i, top)
            for j in range(top, n):
                if a[top][j] and (best is None or abs(a[top][j]) < best[0]):
                    best = (abs(a[top][j]), top, j)
            _, pi, pj = best
            a[top], a[pi] = a[pi], a[top]
            for row in a:
                row[top], row[pj] = row[pj], row[top]
        out.append(abs(a[top][top]))
        top += 1
    return out


def rank(rows: Sequence[dict[int, int]]) -> int:
    return len(smith_invariants(rows))
