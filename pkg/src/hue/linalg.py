"""Exact sparse linear algebra over Z and Q.

Matrices are lists of sparse columns ``{row: int}``. Two independent
engines live here:

* :func:`reduce_columns` - left-to-right column reduction keyed on the
  lowest nonzero row (the persistence-style algorithm), fraction free, with
  optional tracking of the column operations. Gives ranks over Q, kernel
  bases and an echelon basis of the column space for membership tests.
* :func:`smith_invariants` - Smith normal form via sparse elimination on
  unit pivots with Markowitz-style pivot choice, finished by a dense SNF on
  whatever non-unit core remains. Gives ranks and torsion over Z.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "Reduction",
    "reduce_columns",
    "reduce_vector",
    "smith_invariants",
    "dense_smith_diagonal",
    "prime_power_factors",
]

Column = dict


def _axpy(x: Column, y: Column, a: int) -> Column:
    """``x + a*y`` with zero entries dropped (``x`` is modified)."""
    for r, v in y.items():
        w = x.get(r, 0) + a * v
        if w:
            x[r] = w
        else:
            x.pop(r, None)
    return x


def _scale(x: Column, a: int) -> Column:
    if a != 1:
        for r in x:
            x[r] *= a
    return x


def _content(*cols: Column) -> int:
    g = 0
    for c in cols:
        for v in c.values():
            g = gcd(g, v)
            if g == 1:
                return 1
    return g or 1


def _eliminate(col: Column, other: Column, low, track=None, other_track=None):
    """Cancel ``col[low]`` against ``other[low]``; exact over Z."""
    a, b = col[low], other[low]
    if a % b == 0:
        q = a // b
        _axpy(col, other, -q)
        if track is not None:
            _axpy(track, other_track, -q)
        return
    g = gcd(a, b)
    sa, sb = b // g, a // g
    if sa < 0:
        sa, sb = -sa, -sb
    _axpy(_scale(col, sa), other, -sb)
    if track is not None:
        _axpy(_scale(track, sa), other_track, -sb)
    c = _content(col, track) if track is not None else _content(col)
    if c != 1:
        for r in col:
            col[r] //= c
        if track is not None:
            for r in track:
                track[r] //= c


@dataclass
class Reduction:
    """Outcome of :func:`reduce_columns`.

    ``pivots`` maps a low row to the reduced column owning it; these columns
    form an echelon basis of the column space. ``kernel`` holds, for every
    column that reduced to zero, the integer combination of original
    columns that produced it.
    """

    nrows: int | None
    ncols: int
    pivots: dict = field(default_factory=dict)
    pivot_cols: dict = field(default_factory=dict)
    kernel: dict = field(default_factory=dict)
    skipped: frozenset = frozenset()

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, vec: Column) -> bool:
        return not reduce_vector(vec, self.pivots)


def reduce_columns(columns: Sequence[Column], *, track: bool = False,
                   skip: Iterable[int] = (), nrows: int | None = None) -> Reduction:
    """Column-reduce ``columns``; skipped columns are treated as zero.

    Skipping is the clearing shortcut: callers pass columns already known to
    be cycles (or cocycles) of the complex being reduced.
    """
    skip = frozenset(skip)
    red = Reduction(nrows, len(columns), skipped=skip)
    pivots, pcols = red.pivots, red.pivot_cols
    tracks: dict = {}
    for j, original in enumerate(columns):
        if j in skip:
            continue
        col = dict(original)
        tr = {j: 1} if track else None
        while col:
            low = max(col)
            other = pivots.get(low)
            if other is None:
                break
            _eliminate(col, other, low, tr, tracks.get(low) if track else None)
        if col:
            low = max(col)
            pivots[low] = col
            pcols[low] = j
            if track:
                tracks[low] = tr
        elif track:
            red.kernel[j] = tr
    return red


def reduce_vector(vec: Column, pivots: dict) -> Column:
    """Residue of ``vec`` after reduction by an echelon basis (empty means member)."""
    col = dict(vec)
    while col:
        low = max(col)
        other = pivots.get(low)
        if other is None:
            return col
        _eliminate(col, other, low)
    return col


# -------------------------------------------------------------------- Smith


def dense_smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Invariant factors (positive, each dividing the next) of a dense integer matrix."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if done:
                break
            # a remainder survived: move the smallest entry of row/column t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, pi, pj = min(cands)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    # normalise the diagonal so each entry divides the next
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            x, y = diag[i], diag[j]
            g = gcd(x, y)
            diag[i], diag[j] = g, x // g * y
    return diag


def smith_invariants(columns: Sequence[Column], *, dense_limit: int = 4_000_000) -> list[int]:
    """Nonzero invariant factors of the matrix given by sparse ``columns``.

    The rank over Q is the length of the result; entries above 1 are torsion
    coefficients of the cokernel.
    """
    cols: dict = {}
    rows: dict = {}
    for c, col in enumerate(columns):
        if col:
            cols[c] = set(col)
            for r, v in col.items():
                rows.setdefault(r, {})[c] = v
    units = 0
    heap = [(len(s), c) for c, s in cols.items()]
    heapq.heapify(heap)
    while heap:
        size, c = heapq.heappop(heap)
        s = cols.get(c)
        if s is None or len(s) != size:
            continue
        best = None
        for r in s:
            if abs(rows[r][c]) == 1 and (best is None or len(rows[r]) < len(rows[best])):
                best = r
        if best is None:
            continue  # no unit here yet; revisited if the column changes
        prow = rows.pop(best)
        sign = prow[c]
        touched = set()
        for r in list(s):
            if r == best:
                continue
            row = rows[r]
            factor = row[c] * sign
            for cc, v in prow.items():
                w = row.get(cc, 0) - factor * v
                if w:
                    if cc not in row:
                        cols[cc].add(r)
                    row[cc] = w
                else:
                    if cc in row:
                        del row[cc]
                        cols[cc].discard(r)
                touched.add(cc)
            if not row:
                del rows[r]
        for cc in prow:
            cols[cc].discard(best)
            touched.add(cc)
        del cols[c]
        units += 1
        for cc in touched:
            if cc in cols:
                if cols[cc]:
                    heapq.heappush(heap, (len(cols[cc]), cc))
                else:
                    del cols[cc]
    rest_rows = [r for r in rows if rows[r]]
    rest_cols = sorted({c for r in rest_rows for c in rows[r]})
    if not rest_rows:
        return [1] * units
    if len(rest_rows) * len(rest_cols) > dense_limit:
        raise MemoryError(
            f"non-unit core of size {len(rest_rows)}x{len(rest_cols)} exceeds the dense SNF limit"
        )
    cidx = {c: j for j, c in enumerate(rest_cols)}
    dense = [[0] * len(rest_cols) for _ in rest_rows]
    for i, r in enumerate(rest_rows):
        for c, v in rows[r].items():
            dense[i][cidx[c]] = v
    return [1] * units + dense_smith_diagonal(dense)


def prime_power_factors(d: int) -> list[int]:
    """Split an invariant factor into prime-power elementary divisors."""
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            q = 1
            while d % p == 0:
                d //= p
                q *= p
            out.append(q)
        p += 1
    if d > 1:
        out.append(d)
    return out
