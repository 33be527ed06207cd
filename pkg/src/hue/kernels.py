"""Hot enumeration loops, each with a numba kernel and a numpy twin.

Both paths work in int64. The dispatchers check up front, with exact
Python integers, whether a count could overflow; if so the numpy twin is
rerun on Python integers (``dtype=object``) instead of returning a wrapped
value.
"""

from __future__ import annotations

from math import comb

import numpy as np

from ._accel import apply_thread_cap, njit, numba_enabled, prange

__all__ = [
    "count_proper_colorings",
    "cube_faces_outside_box",
    "BudgetExceeded",
    "INT64_LIMIT",
]

INT64_LIMIT = 2**62
MAX_COLORINGS = 2 * 10**8
MAX_DP_CELLS = 1 << 24


class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured size budget."""


def _edge_table(n: int, edge_masks) -> np.ndarray:
    """Edges as rows of 0-based vertex indices padded with -1."""
    width = max((m.bit_count() for m in edge_masks), default=1)
    table = np.full((len(edge_masks), width), -1, dtype=np.int64)
    for r, m in enumerate(edge_masks):
        verts = [v for v in range(n) if m >> v & 1]
        table[r, : len(verts)] = verts
    return table


# ---------------------------------------------------------------- colorings


@njit(cache=True)
def _colorings_shard(n, edges, k, last):
    """Proper colorings with the last vertex fixed to colour ``last``."""
    colors = np.zeros(n, dtype=np.int64)
    colors[n - 1] = last
    total = 0
    free = n - 1
    while True:
        ok = True
        for r in range(edges.shape[0]):
            c0 = colors[edges[r, 0]]
            mono = True
            for t in range(1, edges.shape[1]):
                v = edges[r, t]
                if v < 0:
                    break
                if colors[v] != c0:
                    mono = False
                    break
            if mono:
                ok = False
                break
        if ok:
            total += 1
        # odometer step over the free vertices
        pos = 0
        while pos < free:
            colors[pos] += 1
            if colors[pos] < k:
                break
            colors[pos] = 0
            pos += 1
        if pos == free:
            return total


@njit(cache=True, parallel=True)
def _colorings_numba(n, edges, k):
    # one shard per colour of the last vertex; integer sums keep it deterministic
    parts = np.zeros(k, dtype=np.int64)
    for c in prange(k):
        parts[c] = _colorings_shard(n, edges, k, c)
    return parts.sum()


def _colorings_numpy(n, edges, k, chunk=1 << 20):
    total = 0
    count = k**n
    powers = k ** np.arange(n, dtype=np.int64)
    for start in range(0, count, chunk):
        codes = np.arange(start, min(start + chunk, count), dtype=np.int64)
        colors = (codes[:, None] // powers[None, :]) % k
        bad = np.zeros(len(codes), dtype=bool)
        for row in edges:
            verts = row[row >= 0]
            block = colors[:, verts]
            bad |= np.all(block == block[:, :1], axis=1)
        total += int(np.count_nonzero(~bad))
    return total


def count_proper_colorings(n: int, edge_masks, k: int, *, backend: str | None = None) -> int:
    """Number of maps ``[n] -> [k]`` with no monochromatic edge."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if n == 0:
        return 1
    if k == 0:
        return 0
    if k**n > MAX_COLORINGS:
        raise BudgetExceeded(f"{k}^{n} colorings exceed the enumeration budget {MAX_COLORINGS}")
    edges = _edge_table(n, edge_masks)
    if _pick(backend) == "numba":
        apply_thread_cap()
        return int(_colorings_numba(n, edges, k))
    return _colorings_numpy(n, edges, k)


# ------------------------------------------------------ cube faces off the box


def _compat_array(n: int, edge_masks) -> np.ndarray:
    subsets = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for j, f in enumerate(edge_masks):
        inter = subsets & f
        out |= ((inter == 0) | (inter == f)).astype(np.int64) << j
    return out


@njit(cache=True)
def _cube_dp_numba(n, compat, num_masks):
    size = 1 << n
    cur = np.zeros((size, num_masks), dtype=np.int64)
    full = num_masks - 1
    for a in range(size):
        cur[a, compat[a] & full] += 1
    out = np.zeros(n + 1, dtype=np.int64)
    for length in range(n + 1):
        s = 0
        for a in range(size):
            s += cur[a, 0]
        out[length] = s
        if length == n:
            break
        # subset sums over proper subsets of each b
        zeta = cur.copy()
        for bit in range(n):
            step = 1 << bit
            for b in range(size):
                if b & step:
                    for m in range(num_masks):
                        zeta[b, m] += zeta[b ^ step, m]
        nxt = np.zeros((size, num_masks), dtype=np.int64)
        for b in range(size):
            cb = compat[b]
            for m in range(num_masks):
                c = zeta[b, m] - cur[b, m]
                if c:
                    nxt[b, m & cb] += c
        cur = nxt
    return out


def _cube_dp_numpy(n, compat, num_masks, dtype=np.int64):
    size = 1 << n
    full = num_masks - 1
    cur = np.zeros((size, num_masks), dtype=dtype)
    np.add.at(cur, (np.arange(size), compat & full), 1)
    masks = np.arange(num_masks, dtype=np.int64)
    target = (masks[None, :] & compat[:, None]).ravel()
    rows = np.repeat(np.arange(size), num_masks)
    out = np.zeros(n + 1, dtype=dtype)
    for length in range(n + 1):
        out[length] = cur[:, 0].sum()
        if length == n:
            break
        # subset-sum (zeta) transform, then drop each set's own term
        zeta = cur.copy()
        for bit in range(n):
            step = 1 << bit
            view = zeta.reshape(-1, 2, step, num_masks)
            view[:, 1] += view[:, 0]
        strict = zeta - cur
        nxt = np.zeros_like(cur)
        np.add.at(nxt, (rows, target), strict.ravel())
        cur = nxt
    return out


def _max_chain_count(n: int) -> int:
    return max(
        sum((-1) ** j * comb(i, j) * (i - j + 2) ** n for j in range(i + 1)) for i in range(n + 1)
    )


def cube_faces_outside_box(n: int, edge_masks, *, backend: str | None = None) -> list[int]:
    """Per dimension ``i = 0..n``: faces of the braid-triangulated n-cube that
    lie in none of the diagonal subcomplexes of the given edges.

    With no edges this is the full face count of the cube.
    """
    num_masks = 1 << len(edge_masks)
    if (1 << n) * num_masks > MAX_DP_CELLS:
        raise BudgetExceeded(f"dynamic programme over 2^{n} x 2^{len(edge_masks)} cells is too large")
    compat = _compat_array(n, edge_masks)
    if _max_chain_count(n) >= INT64_LIMIT:
        # promote: same numpy algorithm on Python integers
        return [int(x) for x in _cube_dp_numpy(n, compat, num_masks, dtype=object)]
    if _pick(backend) == "numba":
        out = _cube_dp_numba(n, compat, num_masks)
    else:
        out = _cube_dp_numpy(n, compat, num_masks)
    return [int(x) for x in out]


def _pick(backend: str | None) -> str:
    if backend is None:
        return "numba" if numba_enabled() else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not numba_enabled():
        return "numpy"
    return backend
