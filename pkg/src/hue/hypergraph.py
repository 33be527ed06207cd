"""Hypergraphs on the vertex set [n], their validation and component census."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

__all__ = [
    "Hypergraph",
    "HypergraphError",
    "IsolatedVertexWarning",
    "ComponentPartition",
    "parse_hypergraph",
    "component_partition",
    "s_table",
    "generate_family",
    "FAMILIES",
]


class HypergraphError(ValueError):
    """Raised when an input violates the standing assumptions on hypergraphs."""


class IsolatedVertexWarning(UserWarning):
    pass


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _fmt_edge(edge) -> str:
    return "{" + ",".join(str(v) for v in edge) + "}"


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph on ``1..n``.

    Edges are stored as sorted tuples, the edge list itself sorted
    lexicographically. Construct through :func:`Hypergraph.build` (or the
    parsers) so that the invariants are checked.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_masks", tuple(mask_of(e) for e in self.edges))

    @classmethod
    def build(cls, n, edges, *, reduce_to_minimal: bool = False, warn: bool = True) -> Hypergraph:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise HypergraphError(f"vertex count must be a positive integer, got {n!r}")
        canon = set()
        for raw in edges:
            try:
                edge = tuple(sorted({int(v) for v in raw}))
            except (TypeError, ValueError):
                raise HypergraphError(f"malformed edge {raw!r}") from None
            if len(edge) != len(list(raw)):
                raise HypergraphError(f"edge {_fmt_edge(raw)} repeats a vertex")
            for v in edge:
                if not 1 <= v <= n:
                    raise HypergraphError(f"edge {_fmt_edge(edge)}: vertex {v} outside 1..{n}")
            if len(edge) < 2:
                raise HypergraphError(f"edge {_fmt_edge(edge)} is a loop (fewer than 2 vertices)")
            if edge in canon:
                raise HypergraphError(f"duplicate edge {_fmt_edge(edge)}")
            canon.add(edge)
        ordered = sorted(canon)
        nested = [
            (f, g) for f in ordered for g in ordered
            if f != g and set(f) < set(g)
        ]
        if nested:
            if not reduce_to_minimal:
                f, g = nested[0]
                raise HypergraphError(f"nested edges {_fmt_edge(f)} is a proper subset of {_fmt_edge(g)}")
            drop = {g for _, g in nested}
            ordered = [e for e in ordered if e not in drop]
        hg = cls(n, tuple(ordered))
        if warn:
            iso = hg.isolated_vertices()
            if iso:
                warnings.warn(
                    f"isolated vertices {list(iso)} (allowed, but excluded by the usual convention)",
                    IsolatedVertexWarning,
                    stacklevel=2,
                )
        return hg

    @property
    def masks(self) -> tuple[int, ...]:
        """Edges as bitmasks, bit ``v-1`` standing for vertex ``v``."""
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def min_edge_size(self) -> int:
        return min(len(e) for e in self.edges)

    @property
    def max_edge_size(self) -> int:
        return max(len(e) for e in self.edges)

    def is_uniform(self) -> bool:
        return len({len(e) for e in self.edges}) <= 1

    def isolated_vertices(self) -> tuple[int, ...]:
        covered = 0
        for m in self._masks:
            covered |= m
        return vertices_of(self.full_mask & ~covered)

    def sub(self, edges) -> Hypergraph:
        """Subhypergraph on the same vertex set with the given edges."""
        return Hypergraph.build(self.n, edges, warn=False)

    def to_json(self) -> dict:
        return {"vertices": self.n, "edges": [list(e) for e in self.edges]}

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines += ["edge " + " ".join(str(v) for v in e) for e in self.edges]
        return "\n".join(lines) + "\n"

    def __str__(self):
        sep = "," if self.n >= 10 else ""
        body = ", ".join(sep.join(str(v) for v in e) for e in self.edges)
        return f"H([{self.n}]; {body})"


def parse_hypergraph(text: str, *, reduce_to_minimal: bool = False) -> Hypergraph:
    """Parse either the JSON form or the line-based ``n``/``edge`` form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"malformed JSON: {exc}") from None
        if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
            raise HypergraphError('JSON input needs keys "vertices" and "edges"')
        edges = doc["edges"]
        if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
            raise HypergraphError('"edges" must be a list of vertex lists')
        for e in edges:
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
                raise HypergraphError(f"malformed edge {e!r}: vertices must be integers")
        return Hypergraph.build(doc["vertices"], edges, reduce_to_minimal=reduce_to_minimal)

    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            values = [int(tok) for tok in rest]
        except ValueError:
            raise HypergraphError(f"line {lineno}: non-integer token in {line!r}") from None
        if head == "n":
            if n is not None or len(values) != 1:
                raise HypergraphError(f"line {lineno}: expected a single 'n <int>' line")
            n = values[0]
        elif head == "edge":
            edges.append(values)
        else:
            raise HypergraphError(f"line {lineno}: unknown directive {head!r}")
    if n is None:
        raise HypergraphError("missing 'n <int>' line")
    return Hypergraph.build(n, edges, reduce_to_minimal=reduce_to_minimal)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of ``([n], S)`` (ambient) or of ``H_S`` (induced).

    ``blocks`` are sorted vertex tuples, ordered by their smallest vertex.
    """

    blocks: tuple[tuple[int, ...], ...]
    ambient: bool

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def merge_pattern(self) -> frozenset[tuple[int, ...]]:
        return frozenset(b for b in self.blocks if len(b) > 1)


def _components(vertices, edges) -> list[tuple[int, ...]]:
    uf = _UnionFind(vertices)
    for e in edges:
        for v in e[1:]:
            uf.union(e[0], v)
    groups: dict[int, list[int]] = {}
    for v in vertices:
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def component_partition(hg: Hypergraph, subset, mode: str = "ambient") -> ComponentPartition:
    subset = [tuple(sorted(e)) for e in subset]
    known = set(hg.edges)
    for e in subset:
        if e not in known:
            raise HypergraphError(f"edge {_fmt_edge(e)} is not an edge of {hg}")
    if mode == "ambient":
        vertices = range(1, hg.n + 1)
    elif mode == "induced":
        vertices = sorted({v for e in subset for v in e})
    else:
        raise ValueError(f"mode must be 'ambient' or 'induced', not {mode!r}")
    return ComponentPartition(tuple(_components(vertices, subset)), mode == "ambient")


def ambient_component_count(n: int, masks) -> int:
    """Number of components of ``([n], S)`` for edges given as bitmasks."""
    merged: list[int] = []
    for m in masks:
        keep = []
        for block in merged:
            if block & m:
                m |= block
            else:
                keep.append(block)
        keep.append(m)
        merged = keep
    covered = 0
    for block in merged:
        covered |= block
    return len(merged) + n - covered.bit_count()


def edge_subsets(num_edges: int):
    """Nonempty-or-empty edge index subsets in binary-counter order."""
    for code in range(1 << num_edges):
        yield code, [j for j in range(num_edges) if code >> j & 1]


def s_table(hg: Hypergraph) -> list[list[int]]:
    """``table[a][b]`` = number of a-subsets of edges with b ambient components."""
    m, n = hg.num_edges, hg.n
    table = [[0] * (n + 1) for _ in range(m + 1)]
    masks = hg.masks
    for _, idx in edge_subsets(m):
        b = ambient_component_count(n, [masks[j] for j in idx])
        table[len(idx)][b] += 1
    for a in range(m + 1):
        assert sum(table[a]) == comb(m, a)
    return table


# ---------------------------------------------------------------- families

TORUS9_EDGES = ["12347", "12358", "12369", "14567", "24568", "34569", "14789", "25789", "36789"]


def _single_edge(n: int, s: int) -> Hypergraph:
    if not 2 <= s <= n:
        raise HypergraphError(f"single_edge needs 2 <= s <= n, got n={n}, s={s}")
    return Hypergraph.build(n, [range(1, s + 1)], warn=False)


def _complete_graph(n: int) -> Hypergraph:
    if n < 2:
        raise HypergraphError("complete_graph needs n >= 2")
    return Hypergraph.build(n, combinations(range(1, n + 1), 2))


def _multi_component(*sizes: int) -> Hypergraph:
    m = len(sizes)
    if m < 2:
        raise HypergraphError("multi_component needs at least two block sizes")
    if any(s < 1 for s in sizes) or list(sizes) != sorted(sizes, reverse=True):
        raise HypergraphError(f"block sizes must be positive and non-increasing, got {sizes}")
    a = max(3, sizes[0])
    n = m * a
    edges = []
    for i, ai in enumerate(sizes, 1):
        lo = (m - i) * a
        base = list(range(1, lo + 1)) + list(range((m - i + 1) * a + 1, m * a + 1))
        edges += [base + [j] for j in range(lo + 1, lo + ai + 1)]
    return Hypergraph.build(n, edges, warn=False)


def _torus9() -> Hypergraph:
    return Hypergraph.build(9, [[int(c) for c in e] for e in TORUS9_EDGES])


def _paper_6_nonpart() -> Hypergraph:
    return Hypergraph.build(6, [[1, 2, 3], [3, 4, 5], [1, 5, 6]])


def _paper_6_noncm() -> Hypergraph:
    return Hypergraph.build(6, [[1, 2, 3], [2, 3, 4], [2, 4, 5], [4, 5, 6]])


FAMILIES = {
    "single_edge": _single_edge,
    "complete_graph": _complete_graph,
    "multi_component": _multi_component,
    "torus9": _torus9,
    "paper_6_nonpart": _paper_6_nonpart,
    "paper_6_noncm": _paper_6_noncm,
}


def generate_family(name: str, *params: int) -> Hypergraph:
    try:
        ctor = FAMILIES[name]
    except KeyError:
        raise HypergraphError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    try:
        return ctor(*params)
    except TypeError as exc:
        raise HypergraphError(f"bad parameters for {name}: {exc}") from None
