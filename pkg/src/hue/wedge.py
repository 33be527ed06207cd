"""Intersection poset of the edge-sphere cover and the wedge-decomposition
Betti prediction, cross-checked against direct homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import SimplicialComplex, build_coloring_complex, edge_sphere_complex, order_complex
from .hypergraph import Hypergraph, HypergraphError, edge_subsets, vertices_of
from .topology import rational_betti

__all__ = ["PosetElement", "IntersectionPoset", "intersection_poset", "wedge_decomposition", "MAX_EDGES"]

MAX_EDGES = 20


def _induced_pattern(masks) -> frozenset[int]:
    """Vertex sets (bitmasks) of the components of the subhypergraph spanned by ``masks``."""
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
    return frozenset(merged)


@dataclass
class PosetElement:
    pattern: frozenset[int]
    dim: int
    representative: tuple[tuple[int, ...], ...]
    subsets: int = 1
    _complex: SimplicialComplex | None = field(default=None, repr=False)

    @property
    def size(self) -> tuple[int, int]:
        """(vertices covered, number of blocks), a key compatible with the order."""
        covered = 0
        for b in self.pattern:
            covered |= b
        return covered.bit_count(), -len(self.pattern)

    def below(self, other: PosetElement) -> bool:
        """Strictly below: every block sits inside a block of ``other``."""
        if self.pattern == other.pattern:
            return False
        return all(any(b & ~c == 0 for c in other.pattern) for b in self.pattern)

    def blocks(self) -> list[list[int]]:
        return sorted(list(vertices_of(b)) for b in self.pattern)

    def to_json(self) -> dict:
        return {
            "merge_pattern": self.blocks(),
            "d": self.dim,
            "representative": [list(e) for e in self.representative],
            "subsets": self.subsets,
        }


@dataclass
class IntersectionPoset:
    hypergraph: Hypergraph
    elements: list[PosetElement]

    @property
    def top(self) -> PosetElement:
        return self.elements[-1]

    def lower(self, p: PosetElement) -> list[PosetElement]:
        return [q for q in self.elements if q.below(p)]

    def subcomplex(self, p: PosetElement) -> SimplicialComplex:
        if p._complex is None:
            p._complex = edge_sphere_complex(self.hypergraph, p.representative)
        return p._complex

    def verify(self) -> None:
        """Check dimensions and that the pattern order matches reverse inclusion of face sets."""
        faces = {}
        for p in self.elements:
            K = self.subcomplex(p)
            if K.dim != p.dim:
                raise AssertionError(f"{p.blocks()}: dimension {K.dim}, expected {p.dim}")
            faces[id(p)] = K.labelled_faces()
        for p in self.elements:
            for q in self.elements:
                if p is q:
                    continue
                # U_q ⊆ U_p exactly when p lies below q
                if (faces[id(q)] <= faces[id(p)]) != p.below(q):
                    raise AssertionError(f"order mismatch between {p.blocks()} and {q.blocks()}")

    def minimal_elements(self) -> list[PosetElement]:
        return [p for p in self.elements if not self.lower(p)]


def intersection_poset(hg: Hypergraph, *, verify: bool = False) -> IntersectionPoset:
    """All distinct intersections of edge spheres, keyed by induced merge pattern."""
    if not hg.edges:
        raise HypergraphError("hypergraph has no edges")
    if hg.num_edges > MAX_EDGES:
        raise HypergraphError(f"{hg.num_edges} edges exceed the 2^{MAX_EDGES} subset budget")
    n = hg.n
    found: dict[frozenset, PosetElement] = {}
    for code, idx in edge_subsets(hg.num_edges):
        if not code:
            continue
        pattern = _induced_pattern([hg.masks[j] for j in idx])
        if pattern in found:
            found[pattern].subsets += 1
            continue
        sizes = sum(b.bit_count() for b in pattern)
        d = n - sizes + len(pattern) - 2
        found[pattern] = PosetElement(pattern, d, tuple(hg.edges[j] for j in idx))
    elements = sorted(found.values(), key=lambda p: (p.size, sorted(p.blocks())))
    poset = IntersectionPoset(hg, elements)
    if verify:
        poset.verify()
    return poset


def wedge_decomposition(hg: Hypergraph, *, direct: bool = True, poset: IntersectionPoset | None = None,
                        complex_: SimplicialComplex | None = None) -> dict:
    """Betti numbers predicted by the wedge of joins ``S^{d_p} * Δ(P_{<p})``.

    Joining with ``S^d`` shifts reduced homology up by ``d + 1``; the order
    complex of an empty interval is ``{∅}`` with a single class in degree -1.
    """
    poset = intersection_poset(hg) if poset is None else poset
    top_dim = hg.n - hg.min_edge_size - 1
    predicted = {d: 0 for d in range(-1, top_dim + 1)}
    summands = []
    euler = 0
    for p in poset.elements:
        lower = poset.lower(p)
        oc = order_complex(lower, lambda a, b: a.below(b))
        b = rational_betti(oc).betti
        contrib = {}
        for j, beta in b.items():
            if beta:
                deg = j + p.dim + 1
                contrib[deg] = contrib.get(deg, 0) + beta
                predicted[deg] = predicted.get(deg, 0) + beta
        chi = sum(-beta if j % 2 else beta for j, beta in b.items())
        euler += -chi if (p.dim + 1) % 2 else chi
        summands.append({
            "element": p.to_json(),
            "lower_interval_size": len(lower),
            "order_complex_f": list(oc.f_vector),
            "order_complex_betti": {str(j): v for j, v in sorted(b.items()) if v},
            "contribution": {str(k): v for k, v in sorted(contrib.items())},
        })
    out = {
        "poset_size": len(poset.elements),
        "summands": summands,
        "predicted_betti": {str(d): v for d, v in sorted(predicted.items())},
        "predicted_euler": euler,
    }
    if direct:
        K = build_coloring_complex(hg) if complex_ is None else complex_
        db = rational_betti(K).betti
        keys = sorted(set(db) | set(predicted))
        out["direct_betti"] = {str(d): db.get(d, 0) for d in keys}
        out["agree"] = all(db.get(d, 0) == predicted.get(d, 0) for d in keys)
        out["direct_euler"] = sum(-v if d % 2 else v for d, v in db.items())
    return out
