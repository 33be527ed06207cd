"""Exact (co)homology of simplicial complexes and the structural diagnostics
built on it: cup products, connectedness, the Reisner test and the
negative-h obstruction to partitionability.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import Face, SimplicialComplex, build_coloring_complex, link_of_face
from .hypergraph import Hypergraph, _UnionFind, vertices_of
from .kernels import BudgetExceeded
from .linalg import Reduction, prime_power_factors, reduce_columns, reduce_vector, smith_invariants

__all__ = [
    "boundary_columns",
    "coboundary_columns",
    "HomologySummary",
    "integral_homology",
    "rational_betti",
    "Cohomology",
    "rational_cohomology",
    "cup",
    "coboundary",
    "cup_product_analysis",
    "compatibility_components",
    "sphere_pieces",
    "connectedness_check",
    "reisner_cm_check",
    "partitionability_obstruction",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 5_000_000


# ----------------------------------------------------------- chain complex


def boundary_columns(K: SimplicialComplex, d: int) -> list[dict]:
    """Columns of the reduced boundary map from d-chains to (d-1)-chains.

    ``d = 0`` gives the augmentation onto the single (-1)-face, row 0.
    """
    if d < 0 or d > K.dim:
        return []
    if d == 0:
        return [{0: 1} for _ in K.faces[0]]
    index = K.index[d - 1]
    cols = []
    for face in K.faces[d]:
        col = {}
        for i in range(d + 1):
            col[index[face[:i] + face[i + 1:]]] = -1 if i % 2 else 1
        cols.append(col)
    return cols


def coboundary_columns(K: SimplicialComplex, p: int) -> list[dict]:
    """Columns of the coboundary from p-cochains to (p+1)-cochains (transpose of the boundary)."""
    if p < -1 or p > K.dim:
        return []
    size = 1 if p == -1 else len(K.faces[p])
    cols = [{} for _ in range(size)]
    for j, col in enumerate(boundary_columns(K, p + 1)):
        for r, v in col.items():
            cols[r][j] = v
    return cols


def _n_faces(K: SimplicialComplex, d: int) -> int:
    if d == -1:
        return 1
    return len(K.faces[d]) if 0 <= d <= K.dim else 0


@dataclass
class HomologySummary:
    """Betti numbers and torsion per dimension (reduced unless ``reduced`` is False)."""

    reduced: bool
    betti: dict[int, int]
    torsion: dict[int, list[int]] = field(default_factory=dict)

    def betti_vector(self, lo: int = 0, hi: int | None = None) -> tuple[int, ...]:
        hi = max(self.betti, default=lo) if hi is None else hi
        return tuple(self.betti.get(d, 0) for d in range(lo, hi + 1))

    def euler(self) -> int:
        return sum(-b if d % 2 else b for d, b in self.betti.items())

    def has_torsion(self) -> bool:
        return any(self.torsion.values())

    def to_json(self) -> dict:
        return {
            "reduced": self.reduced,
            "betti": {str(d): str(b) for d, b in sorted(self.betti.items())},
            "torsion": {
                str(d): [str(q) for t in ts for q in prime_power_factors(t)]
                for d, ts in sorted(self.torsion.items())
            },
        }


def _budget_check(K: SimplicialComplex, budget: int | None):
    if budget is not None and K.num_faces > budget:
        raise BudgetExceeded(f"complex has {K.num_faces} faces, budget is {budget}")


def integral_homology(K: SimplicialComplex, reduced: bool = True, *, budget: int | None = None) -> HomologySummary:
    """Homology over Z from the Smith normal forms of the boundary maps."""
    _budget_check(K, budget)
    lo = -1 if reduced else 0
    top = K.dim
    ranks = {}
    torsion_of = {}
    for d in range(max(lo + 1, 0), top + 1):
        if d == 0 and not reduced:
            ranks[0] = 0
            continue
        inv = smith_invariants(boundary_columns(K, d))
        ranks[d] = len(inv)
        torsion_of[d - 1] = sorted(x for x in inv if x > 1)
    betti = {}
    for d in range(lo, top + 1):
        b = _n_faces(K, d) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        betti[d] = b
    torsion = {d: ts for d, ts in torsion_of.items() if ts and d >= lo}
    return HomologySummary(reduced, betti, torsion)


def _reduce_with_clearing(K: SimplicialComplex, cob: bool, track: bool = False) -> dict[int, Reduction]:
    """Column-reduce every (co)boundary matrix, using pivots of the neighbour to clear.

    Boundary maps run top-down, coboundary maps bottom-up, so each matrix
    can skip the columns that the previous one already proved to be cycles.
    """
    out = {}
    if cob:
        prev = None
        for p in range(-1, K.dim + 1):
            skip = prev.pivots.keys() if prev is not None else ()
            out[p] = prev = reduce_columns(coboundary_columns(K, p), track=track, skip=skip)
    else:
        prev = None
        for d in range(K.dim, -1, -1):
            skip = prev.pivots.keys() if prev is not None else ()
            out[d] = prev = reduce_columns(boundary_columns(K, d), track=track, skip=skip)
    return out


def rational_betti(K: SimplicialComplex, reduced: bool = True, *, budget: int | None = None) -> HomologySummary:
    """Betti numbers over Q by column reduction (independent of the Smith route)."""
    _budget_check(K, budget)
    reds = _reduce_with_clearing(K, cob=False)
    ranks = {d: r.rank for d, r in reds.items()}
    if not reduced:
        ranks[0] = 0
    lo = -1 if reduced else 0
    betti = {d: _n_faces(K, d) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(lo, K.dim + 1)}
    return HomologySummary(reduced, betti)


# --------------------------------------------------------------- cohomology


@dataclass
class Cohomology:
    """Reduced rational cohomology with explicit integral cocycle representatives.

    ``basis[p]`` lists cocycles (sparse ``{p-face index: int}``) whose classes
    form a basis of the degree-p group; ``coboundaries[p]`` is an echelon
    basis of the p-coboundaries, used for membership tests.
    """

    complex: SimplicialComplex
    basis: dict[int, list[dict]]
    coboundaries: dict[int, dict]

    def rank(self, p: int) -> int:
        return len(self.basis.get(p, []))

    def is_coboundary(self, cochain: dict, p: int) -> bool:
        return not reduce_vector(cochain, self.coboundaries.get(p, {}))


def rational_cohomology(K: SimplicialComplex, *, budget: int | None = None) -> Cohomology:
    _budget_check(K, budget)
    reds = _reduce_with_clearing(K, cob=True, track=True)
    basis = {}
    cobs = {}
    for p in range(-1, K.dim + 1):
        red = reds[p]
        # columns that reduced to zero and were not cleared are the essential classes
        basis[p] = [red.kernel[j] for j in sorted(red.kernel)]
        cobs[p + 1] = red.pivots
    cobs.setdefault(-1, {})
    return Cohomology(K, basis, cobs)


def coboundary(K: SimplicialComplex, cochain: dict, p: int) -> dict:
    """``(δα)(v_0..v_{p+1}) = sum_i (-1)^i α(v_0..^v_i..v_{p+1})``."""
    out = {}
    if p + 1 > K.dim:
        return out
    index = K.index[p] if p >= 0 else None
    for j, face in enumerate(K.faces[p + 1]):
        s = 0
        if p == -1:
            s = cochain.get(0, 0)
        else:
            for i in range(p + 2):
                v = cochain.get(index[face[:i] + face[i + 1:]])
                if v:
                    s += -v if i % 2 else v
        if s:
            out[j] = s
    return out


def cup(K: SimplicialComplex, alpha: dict, p: int, beta: dict, q: int) -> dict:
    """Front-face/back-face cup product on the ordered complex."""
    out = {}
    d = p + q
    if d > K.dim or p < 0 or q < 0:
        return out
    ip, iq = K.index[p], K.index[q]
    for j, face in enumerate(K.faces[d]):
        a = alpha.get(ip[face[: p + 1]])
        if not a:
            continue
        b = beta.get(iq[face[p:]])
        if b:
            out[j] = a * b
    return out


def cup_product_analysis(K: SimplicialComplex, *, budget: int | None = None,
                         max_pairs: int | None = None, stop_at_first: bool = False) -> dict:
    """Scan cup products of basis classes in bidegrees ``p <= q`` with ``p+q <= dim``.

    A product of positive-degree classes that is not a coboundary shows the
    complex is not homotopy equivalent to a wedge of spheres.
    """
    H = rational_cohomology(K, budget=budget)
    ranks = {p: H.rank(p) for p in range(0, K.dim + 1)}
    table = []
    witness = None
    tested = 0
    for total in range(2, K.dim + 1):
        for p in range(1, total // 2 + 1):
            q = total - p
            pairs = nontrivial = 0
            for i, a in enumerate(H.basis.get(p, [])):
                for j, b in enumerate(H.basis.get(q, [])):
                    if p == q and j < i:
                        continue
                    if max_pairs is not None and tested >= max_pairs:
                        raise BudgetExceeded(f"more than {max_pairs} cup products requested")
                    tested += 1
                    pairs += 1
                    prod = cup(K, a, p, b, q)
                    assert not coboundary(K, prod, total), "cup of cocycles must be a cocycle"
                    if prod and not H.is_coboundary(prod, total):
                        nontrivial += 1
                        if witness is None:
                            witness = {"bidegree": [p, q], "classes": [i, j], "product_support": len(prod)}
                        if stop_at_first:
                            break
                if stop_at_first and witness:
                    break
            table.append({"bidegree": [p, q], "pairs": pairs, "nontrivial": nontrivial})
            if stop_at_first and witness:
                break
        if stop_at_first and witness:
            break
    return {
        "cohomology_ranks": {str(p): r for p, r in ranks.items()},
        "products": table,
        "witness": witness,
        "all_trivial": witness is None,
        "wedge_of_spheres": False if witness is not None else None,
    }


# ------------------------------------------------------------ connectedness


def compatibility_components(hg: Hypergraph) -> list[list[tuple[int, ...]]]:
    """Components of the graph on edges joining F, F' unless F∪F' = [n] with F∩F' ≠ ∅."""
    full = hg.full_mask
    uf = _UnionFind(range(hg.num_edges))
    masks = hg.masks
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            a, b = masks[i], masks[j]
            if (a | b) != full or not a & b:
                uf.union(i, j)
    groups: dict[int, list] = {}
    for i in range(len(masks)):
        groups.setdefault(uf.find(i), []).append(hg.edges[i])
    return sorted(groups.values())


def _compatible(a: int, f: int) -> bool:
    return not a & f or f & ~a == 0


def sphere_pieces(hg: Hypergraph) -> list[list[str]]:
    """Components of Δ_H assembled from connected pieces of the edge spheres.

    An edge sphere ``Q_F`` has dimension ``n - |F| - 1``. For ``|F| <= n-2`` it
    is connected and two such spheres meet exactly as in the edge graph above.
    For ``|F| = n-1`` it is the two points ``F`` and ``[n] minus F``, which
    are kept apart; for ``|F| = n`` it is empty. Each returned component
    lists its pieces as ``"Q_F"`` or ``"{A}"``.
    """
    n, full = hg.n, hg.full_mask
    spheres = [(i, m) for i, m in enumerate(hg.masks) if m.bit_count() <= n - 2]
    points = sorted({a for m in hg.masks if m.bit_count() == n - 1 for a in (m, full & ~m)},
                    key=lambda a: (a.bit_count(), vertices_of(a)))
    labels = [f"Q_{''.join(map(str, hg.edges[i])) if n < 10 else ','.join(map(str, hg.edges[i]))}"
              for i, _ in spheres]
    labels += ["{" + ",".join(map(str, vertices_of(a))) + "}" for a in points]
    uf = _UnionFind(range(len(labels)))
    for x, (_, a) in enumerate(spheres):
        for y in range(x + 1, len(spheres)):
            b = spheres[y][1]
            if (a | b) != full or not a & b:
                uf.union(x, y)
        for y, p in enumerate(points, len(spheres)):
            if _compatible(p, a):
                uf.union(x, y)
    groups: dict[int, list] = {}
    for x, lab in enumerate(labels):
        groups.setdefault(uf.find(x), []).append(lab)
    return list(groups.values())


def connectedness_check(hg: Hypergraph, *, budget: int | None = DEFAULT_BUDGET, K=None) -> dict:
    """Connectedness from the edge graph, refined for edges of size ``n - 1``.

    ``edge_graph_connected`` is the plain pairwise criterion on edges, valid
    when every edge sphere is connected (all edges of size at most ``n-2``).
    ``connected`` uses :func:`sphere_pieces` and is valid in general.
    """
    comps = compatibility_components(hg)
    pieces = sphere_pieces(hg)
    applies = hg.max_edge_size <= hg.n - 2
    report = {
        "connected": len(pieces) == 1,
        "components": [[list(e) for e in c] for c in comps],
        "component_count": len(pieces),
        "edge_graph_connected": len(comps) == 1,
        "edge_graph_applies": applies,
        "pieces": pieces,
        "cross_check": None,
        "reduced_betti_0": None,
    }
    try:
        K = build_coloring_complex(hg) if K is None else K
        _budget_check(K, budget)
    except BudgetExceeded:
        return report
    b0 = _small_betti(K, 0).get(0, 0)
    # cross-check reduced H_0 from integral homology of the 1-skeleton as well
    if K.dim >= 0:
        small = SimplicialComplex(K.ground, K.faces[:2], n=K.n)
        assert integral_homology(small).betti.get(0, 0) == b0
    report["reduced_betti_0"] = b0
    ok = (b0 == len(pieces) - 1) if pieces else K.dim < 0
    if applies:
        ok = ok and (b0 == len(comps) - 1)
    report["cross_check"] = ok
    return report


# ------------------------------------------------------------------ Reisner


def _small_betti(K: SimplicialComplex, upto: int) -> dict[int, int]:
    """Reduced rational Betti numbers in degrees -1..upto, using only the needed skeleton."""
    if upto < -1:
        return {}
    upto = min(upto, K.dim)
    if upto <= 0:
        # components via union-find on the 1-skeleton
        if K.dim < 0:
            return {-1: 1, 0: 0}
        uf = _UnionFind(range(len(K.faces[0])))
        if K.dim >= 1:
            for a, b in K.faces[1]:
                uf.union(a, b)
        comps = len({uf.find(v) for v in range(len(K.faces[0]))})
        return {-1: 0, 0: comps - 1}
    skel = SimplicialComplex(K.ground, K.faces[: upto + 2])
    b = rational_betti(skel).betti
    return {d: b[d] for d in range(-1, upto + 1)}


def reisner_cm_check(K: SimplicialComplex, *, budget: int = DEFAULT_BUDGET, faces=None,
                     collect_all: bool = False) -> dict:
    """Cohen-Macaulayness over Q by vanishing of link homology below the top degree.

    Nonempty faces are scanned by increasing dimension in complex order and
    the empty face (whose link is the whole complex) comes last, so local
    witnesses with small links are found first. The first face whose link
    has reduced homology below its dimension is reported. ``faces``
    restricts the scan (useful to certify a known witness); ``collect_all``
    keeps scanning and lists every witness.
    """
    if not K.is_pure():
        facets = K.facets()
        low = min(facets, key=len)
        return {
            "verdict": "not-CM",
            "reason": "non-pure",
            "witness": _face_repr(K, low),
            "witness_link_betti": None,
            "faces_examined": 0,
        }
    spent = 0
    witnesses = []
    if faces is None:
        todo = [f for level in K.faces for f in level] + [()]
    else:
        todo = faces
    examined = 0
    for face in todo:
        if isinstance(face, Face):
            face = K.face_of(face)
        lk = link_of_face(K, face)
        spent += lk.num_faces
        if spent > budget:
            return {"verdict": "budget-exceeded", "reason": f"link faces exceeded {budget}",
                    "witness": None, "witness_link_betti": None, "faces_examined": examined}
        examined += 1
        betti = _small_betti(lk, lk.dim - 1)
        bad = {d: b for d, b in betti.items() if b and d < lk.dim}
        if bad:
            witnesses.append({"face": _face_repr(K, face), "link_dim": lk.dim,
                              "link_betti": {str(d): b for d, b in sorted(betti.items())}})
            if not collect_all:
                break
    if witnesses:
        first = witnesses[0]
        out = {"verdict": "not-CM", "reason": "link homology below top degree",
               "witness": first["face"], "witness_link_betti": first["link_betti"],
               "faces_examined": examined}
        if collect_all:
            out["witnesses"] = witnesses
        return out
    verdict = "CM-over-Q" if faces is None else "no-witness-among-given-faces"
    return {"verdict": verdict, "reason": None, "witness": None, "witness_link_betti": None,
            "faces_examined": examined}


def _face_repr(K: SimplicialComplex, face) -> str:
    if not face:
        return "{}"
    if K.n is not None and all(0 < K.ground[v] < (1 << K.n) - 1 for v in face):
        return str(K.as_face(face))
    return str(list(K.vertex_labels(face)))


# -------------------------------------------------------- partitionability


def partitionability_obstruction(K: SimplicialComplex) -> dict:
    """A negative h-entry rules out a partition of the face poset into facet intervals."""
    h = K.h_vector
    for i, x in enumerate(h):
        if x < 0:
            return {"obstructed": True, "index": i, "value": x, "h_vector": list(h)}
    return {"obstructed": False, "index": None, "value": None, "h_vector": list(h),
            "note": "inconclusive: non-negative h-vector does not imply partitionability"}
