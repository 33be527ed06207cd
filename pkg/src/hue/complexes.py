"""Simplicial complexes built from chains in the Boolean lattice.

Every coloring-type complex here (the coloring complex, edge spheres and
their intersections, the braid-triangulated cube and its subcomplexes) has
subsets of ``[n]`` as vertices and strict chains of subsets as faces. Subsets
are handled as bitmasks; the vertex order is (cardinality, lexicographic),
which extends inclusion, so a sorted face tuple lists its chain bottom-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Hashable, Iterable, NamedTuple, Sequence

from .hypergraph import Hypergraph, HypergraphError, mask_of, vertices_of

__all__ = [
    "Face",
    "SimplicialComplex",
    "FHVectors",
    "build_coloring_complex",
    "edge_sphere_complex",
    "cube_complex",
    "subspace_complex",
    "box_complex",
    "link_of_face",
    "f_h_vectors",
    "h_from_f",
    "order_complex",
    "subset_key",
]


def subset_key(mask: int) -> tuple:
    return (mask.bit_count(), vertices_of(mask))


def _fmt_block(mask: int, n: int) -> str:
    sep = "," if n >= 10 else ""
    return sep.join(str(v) for v in vertices_of(mask))


@dataclass(frozen=True)
class Face:
    """A strict chain ``A_1 < ... < A_l`` of subsets of ``[n]`` (bitmasks).

    For chains of nonempty proper subsets this is the same thing as the
    ordered set partition ``A_1 | A_2 - A_1 | ... | [n] - A_l``.
    """

    n: int
    chain: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        for a, b in zip(self.chain, self.chain[1:]):
            if a & ~b or a == b:
                raise ValueError(f"not a strict chain: {self.chain}")
        for a in self.chain:
            if a & ~full:
                raise ValueError(f"subset {a:b} is not inside [{self.n}]")

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[Iterable[int]]) -> Face:
        masks = [mask_of(b) for b in blocks]
        full = (1 << n) - 1
        if any(m == 0 for m in masks):
            raise ValueError("empty block")
        total = 0
        for m in masks:
            if total & m:
                raise ValueError("blocks overlap")
            total |= m
        if total != full:
            raise ValueError(f"blocks do not cover [{n}]")
        chain, acc = [], 0
        for m in masks[:-1]:
            acc |= m
            chain.append(acc)
        return cls(n, tuple(chain))

    @classmethod
    def parse(cls, n: int, text: str) -> Face:
        """Parse partition notation such as ``"123|456"`` or ``"1,2|3"``."""
        blocks = []
        for part in text.split("|"):
            part = part.strip()
            toks = part.split(",") if "," in part or n >= 10 else list(part)
            blocks.append([int(t) for t in toks])
        return cls.from_blocks(n, blocks)

    @property
    def dim(self) -> int:
        return len(self.chain) - 1

    @property
    def is_proper(self) -> bool:
        full = (1 << self.n) - 1
        return all(0 < a < full for a in self.chain)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_proper:
            raise ValueError("only chains of nonempty proper subsets are ordered partitions")
        full = (1 << self.n) - 1
        bounds = (0,) + self.chain + (full,)
        return tuple(vertices_of(b & ~a) for a, b in zip(bounds, bounds[1:]))

    def __str__(self):
        full = (1 << self.n) - 1
        bounds = (0,) + self.chain + (full,)
        return "|".join(_fmt_block(b & ~a, self.n) for a, b in zip(bounds, bounds[1:]))


class FHVectors(NamedTuple):
    f: tuple[int, ...]
    h: tuple[int, ...]


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    """h-vector of a complex from ``(f_{-1}, ..., f_{d-1})``, with ``d = len(f) - 1``."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


class SimplicialComplex:
    """A finite abstract simplicial complex.

    ``ground`` lists the vertex labels in their total order; faces are stored
    per dimension as sorted tuples of vertex indices. The empty face is always
    present, so ``SimplicialComplex(ground, [])`` is the complex ``{∅}``.
    """

    def __init__(self, ground: Sequence[Hashable], faces: Sequence[Iterable[tuple[int, ...]]], *, n: int | None = None):
        self.ground = tuple(ground)
        self.faces = tuple(tuple(sorted(set(level))) for level in faces)
        while self.faces and not self.faces[-1]:
            self.faces = self.faces[:-1]
        # ground size of the Boolean lattice, when vertices are subset bitmasks
        self.n = n

    @classmethod
    def from_facets(cls, ground, facets, *, n=None) -> SimplicialComplex:
        levels: dict[int, set] = {}
        stack = {tuple(sorted(f)) for f in facets}
        seen = set()
        while stack:
            face = stack.pop()
            if face in seen or not face:
                continue
            seen.add(face)
            levels.setdefault(len(face) - 1, set()).add(face)
            if len(face) > 1:
                for i in range(len(face)):
                    stack.add(face[:i] + face[i + 1:])
        top = max(levels, default=-1)
        return cls(ground, [levels.get(d, ()) for d in range(top + 1)], n=n)

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    @property
    def num_faces(self) -> int:
        return 1 + sum(len(level) for level in self.faces)

    @cached_property
    def index(self) -> tuple[dict[tuple[int, ...], int], ...]:
        return tuple({face: i for i, face in enumerate(level)} for level in self.faces)

    def __contains__(self, face) -> bool:
        face = tuple(face)
        if not face:
            return True
        d = len(face) - 1
        return d < len(self.faces) and face in self.index[d]

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labelled_faces() == other.labelled_faces()

    def __hash__(self):
        return hash(self.labelled_faces())

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector})"

    def labelled_faces(self) -> frozenset:
        g = self.ground
        return frozenset(tuple(g[i] for i in face) for level in self.faces for face in level)

    def iter_faces(self):
        yield ()
        for level in self.faces:
            yield from level

    @property
    def f_vector(self) -> tuple[int, ...]:
        return (1,) + tuple(len(level) for level in self.faces)

    @property
    def h_vector(self) -> tuple[int, ...]:
        return h_from_f(self.f_vector)

    def facets(self) -> list[tuple[int, ...]]:
        out = []
        for d, level in enumerate(self.faces):
            covered = set()
            if d + 1 < len(self.faces):
                for big in self.faces[d + 1]:
                    for i in range(len(big)):
                        covered.add(big[:i] + big[i + 1:])
            out += [f for f in level if f not in covered]
        return out

    def is_pure(self) -> bool:
        return all(len(f) == self.dim + 1 for f in self.facets())

    def vertex_labels(self, face) -> tuple:
        return tuple(self.ground[i] for i in face)

    def as_face(self, face) -> Face:
        if self.n is None:
            raise TypeError("complex vertices are not subsets of [n]")
        return Face(self.n, self.vertex_labels(face))

    def face_of(self, face: Face) -> tuple[int, ...]:
        """Vertex-index tuple of a chain face of a subset-labelled complex."""
        lookup = self.label_index
        try:
            return tuple(sorted(lookup[a] for a in face.chain))
        except KeyError:
            raise KeyError(f"{face} is not a face of this complex") from None

    @cached_property
    def label_index(self) -> dict:
        return {label: i for i, label in enumerate(self.ground)}

    def to_json(self) -> dict:
        if self.n is not None:
            vertices = [list(vertices_of(a)) for a in self.ground]
        else:
            vertices = [v if isinstance(v, (int, str)) else repr(v) for v in self.ground]
        return {
            "vertices": vertices,
            "faces": {str(d): [list(f) for f in level] for d, level in enumerate(self.faces)},
        }


# ------------------------------------------------------------------ builders


def _compat_masks(n: int, edge_masks: Sequence[int]) -> list[int]:
    """For every subset A of [n]: bitmask over edges F with A∩F=∅ or F⊆A."""
    out = []
    for a in range(1 << n):
        c = 0
        for j, f in enumerate(edge_masks):
            if not a & f or f & a == f:
                c |= 1 << j
        out.append(c)
    return out


def _chain_complex(n: int, universe: list[int], compat: list[int] | None, need: int) -> SimplicialComplex:
    """All chains from ``universe`` whose accumulated edge mask keeps ``need``.

    With ``compat is None`` every chain is taken. Otherwise a chain survives
    while the AND of its elements' compatibility masks still meets ``need``.
    """
    universe = sorted(universe, key=subset_key)
    k = len(universe)
    ups = [
        [j for j in range(i + 1, k) if universe[i] & ~universe[j] == 0 and universe[i] != universe[j]]
        for i in range(k)
    ]
    levels: list[list[tuple[int, ...]]] = []

    def grow(face, acc):
        d = len(face) - 1
        if d == len(levels):
            levels.append([])
        levels[d].append(face)
        for j in ups[face[-1]]:
            nxt = acc if compat is None else acc & compat[universe[j]]
            if compat is None or nxt & need:
                grow(face + (j,), nxt)

    for i, a in enumerate(universe):
        acc = need if compat is None else compat[a] & need
        if compat is None or acc:
            grow((i,), acc)
    return SimplicialComplex(universe, levels, n=n)


def build_coloring_complex(hg: Hypergraph) -> SimplicialComplex:
    """The coloring complex: chains of proper nonempty subsets some edge fits into a gap of."""
    if not hg.edges:
        raise HypergraphError("hypergraph has no edges; its coloring complex would be void")
    n = hg.n
    compat = _compat_masks(n, hg.masks)
    universe = [a for a in range(1, (1 << n) - 1) if compat[a]]
    return _chain_complex(n, universe, compat, (1 << hg.num_edges) - 1)


def _edge_indices(hg: Hypergraph, subset) -> int:
    pos = {e: j for j, e in enumerate(hg.edges)}
    code = 0
    for e in subset:
        e = tuple(sorted(e))
        if e not in pos:
            raise HypergraphError(f"{list(e)} is not an edge of {hg}")
        code |= 1 << pos[e]
    return code


def edge_sphere_complex(hg: Hypergraph, subset) -> SimplicialComplex:
    """Intersection of the edge spheres of the edges in ``subset``."""
    code = _edge_indices(hg, subset)
    if not code:
        raise HypergraphError("edge subset must be nonempty")
    compat = _compat_masks(hg.n, hg.masks)
    universe = [a for a in range(1, (1 << hg.n) - 1) if compat[a] & code == code]
    return _chain_complex(hg.n, universe, None, 0)


def cube_complex(n: int) -> SimplicialComplex:
    """Braid triangulation of the unit n-cube: all chains in the Boolean lattice."""
    return _chain_complex(n, list(range(1 << n)), None, 0)


def subspace_complex(hg: Hypergraph, subset) -> SimplicialComplex:
    """Intersection of the cube subcomplexes on the diagonal subspaces of the given edges."""
    code = _edge_indices(hg, subset)
    compat = _compat_masks(hg.n, hg.masks)
    universe = [a for a in range(1 << hg.n) if compat[a] & code == code]
    return _chain_complex(hg.n, universe, None, 0)


def box_complex(hg: Hypergraph) -> SimplicialComplex:
    """Union over all edges of the cube subcomplexes on their diagonal subspaces."""
    if not hg.edges:
        raise HypergraphError("hypergraph has no edges")
    compat = _compat_masks(hg.n, hg.masks)
    universe = [a for a in range(1 << hg.n) if compat[a]]
    return _chain_complex(hg.n, universe, compat, (1 << hg.num_edges) - 1)


def link_of_face(K: SimplicialComplex, face) -> SimplicialComplex:
    """Link of a face (index tuple or :class:`Face`) on the induced vertex subset."""
    if isinstance(face, Face):
        face = K.face_of(face)
    face = tuple(sorted(face))
    if face not in K:
        raise KeyError(f"{face} is not a face of the complex")
    fs = set(face)
    k = len(face)
    rest = []
    for d in range(k, len(K.faces)):
        for sigma in K.faces[d]:
            if fs.issubset(sigma):
                g = tuple(v for v in sigma if v not in fs)
                if g:
                    rest.append(g)
    used = sorted({v for g in rest for v in g})
    new = {v: i for i, v in enumerate(used)}
    levels: dict[int, list] = {}
    for g in rest:
        levels.setdefault(len(g) - 1, []).append(tuple(new[v] for v in g))
    top = max(levels, default=-1)
    return SimplicialComplex([K.ground[v] for v in used], [levels.get(d, ()) for d in range(top + 1)], n=K.n)


def f_h_vectors(K: SimplicialComplex) -> FHVectors:
    return FHVectors(K.f_vector, K.h_vector)


def order_complex(elements: Sequence[Hashable], less) -> SimplicialComplex:
    """Order complex of a finite poset; ``less(p, q)`` is the strict order.

    ``elements`` must be listed in a linear extension of the order.
    """
    k = len(elements)
    ups = [[j for j in range(i + 1, k) if less(elements[i], elements[j])] for i in range(k)]
    for i in range(k):
        for j in range(i):
            if less(elements[i], elements[j]):
                raise ValueError("elements are not listed in a linear extension")
    levels: list[list] = []

    def grow(face):
        d = len(face) - 1
        if d == len(levels):
            levels.append([])
        levels[d].append(face)
        for j in ups[face[-1]]:
            grow(face + (j,))

    for i in range(k):
        grow((i,))
    return SimplicialComplex(elements, levels)
