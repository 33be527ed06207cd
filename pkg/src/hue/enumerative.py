"""Chromatic polynomials, binomial-basis coordinates and cube face counts.

Three independent routes to the chromatic polynomial are provided:

``brute``
    count proper colourings at ``k = 1..n+1`` and interpolate;
``faces``
    count faces of the braid-triangulated cube outside the union of the
    diagonal subcomplexes, which are the f-coordinates of ``chi(k+1)``;
``inclusion_exclusion``
    the same f-coordinates from the component census ``s(a, b)`` and the
    cube face counts ``T(b, i)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .complexes import SimplicialComplex, build_coloring_complex
from .hypergraph import Hypergraph, s_table
from .kernels import count_proper_colorings, cube_faces_outside_box
from .polynomial import RationalPolynomial, binomial_poly, forward_differences, interpolate

__all__ = [
    "PolyFVector",
    "PolyHVector",
    "f_vector_of_poly",
    "h_vector_of_poly",
    "poly_from_f",
    "poly_from_h",
    "h_from_f_poly",
    "fh_basis_transforms",
    "chromatic_polynomial",
    "chromatic_f_vector",
    "coloring_complex_size",
    "cube_T",
    "cube_h",
    "cube_face_formulas",
    "truncated_value",
    "truncated_bounds",
    "uniform_bounds",
    "ehrhart_series_check",
    "SeriesReport",
    "METHODS",
]

METHODS = ("brute", "faces", "inclusion_exclusion")


@dataclass(frozen=True)
class PolyFVector:
    """``(f_{-1}, f_0, ..., f_n)`` with ``p(k) = sum_i f_i C(k-1, i)``."""

    values: tuple[int | Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.values) - 2


@dataclass(frozen=True)
class PolyHVector:
    """``(h_0, ..., h_{n'+1})`` with ``p(k) = C(k+n', n') + sum_{i>=1} h_i C(k+n'-i, n')``."""

    n_prime: int
    values: tuple[int | Fraction, ...] = field()


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def f_vector_of_poly(p: RationalPolynomial, n: int) -> PolyFVector:
    if p.degree > n:
        raise ValueError(f"degree {p.degree} exceeds bound n={n}")
    diffs = forward_differences([p(k) for k in range(1, n + 2)])
    return PolyFVector((1,) + tuple(_norm(d) for d in diffs))


def h_from_f_poly(f: Sequence, n_prime: int) -> tuple:
    """h-coordinates from f-coordinates (``f`` starts with ``f_{-1}``)."""
    fk = list(f) + [0] * max(0, n_prime + 2 - len(f))
    if any(fk[n_prime + 2:]):
        raise ValueError("f-vector longer than the normalisation allows")
    out = []
    for i in range(n_prime + 2):
        out.append(_norm(sum(
            (-1) ** (i - k - 1) * comb(n_prime - k, i - k - 1) * fk[k + 1] for k in range(-1, i)
        )))
    return tuple(out)


def h_vector_of_poly(p: RationalPolynomial, n_prime: int) -> PolyHVector:
    if p.degree > n_prime:
        raise ValueError(f"degree {p.degree} exceeds normalisation n'={n_prime}")
    f = f_vector_of_poly(p, n_prime)
    return PolyHVector(n_prime, h_from_f_poly(f.values, n_prime))


def poly_from_f(f: Sequence) -> RationalPolynomial:
    out = RationalPolynomial()
    for i, fi in enumerate(f[1:]):
        if fi:
            out = out + binomial_poly(-1, i) * fi
    return out


def poly_from_h(h: Sequence, n_prime: int) -> RationalPolynomial:
    out = binomial_poly(n_prime, n_prime)
    for i, hi in enumerate(h[1:], 1):
        if hi:
            out = out + binomial_poly(n_prime - i, n_prime) * hi
    return out


def fh_basis_transforms(p: RationalPolynomial, n: int, n_prime: int | None = None):
    """Both binomial-basis coordinate vectors of ``p``; round trips are asserted."""
    n_prime = n if n_prime is None else n_prime
    f = f_vector_of_poly(p, n)
    h = h_vector_of_poly(p, n_prime)
    assert poly_from_f(f.values) == p
    assert poly_from_h(h.values, n_prime) == p
    return f, h


# ----------------------------------------------------------- cube formulas


@lru_cache(maxsize=None)
def cube_T(d: int, i: int) -> int:
    """Number of ``i``-faces of the braid triangulation of the ``d``-cube."""
    if i < 0:
        return 1 if i == -1 else 0
    return sum((-1) ** j * comb(i, j) * (i - j + 2) ** d for j in range(i + 1))


def cube_h(d: int, i: int, n_prime: int) -> int:
    """Closed form for the ``h^{n'}_i`` entry of the ``d``-cube's Ehrhart polynomial."""
    if n_prime < d:
        raise ValueError("normalisation must be at least the cube dimension")
    total = (-1) ** i * comb(n_prime + 1, i)
    for a in range(i):
        inner = sum((-1) ** (i - a + b - 1) * comb(a, b) * (a - b + 2) ** d for b in range(a + 1))
        total += comb(n_prime - a, i - a - 1) * inner
    return total


def cube_face_formulas(d: int, i: int, n_prime: int) -> tuple[int, int]:
    return cube_T(d, i), cube_h(d, i, n_prime)


# ------------------------------------------------------ chromatic polynomial


def _from_shifted_f(f: Sequence[int]) -> RationalPolynomial:
    """chi(k) from the f-coordinates of chi(k+1)."""
    return poly_from_f(f).compose_shift(-1)


def _ie_f_vector(hg: Hypergraph, upto: int | None = None) -> list[int]:
    table = s_table(hg)
    last = hg.num_edges if upto is None else upto
    return [1] + [truncated_value(hg, i, last, table) for i in range(hg.n + 1)]


def chromatic_f_vector(hg: Hypergraph, method: str = "faces") -> tuple[int, ...]:
    """f-coordinates ``(f_{-1}, f_0, ..., f_n)`` of ``chi_H(k+1)``."""
    if method == "faces":
        return (1,) + tuple(cube_faces_outside_box(hg.n, hg.masks))
    if method == "inclusion_exclusion":
        return tuple(_ie_f_vector(hg))
    if method == "brute":
        return f_vector_of_poly(chromatic_polynomial(hg, "brute").compose_shift(1), hg.n).values
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")


def chromatic_polynomial(hg: Hypergraph, method: str = "faces") -> RationalPolynomial:
    if method == "brute":
        points = [(0, 0)] if hg.n >= 1 else []
        points += [(k, count_proper_colorings(hg.n, hg.masks, k)) for k in range(1, hg.n + 2)]
        p = interpolate(points)
    elif method in METHODS:
        p = _from_shifted_f(chromatic_f_vector(hg, method))
    else:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if not p.is_integral():
        raise ArithmeticError(f"chromatic polynomial of {hg} has non-integer coefficients: {p}")
    return p


def coloring_complex_size(hg: Hypergraph) -> int:
    """Number of faces of Δ_H (empty face included) without building it.

    The box complex is the double cone over Δ_H, so its face total is four
    times that of Δ_H, and its f-vector is ``T(n, i) - f_i(chi(k+1))``.
    """
    f = cube_faces_outside_box(hg.n, hg.masks)
    box = 1 + sum(cube_T(hg.n, i) - f[i] for i in range(hg.n + 1))
    assert box % 4 == 0
    return box // 4


# ------------------------------------------------------------------- bounds


def truncated_value(hg: Hypergraph, i: int, m: int, table=None) -> int:
    """Inclusion-exclusion for ``f_i(chi(k+1))`` cut off after edge subsets of size ``m``."""
    if not 0 <= m <= hg.num_edges:
        raise ValueError(f"truncation m={m} outside 0..{hg.num_edges}")
    table = s_table(hg) if table is None else table
    return sum(
        (-1) ** a * sum(count * cube_T(b, i) for b, count in enumerate(table[a]) if count)
        for a in range(m + 1)
    )


def truncated_bounds(hg: Hypergraph, i: int, m: int, table=None):
    """``(lower, upper)`` for ``f_i(chi(k+1))`` from truncation level ``m``.

    Even ``m`` bounds from above, odd ``m`` from below; the missing side is
    infinite. At ``m = #E`` both sides are the exact value.
    """
    v = truncated_value(hg, i, m, table)
    if m == hg.num_edges:
        return v, v
    return (-math.inf, v) if m % 2 == 0 else (v, math.inf)


def uniform_bounds(hg: Hypergraph, i: int) -> tuple[int, int]:
    """Closed-form bounds for an r-uniform hypergraph (truncation at 0 and 1)."""
    if not hg.is_uniform():
        raise ValueError("hypergraph is not uniform")
    n, r, e = hg.n, hg.min_edge_size, hg.num_edges
    lower = sum((-1) ** c * comb(i, c) * ((i - c + 2) ** n - e * (i - c + 2) ** (n - r + 1)) for c in range(i + 1))
    upper = sum((-1) ** c * comb(i, c) * (i - c + 2) ** n for c in range(i + 1))
    return lower, upper


# ---------------------------------------------------------- series identity


@dataclass
class SeriesReport:
    n: int
    box_dim: int
    numerator: tuple
    terms: list = field(default_factory=list)
    numerator_matches_complex: bool | None = None
    intro_form: bool | None = None

    @property
    def passed(self) -> bool:
        ok = all(t["ok"] for t in self.terms)
        return ok and self.numerator_matches_complex is not False and self.intro_form is not False

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "box_dim": self.box_dim,
            "denominator_exponent": self.box_dim + 1,
            "numerator": [str(x) for x in self.numerator],
            "numerator_matches_complex": self.numerator_matches_complex,
            "intro_form": self.intro_form,
            "terms": [{k: str(v) if not isinstance(v, bool) else v for k, v in t.items()} for t in self.terms],
            "passed": self.passed,
        }


def _series_coeff(h: Sequence, exponent: int, k: int):
    """Coefficient of ``z^k`` in ``(sum_i h_i z^i) / (1 - z)^exponent``."""
    return sum(hi * comb(k - i + exponent - 1, exponent - 1) for i, hi in enumerate(h) if i <= k)


def ehrhart_series_check(hg: Hypergraph, terms: int | None = None, *, chi=None,
                         complex_: SimplicialComplex | None = None) -> SeriesReport:
    """Check the generating-function identity linking chi_H and the box complex.

    Term by term for ``k = 0..terms``: ``(k+1)^n - chi(k+1)`` against the
    lattice-point count of the box complex (read off its face numbers, which
    come from the coloring complex by coning twice) and against the series
    ``h(z) / (1-z)^{d+1}`` with ``d`` the box dimension.
    """
    n = hg.n
    terms = n + 5 if terms is None else terms
    if terms < n + 2:
        raise ValueError("need at least n + 2 terms")
    chi = chromatic_polynomial(hg) if chi is None else chi
    K = build_coloring_complex(hg) if complex_ is None else complex_
    d = n - hg.min_edge_size + 1
    box_poly = RationalPolynomial.monomial(n).compose_shift(1) - chi.compose_shift(1)
    h = h_vector_of_poly(box_poly, d).values
    # f of the double cone over the coloring complex
    fd = list(K.f_vector) + [0, 0]
    f_box = [fd[i] + 2 * (fd[i - 1] if i >= 1 else 0) + (fd[i - 2] if i >= 2 else 0) for i in range(len(fd))]
    lattice = poly_from_f(f_box)
    report = SeriesReport(n=n, box_dim=d, numerator=h)
    for k in range(terms + 1):
        lhs = (k + 1) ** n - chi(k + 1)
        count = lattice(k)
        series = _series_coeff(h, d + 1, k)
        report.terms.append({"k": k, "chi_side": lhs, "box_count": count, "series": series,
                             "ok": lhs == count == series})
    report.numerator_matches_complex = tuple(h) == tuple(K.h_vector) + (0, 0)
    if hg.min_edge_size == 2:
        hk = K.h_vector
        report.intro_form = all(
            (k + 1) ** n - chi(k + 1) == _series_coeff(hk, n, k) for k in range(terms + 1)
        )
    return report
