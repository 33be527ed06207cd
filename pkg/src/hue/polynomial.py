"""Exact univariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

__all__ = ["RationalPolynomial", "binomial_poly", "interpolate", "forward_differences"]


def _norm(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


class RationalPolynomial:
    """Polynomial in ``k`` stored by power-basis coefficients, lowest first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> RationalPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return RationalPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = RationalPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def compose_shift(self, s) -> RationalPolynomial:
        """The polynomial ``k -> p(k + s)``."""
        out = RationalPolynomial()
        shift = RationalPolynomial([s, 1])
        for c in reversed(self.coeffs):
            out = out * shift + c
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_strings(self, length: int | None = None) -> list[str]:
        cs = list(self.coeffs)
        if length is not None:
            cs += [0] * (length - len(cs))
        return [str(c) for c in cs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*k" if i == 1 else f"{c}*k^{i}")
        return " + ".join(reversed(terms))


def _coerce(x) -> RationalPolynomial:
    return x if isinstance(x, RationalPolynomial) else RationalPolynomial([x])


def binomial_poly(shift: int, r: int) -> RationalPolynomial:
    """``C(k + shift, r)`` as a polynomial in ``k``."""
    out = RationalPolynomial([1])
    for t in range(r):
        out = out * RationalPolynomial([shift - t, 1])
    return out * Fraction(1, factorial(r))


def interpolate(points: Sequence[tuple]) -> RationalPolynomial:
    """Lagrange interpolation through ``(x, y)`` pairs, exactly."""
    out = RationalPolynomial()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = RationalPolynomial([1])
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * RationalPolynomial([-xj, 1])
                denom *= xi - xj
        out = out + basis * Fraction(yi, denom)
    return out


def forward_differences(values: Sequence) -> list:
    """``[Δ^0 v(0), Δ^1 v(0), ...]`` for a list of consecutive values."""
    row = list(values)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out
