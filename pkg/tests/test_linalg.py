from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hue.linalg import (
    dense_smith_diagonal,
    prime_power_factors,
    reduce_columns,
    reduce_vector,
    smith_invariants,
)

matrices = st.integers(1, 6).flatmap(
    lambda r: st.lists(st.lists(st.integers(-4, 4), min_size=r, max_size=r), min_size=1, max_size=6)
)


def to_columns(cols):
    return [{r: v for r, v in enumerate(c) if v} for c in cols]


def rank_by_fractions(cols):
    rows = [list(map(Fraction, r)) for r in zip(*cols)]
    rank, ncols = 0, len(cols)
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                q = rows[i][c] / rows[rank][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def det(m):
    m = [list(map(Fraction, r)) for r in m]
    n, out = len(m), Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            q = m[i][c] / m[c][c]
            m[i] = [a - q * b for a, b in zip(m[i], m[c])]
    return int(out)


def test_known_smith_form():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert dense_smith_diagonal(a) == [2, 6, 12]
    cols = to_columns(list(map(list, zip(*a))))
    assert smith_invariants(cols) == [2, 6, 12]
    assert dense_smith_diagonal([[0, 0], [0, 0]]) == []


def test_torsion_of_a_cyclic_relation():
    # coker of [[2]] is Z/2
    assert smith_invariants([{0: 2}]) == [2]
    assert smith_invariants([{0: 1, 1: 1}, {0: 1, 1: -1}]) == [1, 2]


@given(matrices)
def test_ranks_agree_across_engines(cols):
    sparse = to_columns(cols)
    r = rank_by_fractions(cols)
    assert reduce_columns(sparse).rank == r
    inv = smith_invariants(sparse)
    assert len(inv) == r
    for a, b in zip(inv, inv[1:]):
        assert b % a == 0


@given(matrices)
def test_smith_product_is_determinant_for_square(cols):
    size = len(cols[0])
    cols = cols[:size]
    if len(cols) != size:
        return
    d = det([list(r) for r in zip(*cols)])
    inv = smith_invariants(to_columns(cols))
    if d == 0:
        assert len(inv) < size
    else:
        prod = 1
        for x in inv:
            prod *= x
        assert prod == abs(d)


@given(matrices)
def test_tracked_kernel_and_membership(cols):
    sparse = to_columns(cols)
    red = reduce_columns(sparse, track=True)
    assert red.rank + len(red.kernel) == len(cols)
    for j, combo in red.kernel.items():
        total = {}
        for c, coef in combo.items():
            for r, v in sparse[c].items():
                total[r] = total.get(r, 0) + coef * v
        assert not any(total.values())
        assert combo.get(j)
    for c in sparse:
        assert red.contains(c)
        assert reduce_vector(c, red.pivots) == {}


def test_skip_treats_columns_as_zero():
    cols = [{0: 1}, {0: 1, 1: 1}, {1: 2}]
    red = reduce_columns(cols, skip=[1])
    assert red.rank == 2 and red.skipped == frozenset({1})


def test_membership_rejects_outsiders():
    red = reduce_columns([{0: 2}])
    assert red.contains({0: 4})
    assert red.contains({0: 1})  # membership is over Q
    assert not red.contains({1: 1})


def test_prime_power_factors():
    assert prime_power_factors(12) == [4, 3]
    assert prime_power_factors(2) == [2]
    assert prime_power_factors(1) == []
    assert prime_power_factors(360) == [8, 9, 5]
