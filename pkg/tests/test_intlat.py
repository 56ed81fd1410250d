import random
from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cp2bundles.intlat import (
    INFINITE,
    FinAbGroup,
    IntMatrix,
    element_order,
    hnf,
    in_span,
    lattice_equal,
    quotient_group,
    snf,
    xgcd,
)
from oracles import determinantal_divisors, invariant_factors_from_divisors, lattice_points, rational_det, rational_solve


def matrices(max_rows=5, max_cols=5, lo=-20, hi=20):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def is_row_hnf(h: IntMatrix) -> bool:
    last = -1
    seen_zero = False
    for i, row in enumerate(h.rows):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        p = nz[0]
        if p <= last or row[p] <= 0:
            return False
        if any(not 0 <= h[k, p] < row[p] for k in range(i)):
            return False
        last = p
    return True


@pytest.mark.parametrize("a,b", [(12, 18), (-12, 18), (0, 5), (7, 0), (-3, -9)])
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g >= 0 and a * x + b * y == g


class TestHNF:
    def test_identity(self):
        h, u = hnf(IntMatrix.identity(3))
        assert h == IntMatrix.identity(3) and u == IntMatrix.identity(3)

    def test_swap(self):
        h, _ = hnf([[0, 1], [1, 0]])
        assert h == IntMatrix.identity(2)

    def test_example_against_enumeration(self):
        h, u = hnf([[2, 4], [4, 2]])
        assert h.tolist() == [[2, 4], [0, 6]]
        assert lattice_points([[2, 4], [4, 2]], 8, 8) == lattice_points(h.tolist(), 8, 8)

    def test_wide_and_tall(self):
        m = IntMatrix([[3, 5, 7], [6, 10, 14], [0, 1, 1], [2, 0, 2]])
        h, u = hnf(m)
        assert u @ m == h and is_row_hnf(h)
        assert abs(rational_det(u.tolist())) == 1

    def test_big_entries(self):
        m = IntMatrix([[10**30 + 1, 10**29], [3 * 10**30, 7]])
        h, u = hnf(m)
        assert u @ m == h and abs(rational_det(u.tolist())) == 1

    @settings(max_examples=150, deadline=None)
    @given(matrices())
    def test_properties(self, rows):
        m = IntMatrix(rows)
        h, u = hnf(m)
        assert u @ m == h
        assert abs(rational_det(u.tolist())) == 1
        assert is_row_hnf(h)


class TestSNF:
    def test_coprime_diagonal(self):
        d, u, v = snf(IntMatrix.diag([2, 3]))
        assert d == IntMatrix.diag([1, 6])

    def test_zero(self):
        z = IntMatrix.zeros(2, 3)
        d, u, v = snf(z)
        assert d == z

    def test_example(self):
        m = IntMatrix.diag([2, 12, 224])
        d, u, v = snf(m)
        assert d == IntMatrix.diag([2, 4, 672])
        assert u @ m @ v == d

    @settings(max_examples=150, deadline=None)
    @given(matrices())
    def test_determinantal_divisors(self, rows):
        m = IntMatrix(rows)
        d, u, v = snf(m)
        assert u @ m @ v == d
        assert abs(rational_det(u.tolist())) == 1 and abs(rational_det(v.tolist())) == 1
        diag = [d[i, i] for i in range(min(d.shape))]
        assert all(d[i, j] == 0 for i in range(d.nrows) for j in range(d.cols) if i != j)
        assert all(x >= 0 for x in diag)
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]) if a)
        assert diag == invariant_factors_from_divisors(determinantal_divisors(rows))


class TestLattices:
    def test_sign_flip(self):
        assert lattice_equal(IntMatrix.identity(2), [[1, 0], [0, -1]])

    def test_index_two(self):
        assert not lattice_equal([[2, 0]], [[4, 0]])

    def test_zero_rows_ignored(self):
        assert lattice_equal([[2, 0], [0, 0]], [[2, 0]])

    def test_column_mismatch(self):
        with pytest.raises(ValueError):
            lattice_equal([[1, 0]], [[1, 0, 0]])

    @settings(max_examples=100, deadline=None)
    @given(matrices(4, 4), st.integers(0, 2**32))
    def test_reflexive_symmetric_unimodular(self, rows, seed):
        a = IntMatrix(rows)
        rng = random.Random(seed)
        b = [list(r) for r in rows]
        for _ in range(6):
            i, j = rng.randrange(len(b)), rng.randrange(len(b))
            if i != j:
                c = rng.randint(-3, 3)
                b[i] = [x + c * y for x, y in zip(b[i], b[j])]
            else:
                b[i] = [-x for x in b[i]]
        rng.shuffle(b)
        b = IntMatrix(b)
        assert lattice_equal(a, a)
        assert lattice_equal(a, b) and lattice_equal(b, a)


class TestQuotients:
    def test_diagonal(self):
        assert quotient_group(3, IntMatrix.diag([2, 12, 32])) == FinAbGroup((2, 4, 96), 0)

    def test_empty(self):
        g = quotient_group(2, IntMatrix.zeros(0, 2))
        assert g == FinAbGroup((), 2)
        assert quotient_group(2, []) == g

    def test_rank_deficient(self):
        g = quotient_group(3, [[2, 0, 0], [4, 0, 0]])
        assert g == FinAbGroup((2,), 2)
        assert str(g) == "Z_2 ⊕ Z^2"

    def test_finabgroup_rejects_bad_chain(self):
        with pytest.raises(ValueError):
            FinAbGroup((4, 6))
        with pytest.raises(ValueError):
            FinAbGroup((1, 6))

    def test_from_orders(self):
        assert FinAbGroup.from_orders([6, 28]) == FinAbGroup((2, 84))
        assert FinAbGroup.from_orders([6, 4]).order == 24


class TestOrders:
    L = IntMatrix.diag([2, 12, 224])

    @pytest.mark.parametrize("v,expected", [((1, 0, 0), 2), ((0, 0, 8), 28), ((0, 2, 0), 6), ((2, 0, 0), 1)])
    def test_element_order(self, v, expected):
        assert element_order(v, self.L) == expected

    def test_infinite(self):
        assert element_order((0, 1), [[2, 0]]) == INFINITE
        assert element_order((1, 0), [[2, 0]]) == 2

    def test_in_span(self):
        assert in_span((2, 0, 0), self.L)
        assert not in_span((1, 0, 0), self.L)
        assert in_span((4, -24, 448), self.L)

    @settings(max_examples=200, deadline=None)
    @given(matrices(3, 3, -6, 6), st.lists(st.integers(-10, 10), min_size=3, max_size=3))
    def test_order_one_iff_in_span(self, rows, v):
        m = IntMatrix([r + [0] * (3 - len(r)) for r in rows])
        assert (element_order(v, m) == 1) == in_span(v, m)

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3),
           st.lists(st.integers(-10, 10), min_size=3, max_size=3))
    def test_order_against_rational_solve(self, rows, v):
        # for nonsingular square m, v has order = lcm of denominators of v m^{-1}
        assume(rational_det(rows) != 0)
        coeffs = rational_solve(rows, v)
        expected = 1
        for c in coeffs:
            expected = expected * c.denominator // gcd(expected, c.denominator)
        assert element_order(v, rows) == expected
        assert in_span(v, rows) == (expected == 1)
