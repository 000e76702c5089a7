from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yvpoly.intpoly import (
    IntPoly,
    NonIntegerQuotient,
    NonZeroRemainder,
    ZeroConstantTerm,
    newton_power_sums,
)

small_polys = st.lists(st.integers(-50, 50), max_size=8).map(IntPoly)
nonzero_polys = small_polys.filter(bool)


def P(*coeffs):
    """Low-to-high coefficient shorthand."""
    return IntPoly(coeffs)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert P(1, 1) * P(-1, 1) == P(-1, 0, 1)

    def test_mul_by_monomial(self):
        assert IntPoly.z() * P(4, 0, 0, 1) == P(0, 4, 0, 0, 1)

    def test_square(self):
        # (z^3+4)^2 by hand: z^6 + 8 z^3 + 16
        assert P(4, 0, 0, 1) * P(4, 0, 0, 1) == P(16, 0, 0, 8, 0, 0, 1)

    def test_zero_annihilates(self):
        assert P(1, 2, 3) * IntPoly.zero() == IntPoly.zero()

    @given(a=small_polys, b=small_polys, c=small_polys)
    def test_distributivity(self, a, b, c):
        assert (a + b) * c == a * c + b * c

    @given(a=small_polys, b=small_polys)
    def test_commutativity(self, a, b):
        assert a * b == b * a

    @given(a=st.lists(st.integers(-9, 9), min_size=60, max_size=90).map(IntPoly),
           b=st.lists(st.integers(-9, 9), min_size=60, max_size=90).map(IntPoly))
    @settings(max_examples=20)
    def test_karatsuba_matches_schoolbook(self, a, b):
        from yvpoly.intpoly import _mul_seq, _school_mul
        if a and b:
            assert _mul_seq(a.coeffs, b.coeffs) == _school_mul(a.coeffs, b.coeffs)

    def test_stride3_fast_path(self):
        a = IntPoly([1, 0, 0, 2, 0, 0, 3, 0, 0, 4])
        b = IntPoly([0, 5, 0, 0, 6, 0, 0, 7])
        from yvpoly.intpoly import _school_mul
        assert (a * b).coeffs == tuple(_school_mul(a.coeffs, b.coeffs))


class TestDerivative:
    def test_basic(self):
        assert P(4, 0, 0, 1).derivative() == P(0, 0, 3)
        assert IntPoly.z().derivative() == IntPoly.one()

    def test_q3(self):
        # termwise power rule on z^6 + 20 z^3 - 80
        q3 = P(-80, 0, 0, 20, 0, 0, 1)
        assert q3.derivative() == P(0, 0, 60, 0, 0, 6)

    @given(a=small_polys, b=small_polys)
    def test_product_rule(self, a, b):
        lhs = (a * b).derivative()
        rhs = a.derivative() * b + a * b.derivative()
        assert lhs == rhs

    @given(a=small_polys, b=small_polys)
    def test_linearity(self, a, b):
        assert (a + b).derivative() == a.derivative() + b.derivative()


class TestExactDiv:
    def test_monomial_factor(self):
        assert P(0, 4, 0, 0, 1).exact_div(IntPoly.z()) == P(4, 0, 0, 1)

    def test_square_root(self):
        sq = P(16, 0, 0, 8, 0, 0, 1)
        assert sq.exact_div(P(4, 0, 0, 1)) == P(4, 0, 0, 1)

    def test_nonzero_remainder(self):
        with pytest.raises(NonZeroRemainder):
            P(5, 0, 0, 1).exact_div(P(4, 0, 0, 1))

    def test_non_integer_quotient(self):
        with pytest.raises((NonIntegerQuotient, NonZeroRemainder)):
            P(1, 1).exact_div(P(0, 2))

    @given(a=small_polys, b=nonzero_polys)
    def test_round_trip(self, a, b):
        assert (a * b).exact_div(b) == a


class TestEvaluate:
    def test_table_constants(self):
        assert P(4, 0, 0, 1).evaluate(0) == 4
        assert P(-80, 0, 0, 20, 0, 0, 1).evaluate(0) == -80

    def test_rational_point(self):
        assert IntPoly.z().evaluate(Fraction(1, 2)) == Fraction(1, 2)


class TestReverse:
    def test_basic(self):
        assert P(4, 0, 0, 1).reverse_nonzero() == P(1, 0, 0, 4)
        assert P(-80, 0, 0, 20, 0, 0, 1).reverse_nonzero() == \
            P(1, 0, 0, 20, 0, 0, -80)

    def test_zero_constant_term(self):
        with pytest.raises(ZeroConstantTerm):
            IntPoly.z().reverse_nonzero()


class TestNewtonPowerSums:
    def test_quadratic(self):
        # y^2 + 20 y - 80: e_1 = -20, e_2 = -80
        p = newton_power_sums(P(-80, 20, 1), 2)
        assert p[0] == -20
        assert p[1] == 560

    def test_cubic_of_unity_type(self):
        # three roots of z^3 = -4
        p = newton_power_sums(P(4, 0, 0, 1), 3)
        assert p == [0, 0, -12]

    def test_linear(self):
        assert newton_power_sums(P(-5, 1), 1) == [5]

    @given(roots=st.lists(st.integers(-6, 6).filter(bool), min_size=1,
                          max_size=5))
    def test_against_explicit_roots(self, roots):
        poly = IntPoly.one()
        for r in roots:
            poly = poly * IntPoly([-r, 1])
        sums = newton_power_sums(poly, 4)
        for m in range(1, 5):
            assert sums[m - 1] == sum(Fraction(r) ** m for r in roots)

    @given(roots=st.lists(st.integers(-6, 6).filter(bool), min_size=1,
                          max_size=5))
    def test_inverse_sums_via_reversal(self, roots):
        poly = IntPoly.one()
        for r in roots:
            poly = poly * IntPoly([-r, 1])
        sums = newton_power_sums(poly.reverse_nonzero(), 3)
        for m in range(1, 4):
            assert sums[m - 1] == sum(Fraction(1, r) ** m for r in roots)
