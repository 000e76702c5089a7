import pytest

from yvpoly import painleve
from yvpoly.intpoly import IntPoly
from yvpoly.painleve import (
    RationalSolution,
    UnexpectedCommonFactor,
    backlund_next,
    negate,
    pII_residual,
    rational_solution,
    reduce_fraction,
)


class TestReduction:
    def test_gcd_basic(self):
        a = IntPoly([-1, 0, 1])
        b = IntPoly([-2, 1, 1])  # shares z + 1... actually z^2+z-2 = (z+2)(z-1)
        g = painleve.poly_gcd(a, b)
        assert g == IntPoly([-1, 1])

    def test_reduce_removes_content(self):
        num, den = reduce_fraction(IntPoly([0, 2]), IntPoly([2]))
        assert num == IntPoly.z() and den == IntPoly.one()

    def test_reduce_normalises_sign(self):
        num, den = reduce_fraction(IntPoly([1]), IntPoly([-1, -1]))
        assert den == IntPoly([1, 1]) and num == IntPoly([-1])


class TestSolutions:
    def test_w1_is_minus_inverse_z(self, records8):
        w = rational_solution(records8, 1)
        assert w == RationalSolution(1, IntPoly([-1]), IntPoly.z())

    def test_equality_cross_multiplied(self):
        a = RationalSolution(1, IntPoly([-1]), IntPoly.z())
        b = RationalSolution(1, IntPoly([-2]), IntPoly([0, 2]))
        assert a == b

    @pytest.mark.parametrize("n", range(1, 9))
    def test_residual_vanishes(self, records8, n):
        assert pII_residual(rational_solution(records8, n)).passed

    def test_zero_solution_for_n0(self, records8):
        w = rational_solution(records8, 0)
        assert w.is_zero()
        assert pII_residual(w).passed

    def test_negate_solves_negated_parameter(self, records8):
        # w(z; -n) = -w(z; n), so the residual with parameter -n must vanish
        w = negate(rational_solution(records8, 3))
        assert w.n == -3
        assert pII_residual(w).passed


class TestBacklund:
    @pytest.mark.parametrize("n", range(0, 8))
    def test_matches_direct_construction(self, records8, n):
        stepped = backlund_next(rational_solution(records8, n), n)
        assert stepped == rational_solution(records8, n + 1)

    def test_chain_from_zero(self, records8):
        w = rational_solution(records8, 0)
        for n in range(0, 6):
            w = backlund_next(w, n)
        assert w == rational_solution(records8, 6)
