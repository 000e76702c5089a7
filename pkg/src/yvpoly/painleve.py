"""Rational solutions of the second Painleve equation w'' = 2w^3 + zw + n.

w_n is kept as an explicit reduced numerator/denominator pair of integer
polynomials. Identity checks (the P_II residual, the Backlund recurrence)
are exact polynomial computations; no partial fractions, no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

from .intpoly import IntPoly
from .report import VerificationReport


class UnexpectedCommonFactor(Exception):
    """gcd(Q_{n-1}, Q_n) turned out nontrivial: integrity failure."""


class DegenerateDenominator(Exception):
    """The Backlund denominator expression vanished identically."""


@dataclass(frozen=True)
class RationalSolution:
    n: int
    numerator: IntPoly
    denominator: IntPoly

    def is_zero(self) -> bool:
        return not self.numerator

    def __eq__(self, other):
        if not isinstance(other, RationalSolution):
            return NotImplemented
        # equality of rational functions: cross-multiplication
        return (self.n == other.n
                and self.numerator * other.denominator
                == other.numerator * self.denominator)


_X = sympy.Symbol("_yv_x")


def _to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], _X, domain="ZZ")


def _from_sympy(sp) -> IntPoly:
    return IntPoly(list(reversed([int(c) for c in sp.all_coeffs()])))


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over the integers (modular algorithms underneath)."""
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    return _from_sympy(sympy.gcd(_to_sympy(a), _to_sympy(b)))


def reduce_fraction(num: IntPoly, den: IntPoly):
    """Lowest terms with primitive, positively-led denominator."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return IntPoly.zero(), IntPoly.one()
    g = poly_gcd(num, den)
    if g.degree and g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    from math import gcd as int_gcd
    c = int_gcd(num.content(), den.content())
    if den.leading < 0:
        c = -c
    if c != 1:
        num = IntPoly([x // c for x in num.coeffs])
        den = IntPoly([x // c for x in den.coeffs])
    return num, den


def rational_solution(records: Sequence, n: int) -> RationalSolution:
    """w_n = Q_{n-1}'/Q_{n-1} - Q_n'/Q_n as a reduced fraction."""
    if n == 0:
        return RationalSolution(0, IntPoly.zero(), IntPoly.one())
    if n < 1 or n >= len(records):
        raise ValueError(f"records up to {n} required")
    p, q = records[n - 1].poly, records[n].poly
    num = p.derivative() * q - p * q.derivative()
    den = p * q
    g = poly_gcd(num, den)
    if g.degree and g.degree > 0:
        raise UnexpectedCommonFactor(
            f"gcd of w_{n} numerator/denominator has degree {g.degree}")
    return RationalSolution(n, num, den)


def negate(w: RationalSolution) -> RationalSolution:
    """w_{-n} = -w_n."""
    return RationalSolution(-w.n, -w.numerator, w.denominator)


def pII_residual(w: RationalSolution) -> VerificationReport:
    """Numerator of w'' - 2w^3 - zw - n over D^3; pass iff identically zero."""
    nn, dd = w.numerator, w.denominator
    a = nn.derivative() * dd - nn * dd.derivative()
    wpp_num = a.derivative() * dd - 2 * a * dd.derivative()  # w'' * D^3
    z = IntPoly.z()
    residual = (wpp_num
                - 2 * (nn * nn * nn)
                - z * nn * (dd * dd)
                - w.n * (dd * dd * dd))
    rep = VerificationReport(suite="pii", n=w.n)
    if residual:
        rep.fail({"residual_degree": residual.degree})
    return rep


def backlund_next(w: RationalSolution, n: int) -> RationalSolution:
    """w_{n+1} = -w_n - (2n+1) / (2 w_n^2 + 2 w_n' + z), reduced.

    Independent of the polynomial-family route: only the fraction for w_n
    enters. Must agree exactly with rational_solution at n+1.
    """
    nn, dd = w.numerator, w.denominator
    z = IntPoly.z()
    # (2 w^2 + 2 w' + z) * D^2
    e = 2 * (nn * nn) + 2 * (nn.derivative() * dd - nn * dd.derivative()) + z * (dd * dd)
    if not e:
        raise DegenerateDenominator(f"Backlund denominator vanishes at n={n}")
    num = -(nn * e + (2 * n + 1) * (dd * dd * dd))
    den = dd * e
    num, den = reduce_fraction(num, den)
    return RationalSolution(n + 1, num, den)
