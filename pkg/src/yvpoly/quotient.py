"""Arithmetic in Q[a]/(M(a)) for a fixed squarefree modulus M.

An element is the canonical remainder of a rational polynomial modulo M.
Working modulo M evaluates an expression simultaneously at every root of M,
so an identity holds at all roots iff its residue is the literal zero.
"""

from __future__ import annotations

from fractions import Fraction

from .intpoly import IntPoly
from .ratpoly import RatPoly, rat_gcd_ext


class NotInvertible(ArithmeticError):
    """Element shares a nontrivial factor with the modulus."""

    def __init__(self, message, witness: RatPoly):
        super().__init__(message)
        self.witness = witness


class QuotientContext:
    """Fixed modulus; builds and canonicalizes residues."""

    __slots__ = ("modulus",)

    def __init__(self, modulus):
        if isinstance(modulus, IntPoly):
            modulus = RatPoly.from_intpoly(modulus)
        if not modulus or modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        self.modulus = modulus.monic()

    def element(self, poly) -> "QuotientElement":
        if isinstance(poly, IntPoly):
            poly = RatPoly.from_intpoly(poly)
        elif isinstance(poly, (int, Fraction)):
            poly = RatPoly.constant(poly)
        return QuotientElement(self, poly % self.modulus)

    def zero(self) -> "QuotientElement":
        return QuotientElement(self, RatPoly.zero())

    def one(self) -> "QuotientElement":
        return QuotientElement(self, RatPoly.one())

    def generator(self) -> "QuotientElement":
        """The residue class of a itself."""
        return self.element(RatPoly((0, 1)))

    def __eq__(self, other):
        return isinstance(other, QuotientContext) and self.modulus == other.modulus

    def __repr__(self):
        return f"QuotientContext(degree={self.modulus.degree})"


class QuotientElement:
    __slots__ = ("ctx", "residue")

    def __init__(self, ctx: QuotientContext, residue: RatPoly):
        self.ctx = ctx
        self.residue = residue

    def is_zero(self) -> bool:
        return not self.residue

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self.ctx == other.ctx and self.residue == other.residue
        return NotImplemented

    def __repr__(self):
        return f"QuotientElement({self.residue!r})"

    def __neg__(self):
        return QuotientElement(self.ctx, -self.residue)

    def __add__(self, other):
        return QuotientElement(self.ctx, self.residue + other.residue)

    def __sub__(self, other):
        return QuotientElement(self.ctx, self.residue - other.residue)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuotientElement(self.ctx, self.residue * other)
        return QuotientElement(
            self.ctx, (self.residue * other.residue) % self.ctx.modulus)

    __rmul__ = __mul__

    def inv(self) -> "QuotientElement":
        """Multiplicative inverse via extended Euclid.

        Raises NotInvertible carrying the offending gcd when the residue
        shares a factor with the modulus.
        """
        if not self.residue:
            raise NotInvertible("zero is not invertible", self.ctx.modulus)
        g, s, _ = rat_gcd_ext(self.residue, self.ctx.modulus)
        if g.degree != 0:
            raise NotInvertible("gcd with modulus is nontrivial", g)
        return QuotientElement(self.ctx, s % self.ctx.modulus)

    def __pow__(self, e: int) -> "QuotientElement":
        if e < 0:
            return self.inv() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result
