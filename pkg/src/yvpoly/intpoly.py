"""Dense univariate polynomial arithmetic over the integers, exact throughout.

Coefficients are plain Python ints (arbitrary precision); ``coeffs[i]`` holds
the coefficient of z**i and the zero polynomial has an empty tuple.
Multiplication switches from schoolbook to Karatsuba above a size threshold,
and polynomials whose support lives in a single residue class mod 3 (the
common case in this project) are multiplied through their compressed
coefficient sequences.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

KARATSUBA_THRESHOLD = 32


class NonZeroRemainder(ArithmeticError):
    """Exact division left a nonzero remainder."""


class NonIntegerQuotient(ArithmeticError):
    """Exact division would require a non-integer coefficient."""


class ZeroConstantTerm(ValueError):
    """Operation requires a nonzero constant term."""


def _trim(coeffs: list) -> list:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    del coeffs[n:]
    return coeffs


def _add_seq(a: Sequence[int], b: Sequence[int]) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _school_mul(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _mul_seq(a: Sequence[int], b: Sequence[int]) -> list:
    if not a or not b:
        return []
    if min(len(a), len(b)) <= KARATSUBA_THRESHOLD:
        return _school_mul(a, b)
    h = min(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_seq(a0, b0)
    z2 = _mul_seq(a1, b1)
    z1 = _mul_seq(_add_seq(a0, a1), _add_seq(b0, b1))
    for i, c in enumerate(z0):
        z1[i] -= c
    for i, c in enumerate(z2):
        z1[i] -= c
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] += c
    for i, c in enumerate(z1):
        if c:
            out[i + h] += c
    for i, c in enumerate(z2):
        if c:
            out[i + 2 * h] += c
    return out


def _stride3_class(coeffs: Sequence[int]):
    """Residue class mod 3 of the support, or None if mixed."""
    cls = -1
    for i, c in enumerate(coeffs):
        if c:
            r = i % 3
            if cls == -1:
                cls = r
            elif cls != r:
                return None
    return cls if cls != -1 else None


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = tuple(_trim(list(coeffs)))

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def z(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * power + [coeff])

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_add_seq(self.coeffs, other.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        ra, rb = _stride3_class(a), _stride3_class(b)
        if ra is not None and rb is not None and (len(a) > 6 or len(b) > 6):
            prod = _mul_seq(a[ra::3], b[rb::3])
            out = [0] * (len(a) + len(b) - 1)
            base = ra + rb
            for i, c in enumerate(prod):
                if c:
                    out[base + 3 * i] = c
            return IntPoly(out)
        return IntPoly(_mul_seq(a, b))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by z**k."""
        if not self.coeffs:
            return IntPoly()
        return IntPoly([0] * k + list(self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def exact_div(self, den: "IntPoly") -> "IntPoly":
        """Exact quotient self / den over the integers.

        Raises NonIntegerQuotient or NonZeroRemainder when self is not an
        exact integer-polynomial multiple of den; these signal integrity
        failures upstream, never recoverable rounding.
        """
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return IntPoly()
        if self.degree < den.degree:
            raise NonZeroRemainder(f"degree {self.degree} < {den.degree}")
        rem = list(self.coeffs)
        dc = den.coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        support = [(k, c) for k, c in enumerate(dc) if c and k < dd]
        q = [0] * (len(rem) - dd)
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + dd]
            if not c:
                continue
            qi, r = divmod(c, lead)
            if r:
                raise NonIntegerQuotient(
                    f"coefficient {c} not divisible by leading {lead}")
            q[i] = qi
            rem[i + dd] = 0
            for k, dk in support:
                rem[i + k] -= qi * dk
        if any(rem):
            raise NonZeroRemainder("nonzero remainder in exact division")
        return IntPoly(q)

    def evaluate(self, x):
        """Horner evaluation; exact when x is int or Fraction."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reverse_nonzero(self) -> "IntPoly":
        """Reverse the coefficient sequence; roots become reciprocals."""
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroConstantTerm("constant term must be nonzero")
        return IntPoly(list(reversed(self.coeffs)))

    def content(self) -> int:
        from math import gcd
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly([c // g for c in self.coeffs])


def newton_power_sums(a: IntPoly, max_m: int) -> list:
    """Power sums p_1..p_max_m of the roots of a, exact rationals.

    Newton's identities on the monic normalization; entries are summed with
    multiplicity over all roots.
    """
    if not a or a.degree < 1:
        raise ValueError("need degree >= 1")
    d = a.degree
    lead = Fraction(a.coeffs[-1])
    # e[k] = (-1)^k c_{d-k} / c_d, elementary symmetric functions
    e = [Fraction(0)] * (max_m + 1)
    for k in range(1, max_m + 1):
        if k <= d:
            e[k] = Fraction((-1) ** k) * Fraction(a.coeffs[d - k]) / lead
    p = [Fraction(0)] * (max_m + 1)
    for k in range(1, max_m + 1):
        acc = Fraction((-1) ** (k - 1) * k) * e[k]
        for i in range(1, k):
            acc += Fraction((-1) ** (i - 1)) * e[i] * p[k - i]
        p[k] = acc
    return p[1:]
