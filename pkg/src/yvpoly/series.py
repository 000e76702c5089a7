"""Exact sums of negative powers of roots, and series solutions at the origin.

Inverse-root power sums come from Newton's identities on the reversed
nonzero part of each polynomial, so every value is an exact rational even
though the individual roots are irrational. The same sums reappear as
Taylor coefficients of the rational Painleve solutions at 0, which the ODE
coefficient recursion reproduces independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .intpoly import newton_power_sums
from .report import PASS, VerificationReport


class ResonanceUnavailable(Exception):
    """Records needed for the imported series coefficient are missing."""


class FitFailure(Exception):
    """Sums are not polynomial in n within the degree bound."""


@dataclass
class PowerSumTable:
    n: int
    sums: dict = field(default_factory=dict)  # m -> Fraction

    def __getitem__(self, m: int) -> Fraction:
        return self.sums[m]


def inverse_power_sums(record, max_m: int) -> PowerSumTable:
    """sums[m] = sum over nonzero roots z of Q_n of z**-m, exact."""
    body = record.nonzero_part()
    table = PowerSumTable(n=record.n)
    if not body or body.degree < 1:
        table.sums = {m: Fraction(0) for m in range(1, max_m + 1)}
        return table
    rev = body.reverse_nonzero()
    p = newton_power_sums(rev, max_m)
    table.sums = {m: p[m - 1] for m in range(1, max_m + 1)}
    return table


# ---------------------------------------------------------------------------
# Closed forms

def closed_form_value(n: int, m: int) -> Fraction:
    """The displayed polynomial-in-n value of the m-th inverse-root sum."""
    r = n % 3
    if m == 3:
        if r == 0:
            return Fraction(n, 4)
        if r == 1:
            return Fraction(0)
        return Fraction(-(n + 1), 4)
    if m == 6:
        if r == 0:
            return Fraction(n * n, 40) + Fraction(n, 80)
        if r == 1:
            return Fraction(-n * n, 560) - Fraction(n, 560) + Fraction(1, 280)
        return Fraction(n * n, 40) + Fraction(3 * n, 80) + Fraction(1, 80)
    if m == 9:
        if r == 0:
            return Fraction(n + 7 * n ** 2 + 10 * n ** 3, 4480)
        if r == 1:
            return Fraction(2 - n - n ** 2, 22400)
        return Fraction(-20 - 85 * n - 115 * n ** 2 - 50 * n ** 3, 22400)
    raise ValueError(f"no closed form for m={m}")


def difference_value(n: int, m: int) -> Fraction:
    """Closed form of sum(Q_{n-1}) - sum(Q_n), nonzero roots, m in {3,6,9}."""
    r = n % 3
    if r == 0:
        if m == 3:
            return Fraction(-n, 2)
        if m == 6:
            return Fraction(-n, 40)
        if m == 9:
            return Fraction(-n, 2240) - Fraction(n ** 3, 224)
    else:
        k = n - 1 if r == 1 else n + 1
        sign = 1 if r == 1 else -1
        if m == 3:
            return Fraction(k, 4)
        if m == 6:
            return Fraction(k, 56) + sign * Fraction(3 * k * k, 112)
        if m == 9:
            return (Fraction(k, 2800) + sign * Fraction(9 * k * k, 5600)
                    + Fraction(k ** 3, 448))
    raise ValueError(f"no difference closed form for m={m}")


def verify_closed_forms(records: Sequence, n_max: int,
                        symmetry_max_m: int = 0) -> VerificationReport:
    """Exact equality with the m = 3, 6, 9 formulas; optionally also the
    vanishing of every sum with m not divisible by 3."""
    rep = VerificationReport(suite="sums")
    top_m = max(9, symmetry_max_m)
    for n in range(n_max + 1):
        table = inverse_power_sums(records[n], top_m)
        for m in (3, 6, 9):
            if table[m] != closed_form_value(n, m):
                rep.fail({"check": "closed_form", "n": n, "m": m,
                          "got": table[m], "want": closed_form_value(n, m)})
        for m in range(1, symmetry_max_m + 1):
            if m % 3 != 0 and table[m] != 0:
                rep.fail({"check": "zero_symmetry", "n": n, "m": m,
                          "got": table[m]})
    return rep


def verify_difference_relations(records: Sequence, n_max: int) -> VerificationReport:
    """The nine displayed difference formulas, every applicable n."""
    rep = VerificationReport(suite="sums_differences")
    for n in range(1, n_max + 1):
        prev = inverse_power_sums(records[n - 1], 9)
        cur = inverse_power_sums(records[n], 9)
        for m in (3, 6, 9):
            got = prev[m] - cur[m]
            want = difference_value(n, m)
            if got != want:
                rep.fail({"n": n, "m": m, "got": got, "want": want})
    return rep


# ---------------------------------------------------------------------------
# Series at the origin

def _series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[:order + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[:order + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def series_at_zero(records: Sequence, n: int, M: int) -> list:
    """Exact Taylor coefficients (orders 0..M) at 0 of w_n, or of
    u = w_n + 1/z (n = 1 mod 3) / u = w_n - 1/z (n = 2 mod 3).

    The coefficient recursion follows from the Painleve equation; for the
    shifted cases the order-3 coefficient is a resonance the recursion
    cannot see and is imported from the exact Newton sums.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if M < 0:
        raise ValueError("M must be >= 0")
    r = n % 3
    a = [Fraction(0)] * (M + 1)
    if r == 0:
        # w'' = 2w^3 + zw + n with w(0) = w'(0) = 0
        for m in range(M - 1):
            w3 = _series_mul(_series_mul(a, a, m), a, m)
            rhs = 2 * w3[m] + (a[m - 1] if m >= 1 else 0)
            if m == 0:
                rhs += n
            a[m + 2] = Fraction(rhs, (m + 1) * (m + 2))
        return a
    # z^2 u'' = 6u + s 6z u^2 + 2 z^2 u^3 + z^3 u + K z^2,
    # s = -1 when u = w + 1/z (n = 1 mod 3), s = +1 when u = w - 1/z
    k_const = n - 1 if r == 1 else n + 1
    sign = -1 if r == 1 else 1
    for m in range(M + 1):
        if m == 3:
            if n >= len(records):
                raise ResonanceUnavailable(
                    f"records up to {n} required for the order-3 coefficient")
            prev = inverse_power_sums(records[n - 1], 4)
            cur = inverse_power_sums(records[n], 4)
            a[3] = -(prev[4] - cur[4])
            continue
        rhs = Fraction(0)
        if m >= 1:
            u2 = _series_mul(a, a, m - 1)
            rhs += sign * 6 * u2[m - 1]
        if m >= 2:
            u3 = _series_mul(_series_mul(a, a, m - 2), a, m - 2)
            rhs += 2 * u3[m - 2]
            if m == 2:
                rhs += k_const
        if m >= 3:
            rhs += a[m - 3]
        a[m] = rhs / ((m - 3) * (m + 2))
    return a


def ode_residual_orders(records: Sequence, n: int, M: int) -> list:
    """Coefficients of LHS - RHS of the governing ODE through order M - 2.

    Uses the fully assembled series (imported resonance included); all
    entries must be exactly zero.
    """
    a = series_at_zero(records, n, M)
    r = n % 3
    out = []
    if r == 0:
        for m in range(M - 1):
            w3 = _series_mul(_series_mul(a, a, m), a, m)
            lhs = (m + 1) * (m + 2) * a[m + 2]
            rhs = 2 * w3[m] + (a[m - 1] if m >= 1 else 0) + (n if m == 0 else 0)
            out.append(lhs - rhs)
        return out
    k_const = n - 1 if r == 1 else n + 1
    sign = -1 if r == 1 else 1
    u2 = _series_mul(a, a, M)
    u3 = _series_mul(u2, a, M)
    for m in range(M + 1):
        lhs = m * (m - 1) * a[m]
        rhs = 6 * a[m]
        if m >= 1:
            rhs += sign * 6 * u2[m - 1]
        if m >= 2:
            rhs += 2 * u3[m - 2]
            if m == 2:
                rhs += k_const
        if m >= 3:
            rhs += a[m - 3]
        out.append(lhs - rhs)
    return out


def cross_check_series(records: Sequence, n: int, M: int) -> VerificationReport:
    """ODE-recursion coefficients against Newton-identity coefficients.

    The imported resonance coefficient is excluded from the direct
    comparison (it would be circular) and is covered by the ODE residual.
    """
    rep = VerificationReport(suite="series", n=n)
    a = series_at_zero(records, n, M)
    prev = inverse_power_sums(records[n - 1], M + 1)
    cur = inverse_power_sums(records[n], M + 1)
    r = n % 3
    for m in range(M + 1):
        if r != 0 and m == 3:
            continue
        want = -(prev[m + 1] - cur[m + 1])
        if a[m] != want:
            rep.fail({"check": "newton", "m": m, "got": a[m], "want": want})
    for m, res in enumerate(ode_residual_orders(records, n, M)):
        if res != 0:
            rep.fail({"check": "ode_residual", "order": m, "value": res})
    return rep


# ---------------------------------------------------------------------------
# Polynomiality of the sums in n

def _lagrange_interpolate(points):
    """Exact interpolating polynomial through (x, y) pairs; coefficient list."""
    k = len(points)
    coeffs = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # multiply basis by (x - xj)
            new = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                new[t] -= c * xj
                new[t + 1] += c
            basis = new
            denom *= xi - xj
        scale = yi / denom
        for t, c in enumerate(basis):
            coeffs[t] += c * scale
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def verify_remark_polynomiality(records: Sequence, m: int,
                                n_max: int) -> VerificationReport:
    """Per residue class of n, the m-th inverse-root sum is polynomial in n.

    Fits the minimal-degree exact interpolant (degree at most m/3 + 1)
    through the leading samples and demands exact prediction of every
    held-out sample. Raises FitFailure when no such polynomial exists.
    """
    if m < 3 or m % 3 != 0:
        raise ValueError("m must be a positive multiple of 3")
    degree_bound = m // 3 + 1
    rep = VerificationReport(suite="remark", details={"m": m})
    for cls in range(3):
        samples = [(n, inverse_power_sums(records[n], m)[m])
                   for n in range(n_max + 1) if n % 3 == cls]
        if len(samples) < degree_bound + 2:
            raise ValueError(
                f"need at least {degree_bound + 2} samples in class {cls}")
        fitted = None
        for d in range(degree_bound + 1):
            coeffs = _lagrange_interpolate(samples[:d + 1])
            if all(_poly_eval(coeffs, x) == y for x, y in samples[d + 1:]):
                fitted = (d, coeffs)
                break
        if fitted is None:
            raise FitFailure(
                f"class {cls}, m={m}: no polynomial of degree <= {degree_bound}")
        d, coeffs = fitted
        rep.details[f"class_{cls}"] = {
            "degree": d,
            "coefficients": [str(c) for c in coeffs],
            "held_out": len(samples) - (d + 1),
        }
    return rep


def sums_table(records: Sequence, n_max: int, m_list: Sequence[int]) -> list:
    """Rows for the export: exact sums plus closed-form comparison columns."""
    rows = []
    for n in range(n_max + 1):
        table = inverse_power_sums(records[n], max(m_list))
        for m in m_list:
            row = {"n": n, "m": m, "sum": table[m]}
            if m in (3, 6, 9):
                row["closed_form"] = closed_form_value(n, m)
                row["match"] = table[m] == closed_form_value(n, m)
            rows.append(row)
    return rows
