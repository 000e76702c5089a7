"""Inter-root relations between consecutive family members.

Each relation is verified by two independent routes:

* exact mode -- arithmetic in Q[a]/(host(a)), where a stands simultaneously
  for every root of the host polynomial. A sum over the roots of the target
  is the residue of derivatives of target'/target; a sum over the host's own
  remaining roots comes from the Taylor expansion of host'/host - 1/(z - a)
  at the generic root. A relation holds iff the assembled residue is zero.

* numeric mode -- direct pairwise summation over certified high-precision
  root sets, relation by relation and root by root.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import mpmath as mp

from .intpoly import IntPoly
from .quotient import QuotientContext, QuotientElement
from .ratpoly import RatPoly
from .report import FAIL, PASS, SKIPPED, VerificationReport

MAX_SERIES_ORDER = 6  # host-side Taylor order; covers powers up to 5


# ---------------------------------------------------------------------------
# Exact route

def cross_sum_residue(host: IntPoly, target: IntPoly, p: int,
                      ctx: QuotientContext | None = None) -> QuotientElement:
    """Residue of sum over roots t of target of 1/(a - t)^p in Q[a]/(host).

    Realized through N_1 = target' and the recursion
    N_{p+1} = -(1/p) (N_p' T - p N_p T'), giving the sum as N_p / T^p.
    """
    if ctx is None:
        ctx = QuotientContext(host)
    t = RatPoly.from_intpoly(target)
    if not t or t.degree == 0:
        return ctx.zero()  # no roots to sum over
    n_p = t.derivative()
    for k in range(1, p):
        n_p = (n_p.derivative() * t - k * n_p * t.derivative()) * Fraction(-1, k)
    return ctx.element(n_p) * (ctx.element(t).inv() ** p)


def self_sum_residue(host: IntPoly, p: int,
                     ctx: QuotientContext | None = None) -> QuotientElement:
    """Residue of sum over the host's other roots of 1/(a - r)^p.

    Taylor coefficients of host at the generic root a feed a formal series
    division; the inverted constant term is host'(a), whose invertibility is
    exactly simplicity of the roots.
    """
    if ctx is None:
        ctx = QuotientContext(host)
    if not host or host.degree < 1:
        raise ValueError("host must have degree >= 1")
    if host.degree == 1:
        return ctx.zero()  # no other roots
    order = max(p + 1, MAX_SERIES_ORDER)
    # c[i] = host^{(i)}(a) / i!
    c = []
    deriv = RatPoly.from_intpoly(host)
    fact = 1
    for i in range(order + 2):
        c.append(ctx.element(deriv * Fraction(1, fact)))
        deriv = deriv.derivative()
        fact *= i + 1
    a_series = [(m + 1) * c[m + 2] for m in range(p)]
    b_series = [c[m + 1] for m in range(p)]
    b0_inv = b_series[0].inv()
    g = []
    for m in range(p):
        acc = a_series[m]
        for i in range(1, m + 1):
            acc = acc - b_series[i] * g[m - i]
        g.append(acc * b0_inv)
    return g[p - 1] * ((-1) ** (p - 1))


# ---------------------------------------------------------------------------
# Numeric route helpers

def _pair_sums(z, others, powers, exclude_self: bool):
    """sums[p] = sum over others of 1/(z - other)^p (skipping z itself once)."""
    sums = {p: mp.mpc(0) for p in powers}
    skipped = False
    for other in others:
        if exclude_self and not skipped and other == z:
            skipped = True
            continue
        d = 1 / (z - other)
        d2 = d * d
        vals = {1: d, 2: d2, 3: d2 * d, 5: d2 * d2 * d}
        for p in powers:
            sums[p] += vals[p] if p in vals else d ** p
    return sums


def _numeric_relation_deviation(host_roots, target_roots, rhs_of_root, p,
                                cross_first: bool):
    """Worst |LHS - RHS| / max(1, |RHS|) over all host roots.

    LHS is (self - cross) or (cross - self) depending on the family group.
    """
    worst = mp.mpf(0)
    for z in host_roots:
        self_sum = _pair_sums(z, host_roots, (p,), True)[p]
        cross_sum = _pair_sums(z, target_roots, (p,), False)[p] \
            if target_roots else mp.mpc(0)
        lhs = cross_sum - self_sum if cross_first else self_sum - cross_sum
        rhs = rhs_of_root(z)
        dev = abs(lhs - rhs) / max(1, abs(rhs))
        if dev > worst:
            worst = dev
    return worst


# ---------------------------------------------------------------------------
# Relation family tables

def _theorem_families(n: int):
    """(family id, host index, p, cross_first, exact rhs (const, alpha coeff))."""
    # host 'prev' = Q_{n-1}: LHS = self - cross, rhs in terms of the host root
    # host 'cur'  = Q_n:     LHS = cross - self
    return [
        ("T1", "prev", 1, False, (Fraction(0), Fraction(0))),
        ("T2", "prev", 2, False, (Fraction(0), Fraction(1, 6))),
        ("T3", "prev", 3, False, (Fraction(-(n + 1), 4), Fraction(0))),
        ("T5", "prev", 5, False, (Fraction(0), Fraction(n + 1, 24) - Fraction(1, 36))),
        ("T6", "cur", 1, True, (Fraction(0), Fraction(0))),
        ("T7", "cur", 2, True, (Fraction(0), Fraction(-1, 6))),
        ("T8", "cur", 3, True, (Fraction(-(n - 1), 4), Fraction(0))),
        ("T10", "cur", 5, True, (Fraction(0), Fraction(n - 1, 24) + Fraction(1, 36))),
    ]


def _kudryashov_families():
    # pure self sums over the roots of Q_n; coefficients do not involve n
    return [
        ("K2", 2, (Fraction(0), Fraction(-1, 12))),
        ("K3", 3, (Fraction(0), Fraction(0))),
        ("K5", 5, (Fraction(0), Fraction(-1, 144))),
    ]


def _corollary_families(n: int):
    # pure cross sums; host 'prev' sums over Q_n roots and vice versa
    return [
        ("C2", "prev", 2, (Fraction(0), Fraction(-1, 4))),
        ("C3", "prev", 3, (Fraction(n + 1, 4), Fraction(0))),
        ("C5", "prev", 5, (Fraction(0), -(Fraction(n + 1, 24) - Fraction(1, 48)))),
        ("C6", "cur", 2, (Fraction(0), Fraction(-1, 4))),
        ("C7", "cur", 3, (Fraction(-(n - 1), 4), Fraction(0))),
        ("C8", "cur", 5, (Fraction(0), Fraction(n - 1, 24) + Fraction(1, 48))),
    ]


def _rhs_element(ctx: QuotientContext, rhs) -> QuotientElement:
    const, alpha_coeff = rhs
    return ctx.element(const) + ctx.generator() * alpha_coeff


def _rhs_numeric(rhs):
    const, alpha_coeff = rhs
    c = mp.mpf(const.numerator) / const.denominator
    a = mp.mpf(alpha_coeff.numerator) / alpha_coeff.denominator
    return lambda z: c + a * z


def _report(family, n, mode, ok, witness=None, deviation=None):
    rep = VerificationReport(suite="relations", n=n,
                             status=PASS if ok else FAIL,
                             details={"family": family, "mode": mode})
    if deviation is not None:
        rep.details["deviation"] = mp.nstr(deviation, 8)
    if not ok and witness is not None:
        rep.witnesses.append(witness)
    return rep


def _roots_pair(rootsets, n):
    prev = rootsets[n - 1].roots if n - 1 in rootsets else ()
    cur = rootsets[n].roots
    return prev, cur


def _numeric_prec(rootsets, n) -> int:
    prec = rootsets[n].precision_bits
    if n - 1 in rootsets:
        prec = max(prec, rootsets[n - 1].precision_bits)
    return prec


def verify_theorem(records: Sequence, n: int, mode: str = "exact",
                   rootsets: dict | None = None,
                   tolerance=None) -> list:
    """The eight relation families tying roots of Q_{n-1} to roots of Q_n."""
    prev_poly, cur_poly = records[n - 1].poly, records[n].poly
    reports = []
    if mode == "exact":
        ctx_prev = QuotientContext(prev_poly) if (prev_poly.degree or 0) >= 1 else None
        ctx_cur = QuotientContext(cur_poly)
        for family, host_key, p, cross_first, rhs in _theorem_families(n):
            if host_key == "prev":
                if ctx_prev is None:
                    reports.append(VerificationReport(
                        suite="relations", n=n, status=SKIPPED,
                        details={"family": family, "mode": mode,
                                 "reason": "host has no roots"}))
                    continue
                ctx, host, target = ctx_prev, prev_poly, cur_poly
            else:
                ctx, host, target = ctx_cur, cur_poly, prev_poly
            self_e = self_sum_residue(host, p, ctx)
            cross_e = cross_sum_residue(host, target, p, ctx)
            lhs = cross_e - self_e if cross_first else self_e - cross_e
            residue = lhs - _rhs_element(ctx, rhs)
            reports.append(_report(family, n, mode, residue.is_zero(),
                                   witness={"residue": residue.residue}))
    elif mode == "numeric":
        prev_roots, cur_roots = _roots_pair(rootsets, n)
        with mp.workprec(_numeric_prec(rootsets, n)):
            tol = tolerance if tolerance is not None else mp.mpf(10) ** -30
            for family, host_key, p, cross_first, rhs in _theorem_families(n):
                host_roots, target_roots = (
                    (prev_roots, cur_roots) if host_key == "prev"
                    else (cur_roots, prev_roots))
                if not host_roots:
                    reports.append(VerificationReport(
                        suite="relations", n=n, status=SKIPPED,
                        details={"family": family, "mode": mode,
                                 "reason": "host has no roots"}))
                    continue
                dev = _numeric_relation_deviation(
                    host_roots, target_roots, _rhs_numeric(rhs), p, cross_first)
                reports.append(_report(family, n, mode, dev < tol, deviation=dev,
                                       witness={"deviation": mp.nstr(dev, 8)}))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return reports


def verify_kudryashov(records: Sequence, n: int, mode: str = "exact",
                      rootsets: dict | None = None,
                      tolerance=None) -> list:
    """Self-sum identities over the roots of Q_n alone."""
    cur_poly = records[n].poly
    reports = []
    if mode == "exact":
        ctx = QuotientContext(cur_poly)
        for family, p, rhs in _kudryashov_families():
            lhs = self_sum_residue(cur_poly, p, ctx)
            residue = lhs - _rhs_element(ctx, rhs)
            reports.append(_report(family, n, mode, residue.is_zero(),
                                   witness={"residue": residue.residue}))
    elif mode == "numeric":
        cur_roots = rootsets[n].roots
        with mp.workprec(rootsets[n].precision_bits):
            tol = tolerance if tolerance is not None else mp.mpf(10) ** -30
            for family, p, rhs in _kudryashov_families():
                rhs_f = _rhs_numeric(rhs)
                worst = mp.mpf(0)
                for z in cur_roots:
                    s = _pair_sums(z, cur_roots, (p,), True)[p]
                    dev = abs(s - rhs_f(z)) / max(1, abs(rhs_f(z)))
                    worst = max(worst, dev)
                reports.append(_report(family, n, mode, worst < tol,
                                       deviation=worst,
                                       witness={"deviation": mp.nstr(worst, 8)}))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return reports


def verify_corollary(records: Sequence, n: int, mode: str = "exact",
                     rootsets: dict | None = None,
                     tolerance=None) -> list:
    """Pure cross-sum identities between roots of Q_{n-1} and Q_n."""
    prev_poly, cur_poly = records[n - 1].poly, records[n].poly
    reports = []
    if mode == "exact":
        ctx_prev = QuotientContext(prev_poly) if (prev_poly.degree or 0) >= 1 else None
        ctx_cur = QuotientContext(cur_poly)
        for family, host_key, p, rhs in _corollary_families(n):
            if host_key == "prev":
                if ctx_prev is None:
                    reports.append(VerificationReport(
                        suite="corollary", n=n, status=SKIPPED,
                        details={"family": family, "mode": mode}))
                    continue
                ctx, host, target = ctx_prev, prev_poly, cur_poly
            else:
                ctx, host, target = ctx_cur, cur_poly, prev_poly
            lhs = cross_sum_residue(host, target, p, ctx)
            residue = lhs - _rhs_element(ctx, rhs)
            reports.append(_report(family, n, mode, residue.is_zero(),
                                   witness={"residue": residue.residue}))
    elif mode == "numeric":
        prev_roots, cur_roots = _roots_pair(rootsets, n)
        with mp.workprec(_numeric_prec(rootsets, n)):
            tol = tolerance if tolerance is not None else mp.mpf(10) ** -30
            for family, host_key, p, rhs in _corollary_families(n):
                host_roots, target_roots = (
                    (prev_roots, cur_roots) if host_key == "prev"
                    else (cur_roots, prev_roots))
                if not host_roots:
                    reports.append(VerificationReport(
                        suite="corollary", n=n, status=SKIPPED,
                        details={"family": family, "mode": mode}))
                    continue
                rhs_f = _rhs_numeric(rhs)
                worst = mp.mpf(0)
                for z in host_roots:
                    s = _pair_sums(z, target_roots, (p,), False)[p] \
                        if target_roots else mp.mpc(0)
                    dev = abs(s - rhs_f(z)) / max(1, abs(rhs_f(z)))
                    worst = max(worst, dev)
                reports.append(_report(family, n, mode, worst < tol,
                                       deviation=worst,
                                       witness={"deviation": mp.nstr(worst, 8)}))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return reports


# ---------------------------------------------------------------------------
# Laurent coefficients at a pole of w_n

def pole_series_check(records: Sequence, n: int, j: int,
                      rootsets: dict, M: int = 4,
                      tolerance=None) -> VerificationReport:
    """Coefficients of w_n - 1/(z - omega) at the j-th root omega of Q_{n-1}.

    a_0, a_1, a_2 and a_4 are checked against their closed forms; a_3 is
    reported only (it is not determined by the local recursion).
    """
    prev_roots = rootsets[n - 1].roots
    cur_roots = rootsets[n].roots
    with mp.workprec(_numeric_prec(rootsets, n)):
        tol = tolerance if tolerance is not None else mp.mpf(10) ** -20
        omega = prev_roots[j]
        rep = VerificationReport(suite="poleseries", n=n,
                                 details={"j": j, "omega": mp.nstr(omega, 20)})
        coeffs = []
        for m in range(M + 1):
            p = m + 1
            self_s = _pair_sums(omega, prev_roots, (p,), True)[p]
            cross_s = _pair_sums(omega, cur_roots, (p,), False)[p]
            coeffs.append((-1) ** m * (self_s - cross_s))
        expected = {
            0: mp.mpc(0),
            1: -omega / 6,
            2: mp.mpc(-(n + 1)) / 4,
            4: omega * (mp.mpf(n + 1) / 24 - mp.mpf(1) / 36),
        }
        for m, want in expected.items():
            if m > M:
                continue
            dev = abs(coeffs[m] - want) / max(1, abs(want))
            if not dev < tol:
                rep.fail({"m": m, "deviation": mp.nstr(dev, 8)})
        if M >= 3:
            rep.details["a_3"] = mp.nstr(coeffs[3], 20)  # reported, not asserted
    return rep
