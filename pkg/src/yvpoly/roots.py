"""High-precision root extraction for the family, with certification.

Root finding runs in the y = z^3 domain on the compressed coefficients
(one third the degree, and the threefold symmetry of the full root set is
then exact by construction), using Aberth-Ehrlich simultaneous correction
started from a Fujiwara-bound circle. Converged roots are polished with
Newton steps at doubled precision before certification.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import mpmath as mp

from .family import StructureViolation, YvRecord, expected_degree
from .report import VerificationReport

DEFAULT_PRECISION_BITS = 256
MAX_ITERATIONS = 400


class NoConvergence(RuntimeError):
    def __init__(self, message, iterations=None, worst_residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.worst_residual = worst_residual


class CertificationFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class ReducedPoly:
    """Compressed coefficients read as a polynomial R(y), y = z^3."""
    n: int
    y_coeffs: tuple  # low-to-high, integers; monic
    zero_root: bool  # true iff a factor z was stripped

    @property
    def degree(self) -> int:
        return len(self.y_coeffs) - 1


@dataclass(frozen=True)
class RootSet:
    n: int
    roots: tuple  # mp.mpc values
    precision_bits: int
    residuals: tuple
    max_residual: object
    min_separation: object
    includes_zero: bool

    def nonzero_roots(self):
        return tuple(r for r in self.roots if r != 0)


def working_precision(degree: int, precision_bits: int = DEFAULT_PRECISION_BITS,
                      coeff_bits: int = 0) -> int:
    # coeff_bits keeps the exact-integer -> float conversion faithful
    return max(precision_bits, 128, 4 * degree, coeff_bits + 64)


def _coeff_bits(coeffs) -> int:
    return max((abs(c).bit_length() for c in coeffs if c), default=1)


def cube_reduce(r: YvRecord) -> ReducedPoly:
    if r.compressed[0] != 1:
        raise StructureViolation(f"Q_{r.n} not monic in compressed form")
    y_coeffs = tuple(reversed(r.compressed))
    if r.n >= 1 and y_coeffs[0] == 0:
        raise StructureViolation(f"R_{r.n}(0) vanishes")
    return ReducedPoly(n=r.n, y_coeffs=y_coeffs, zero_root=r.has_zero_root)


def _horner(coeffs, x):
    acc = mp.mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _fujiwara_radius(coeffs):
    d = len(coeffs) - 1
    lead = abs(mp.mpf(coeffs[-1]))
    best = mp.mpf(0)
    for k in range(1, d + 1):
        c = coeffs[d - k]
        if c:
            cand = (abs(mp.mpf(c)) / lead) ** (mp.mpf(1) / k)
            if cand > best:
                best = cand
    return 2 * best if best > 0 else mp.mpf(1)


def find_roots(p: ReducedPoly, precision_bits: int = DEFAULT_PRECISION_BITS,
               seed: int = 0):
    """All simple roots of R(y) by Aberth-Ehrlich simultaneous correction."""
    d = p.degree
    if d < 1:
        return []
    if precision_bits < 53:
        raise ValueError("precision_bits must be >= 53")
    prec = working_precision(d, precision_bits, _coeff_bits(p.y_coeffs))
    rng = random.Random(seed)
    with mp.workprec(prec + 32):
        coeffs = [mp.mpf(c) for c in p.y_coeffs]
        dcoeffs = [mp.mpf(k * c) for k, c in enumerate(p.y_coeffs)][1:]
        radius = _fujiwara_radius(coeffs)
        xs = []
        for k in range(d):
            # symmetry-breaking perturbation of the initial circle
            angle = 2 * mp.pi * (k + mp.mpf("0.25")) / d \
                + mp.mpf(rng.uniform(-0.1, 0.1)) / d
            xs.append(radius * mp.exp(1j * angle) * (1 + mp.mpf(rng.uniform(-0.01, 0.01))))
        stop = mp.mpf(2) ** (-prec + 8)
        converged = False
        for iteration in range(MAX_ITERATIONS):
            max_step = mp.mpf(0)
            for i in range(d):
                xi = xs[i]
                pv = _horner(coeffs, xi)
                dv = _horner(dcoeffs, xi)
                if dv == 0:
                    xs[i] = xi + stop * (1 + abs(xi))
                    max_step = mp.mpf(1)
                    continue
                newton = pv / dv
                s = mp.mpf(0)
                for j in range(d):
                    if j != i:
                        s += 1 / (xi - xs[j])
                denom = 1 - newton * s
                corr = newton if denom == 0 else newton / denom
                xs[i] = xi - corr
                rel = abs(corr) / (1 + abs(xs[i]))
                if rel > max_step:
                    max_step = rel
            if max_step < stop:
                converged = True
                break
        if not converged:
            worst = max(abs(_horner(coeffs, x)) for x in xs)
            raise NoConvergence(
                f"Aberth did not converge for n={p.n}",
                iterations=MAX_ITERATIONS, worst_residual=worst)
    # polish with Newton steps at doubled precision
    with mp.workprec(2 * prec):
        coeffs = [mp.mpf(c) for c in p.y_coeffs]
        dcoeffs = [mp.mpf(k * c) for k, c in enumerate(p.y_coeffs)][1:]
        polished = []
        for x in xs:
            x = mp.mpc(x)
            for _ in range(2):
                dv = _horner(dcoeffs, x)
                if dv != 0:
                    x = x - _horner(coeffs, x) / dv
            polished.append(x)
    return polished


def _residual(coeffs, x):
    """|p(x)| relative to the coefficient magnitude scale at x."""
    val = abs(_horner(coeffs, x))
    scale = _horner([abs(c) for c in coeffs], abs(x))
    return val / scale if scale > 0 else val


def _expand_z_coeffs(p: ReducedPoly):
    eps = 1 if p.zero_root else 0
    out = [0] * (3 * p.degree + eps + 1)
    for k, c in enumerate(p.y_coeffs):
        out[3 * k + eps] = c
    return out


def lift_cube_roots(y_roots: Sequence, p: ReducedPoly,
                    precision_bits: int = DEFAULT_PRECISION_BITS) -> RootSet:
    """Each y-root contributes its three cube roots; zero appended if stripped."""
    prec = working_precision(p.degree, precision_bits, _coeff_bits(p.y_coeffs))
    with mp.workprec(2 * prec):
        zc = [mp.mpf(c) for c in _expand_z_coeffs(p)]
        omega = mp.exp(2j * mp.pi / 3)
        roots = []
        for y in y_roots:
            r = mp.cbrt(abs(y))
            theta = mp.arg(y) / 3
            base = r * mp.exp(1j * theta)
            roots.extend([base, base * omega, base * omega * omega])
        if p.zero_root:
            roots.append(mp.mpc(0))
        residuals = tuple(_residual(zc, z) for z in roots)
        max_residual = max(residuals) if residuals else mp.mpf(0)
        min_sep = None
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                dist = abs(roots[i] - roots[j])
                if min_sep is None or dist < min_sep:
                    min_sep = dist
    rs = RootSet(
        n=p.n, roots=tuple(roots), precision_bits=prec,
        residuals=residuals, max_residual=max_residual,
        min_separation=min_sep if min_sep is not None else mp.inf,
        includes_zero=p.zero_root)
    threshold = mp.mpf(2) ** (-prec // 2)
    if rs.roots and rs.max_residual > threshold:
        raise CertificationFailure(
            f"residual {mp.nstr(rs.max_residual, 5)} above threshold at n={p.n}")
    return rs


def roots_for_record(r: YvRecord, precision_bits: int = DEFAULT_PRECISION_BITS,
                     seed: int = 0) -> RootSet:
    rp = cube_reduce(r)
    if rp.degree < 1 and not rp.zero_root:
        return RootSet(n=r.n, roots=(), precision_bits=precision_bits,
                       residuals=(), max_residual=mp.mpf(0),
                       min_separation=mp.inf, includes_zero=False)
    y_roots = find_roots(rp, precision_bits, seed=seed) if rp.degree >= 1 else []
    return lift_cube_roots(y_roots, rp, precision_bits)


def _closed_under(roots, images, tol):
    """Greedy nearest-neighbour matching; must be an unambiguous bijection."""
    used = [False] * len(roots)
    for img in images:
        hits = [k for k, r in enumerate(roots) if abs(r - img) < tol]
        if len(hits) != 1 or used[hits[0]]:
            return False
        used[hits[0]] = True
    return all(used)


def certify(rs: RootSet, r: YvRecord,
            threshold=None) -> VerificationReport:
    """Count, residual, separation, rotation/conjugation closure, and a
    numeric guard that no nonzero real root sits near a small rational."""
    rep = VerificationReport(suite="roots", n=rs.n)
    expected = expected_degree(r.n)
    if len(rs.roots) != expected:
        rep.fail({"check": "count", "got": len(rs.roots), "want": expected})
    with mp.workprec(rs.precision_bits):
        tol = mp.mpf(2) ** (-rs.precision_bits // 2)
        if threshold is None:
            threshold = tol
        if rs.roots and rs.max_residual > threshold:
            rep.fail({"check": "residual",
                      "max_residual": mp.nstr(rs.max_residual, 8)})
        if len(rs.roots) > 1 and not rs.min_separation > 0:
            rep.fail({"check": "separation"})
        if rs.roots:
            omega = mp.exp(2j * mp.pi / 3)
            if not _closed_under(rs.roots, [z * omega for z in rs.roots], tol):
                rep.fail({"check": "omega_closure"})
            if not _closed_under(rs.roots, [mp.conj(z) for z in rs.roots], tol):
                rep.fail({"check": "conjugation_closure"})
        for z in rs.roots:
            if z == 0 or abs(mp.im(z)) >= tol:
                continue
            x = mp.re(z)
            for q in range(1, 65):
                approx = mp.mpf(int(mp.nint(x * q))) / q
                if abs(x - approx) < tol:
                    rep.fail({"check": "near_rational",
                              "root": mp.nstr(x, 20), "denominator": q})
                    break
    return rep


# ---------------------------------------------------------------------------
# Exports

def export_csv(rs: RootSet, path) -> None:
    import csv
    digits = max(17, int(rs.precision_bits * 0.3))
    with mp.workprec(rs.precision_bits), open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "re", "im", "residual"])
        for z, res in zip(rs.roots, rs.residuals):
            writer.writerow([
                rs.n,
                mp.nstr(mp.re(z), digits),
                mp.nstr(mp.im(z), digits),
                mp.nstr(res, 8),
            ])


def export_svg(rs: RootSet, path, size: int = 480) -> None:
    """Self-contained scatter of the root set, equal-aspect axes."""
    with mp.workprec(64):
        radius = max((abs(z) for z in rs.roots), default=mp.mpf(1))
        span = float(radius) * 1.15 or 1.0
        pts = [(float(mp.re(z)), float(mp.im(z))) for z in rs.roots]
    half = size / 2
    scale = half / span
    dot = max(2.0, size / 160)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="0" y1="{half}" x2="{size}" y2="{half}" stroke="#ccc"/>',
        f'<line x1="{half}" y1="0" x2="{half}" y2="{size}" stroke="#ccc"/>',
    ]
    for x, y in pts:
        cx = half + x * scale
        cy = half - y * scale
        lines.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{dot:.1f}" '
                     f'fill="#1f4e9c"/>')
    lines.append(f'<text x="8" y="{size - 8}" font-family="sans-serif" '
                 f'font-size="14">n = {rs.n}, {len(rs.roots)} roots</text>')
    lines.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
