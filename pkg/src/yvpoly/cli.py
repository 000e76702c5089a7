"""Command-line entry point: generation, verification suites, roots, sums.

Exit status is nonzero iff any verification failed or an integrity error
occurred. All big numbers are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import mpmath as mp

from . import family, painleve, relations, roots as rootsmod, series
from .report import FAIL, SKIPPED, VerificationReport, combine, stringify

ALL_SUITES = [
    "structure", "divisibility", "valuation", "wronskian", "pii", "backlund",
    "relations", "corollary", "kudryashov", "poleseries", "sums", "series",
    "remark",
]

EXACT_MODE_N_CAP = 8  # quotient-ring route; configuration, not a hard limit


@dataclass
class RunConfig:
    n_max: int = 12
    precision_bits: int = 256
    tolerance_exponent: int = 30
    mode: str = "both"  # exact | numeric | both
    output_dir: Path = field(default_factory=lambda: Path("."))
    report_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("n_max must be >= 0")
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be >= 53")
        if self.tolerance_exponent < 6:
            raise ValueError("tolerance_exponent must be >= 6")
        if self.mode not in ("exact", "numeric", "both"):
            raise ValueError(f"unknown mode {self.mode!r}")
        self.output_dir = Path(self.output_dir)

    @property
    def tolerance(self):
        return mp.mpf(10) ** -self.tolerance_exponent


class _Runner:
    """Shared state for one invocation: records and cached root sets."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.records = family.generate(config.n_max)
        self._rootsets: dict = {}

    def rootsets_up_to(self, n_max: int) -> dict:
        for n in range(n_max + 1):
            if n not in self._rootsets:
                self._rootsets[n] = rootsmod.roots_for_record(
                    self.records[n], self.config.precision_bits,
                    seed=self.config.seed)
        return self._rootsets


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    elapsed = time.perf_counter() - t0
    if isinstance(out, VerificationReport):
        out.elapsed = elapsed
    elif isinstance(out, list):
        for r in out:
            r.elapsed = elapsed / max(1, len(out))
    return out


# ---------------------------------------------------------------------------
# Suites

def _suite_structure(run: _Runner):
    reports = []
    for r in run.records:
        rep = VerificationReport(suite="structure", n=r.n)
        deg = r.poly.degree if r.poly else 0
        if r.n > 0 and deg != family.expected_degree(r.n):
            rep.fail({"check": "degree", "got": deg})
        if r.compressed[0] != 1:
            rep.fail({"check": "monic"})
        try:
            family.cube_compress(r.poly, r.n)
        except family.StructureViolation as exc:
            rep.fail({"check": "z3_support", "error": str(exc)})
        reports.append(rep)
    return reports


def _suite_divisibility(run: _Runner):
    reports = []
    for r in run.records:
        reports.append(family.check_divisibility(r))
        reports.append(family.mod4_reduction(r))
        reports.append(family.verify_irrationality_premises(r))
    return reports


def _suite_valuation(run: _Runner):
    return [family.valuation_checks(run.records)]


def _suite_wronskian(run: _Runner):
    if run.config.n_max < 2:
        return [VerificationReport(suite="wronskian", status=SKIPPED,
                                   details={"reason": "needs n_max >= 2"})]
    return [family.wronskian_check(run.records, n)
            for n in range(1, run.config.n_max)]


def _suite_pii(run: _Runner):
    reports = []
    for n in range(run.config.n_max + 1):
        w = painleve.rational_solution(run.records, n)
        reports.append(painleve.pII_residual(w))
    return reports


def _suite_backlund(run: _Runner):
    reports = []
    w = painleve.rational_solution(run.records, 0)
    for n in range(run.config.n_max):
        nxt = painleve.backlund_next(w, n)
        want = painleve.rational_solution(run.records, n + 1)
        rep = VerificationReport(suite="backlund", n=n + 1)
        if nxt != want:
            rep.fail({"check": "mismatch", "n": n + 1})
        reports.append(rep)
        w = want
    return reports


def _relation_suite(run: _Runner, verifier, suite_name: str):
    config = run.config
    reports = []
    modes = []
    if config.mode in ("exact", "both"):
        modes.append("exact")
    if config.mode in ("numeric", "both"):
        modes.append("numeric")
    rootsets = run.rootsets_up_to(config.n_max) if "numeric" in modes else None
    for n in range(1, config.n_max + 1):
        for mode in modes:
            if mode == "exact" and n > EXACT_MODE_N_CAP:
                continue
            subs = verifier(run.records, n, mode=mode, rootsets=rootsets,
                            tolerance=config.tolerance)
            reports.append(combine(suite_name, n, subs))
    return reports


def _suite_relations(run: _Runner):
    return _relation_suite(run, relations.verify_theorem, "relations")


def _suite_corollary(run: _Runner):
    return _relation_suite(run, relations.verify_corollary, "corollary")


def _suite_kudryashov(run: _Runner):
    return _relation_suite(run, relations.verify_kudryashov, "kudryashov")


def _suite_poleseries(run: _Runner):
    config = run.config
    rootsets = run.rootsets_up_to(config.n_max)
    reports = []
    for n in range(2, config.n_max + 1):
        count = len(rootsets[n - 1].roots)
        subs = [relations.pole_series_check(run.records, n, j, rootsets,
                                            tolerance=config.tolerance)
                for j in range(count)]
        reports.append(combine("poleseries", n, subs))
    return reports


def _suite_sums(run: _Runner):
    return [
        series.verify_closed_forms(run.records, run.config.n_max,
                                   symmetry_max_m=30),
        series.verify_difference_relations(run.records, run.config.n_max),
    ]


def _suite_series(run: _Runner):
    reports = []
    for n in range(1, run.config.n_max + 1):
        reports.append(series.cross_check_series(run.records, n, M=20))
    return reports


def _suite_remark(run: _Runner):
    reports = []
    for m in (12, 15):
        try:
            reports.append(series.verify_remark_polynomiality(
                run.records, m, run.config.n_max))
        except (series.FitFailure, ValueError) as exc:
            rep = VerificationReport(suite="remark", details={"m": m})
            rep.fail({"error": str(exc)})
            reports.append(rep)
    return reports


SUITE_RUNNERS = {
    "structure": _suite_structure,
    "divisibility": _suite_divisibility,
    "valuation": _suite_valuation,
    "wronskian": _suite_wronskian,
    "pii": _suite_pii,
    "backlund": _suite_backlund,
    "relations": _suite_relations,
    "corollary": _suite_corollary,
    "kudryashov": _suite_kudryashov,
    "poleseries": _suite_poleseries,
    "sums": _suite_sums,
    "series": _suite_series,
    "remark": _suite_remark,
}


# ---------------------------------------------------------------------------
# Commands

def cmd_gen(config: RunConfig) -> int:
    out = config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    records = family.generate(config.n_max)
    print(f"{'n':>4} {'degree':>8} {'p_n':>6}  x_n")
    for r in records:
        path = out / f"yv_{r.n}.json"
        path.write_text(family.record_to_json(r) + "\n")
        x_str = str(r.x_n)
        if len(x_str) > 40:
            x_str = f"{x_str[:18]}...{x_str[-18:]} ({len(x_str)} digits)"
        print(f"{r.n:>4} {family.expected_degree(r.n):>8} {r.p_n:>6}  {x_str}")
    return 0


def cmd_verify(config: RunConfig, suites) -> int:
    run = _Runner(config)
    all_reports = []
    failed = False
    for suite in suites:
        reps = _timed(SUITE_RUNNERS[suite], run)
        n_fail = sum(1 for r in reps if r.status == FAIL)
        n_skip = sum(1 for r in reps if r.status == SKIPPED)
        n_pass = len(reps) - n_fail - n_skip
        status = "FAIL" if n_fail else "ok"
        print(f"suite {suite:<14} {status:>4}  "
              f"({n_pass} pass, {n_fail} fail, {n_skip} skipped)")
        failed = failed or bool(n_fail)
        all_reports.extend(reps)
    config.output_dir.mkdir(parents=True, exist_ok=True)
    if config.report_format == "json":
        payload = {
            "config": {
                "n_max": config.n_max,
                "precision_bits": config.precision_bits,
                "tolerance_exponent": config.tolerance_exponent,
                "mode": config.mode,
                "seed": config.seed,
            },
            "reports": [r.to_json_dict(include_timing=False)
                        for r in all_reports],
            "overall": "fail" if failed else "pass",
        }
        path = config.output_dir / "verification_report.json"
        path.write_text(json.dumps(payload, indent=2) + "\n")
    else:
        path = config.output_dir / "verification_report.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["suite", "n", "status", "witnesses"])
            for r in all_reports:
                writer.writerow([r.suite, r.n, r.status,
                                 json.dumps(stringify(r.witnesses))])
    print(f"report written to {path}")
    return 1 if failed else 0


def cmd_roots(config: RunConfig) -> int:
    out = config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    records = family.generate(config.n_max)
    status = 0
    for r in records:
        if r.n == 0:
            continue
        try:
            rs = rootsmod.roots_for_record(r, config.precision_bits,
                                           seed=config.seed)
        except rootsmod.NoConvergence as exc:
            print(f"n={r.n}: no convergence ({exc})", file=sys.stderr)
            status = 1
            continue
        rep = rootsmod.certify(rs, r)
        rootsmod.export_csv(rs, out / f"roots_{r.n}.csv")
        rootsmod.export_svg(rs, out / f"roots_{r.n}.svg")
        tag = "certified" if rep.passed else "CERTIFICATION FAILED"
        print(f"n={r.n}: {len(rs.roots)} roots, {tag}")
        if not rep.passed:
            status = 1
    return status


def cmd_sums(config: RunConfig, m_list) -> int:
    out = config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    records = family.generate(config.n_max)
    rows = series.sums_table(records, config.n_max, m_list)
    path = out / "sums.json"
    path.write_text(json.dumps(stringify(rows), indent=2) + "\n")
    print(f"{len(rows)} rows written to {path}")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing

def _add_common(parser):
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--precision-bits", type=int, default=256)
    parser.add_argument("--tolerance", type=int, default=30, metavar="T",
                        help="numeric pass threshold 10^-T")
    parser.add_argument("--mode", choices=["exact", "numeric", "both"],
                        default="both")
    parser.add_argument("--out", type=str, default=None,
                        help="output directory (or YV_OUT_DIR, or '.')")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--seed", type=int, default=0)


def _config_from(args) -> RunConfig:
    out = args.out or os.environ.get("YV_OUT_DIR") or "."
    return RunConfig(
        n_max=args.n_max,
        precision_bits=args.precision_bits,
        tolerance_exponent=args.tolerance,
        mode=args.mode,
        output_dir=Path(out),
        report_format=args.format,
        seed=args.seed,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yvpoly",
        description="Exact generation and verification of the "
                    "Yablonskii-Vorob'ev polynomial family.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate the family and write JSON")
    _add_common(p_gen)

    p_verify = sub.add_parser("verify", help="run verification suites")
    _add_common(p_verify)
    p_verify.add_argument("--suites", type=str, default="all",
                          help=f"comma-separated subset of: {','.join(ALL_SUITES)}")

    p_roots = sub.add_parser("roots", help="extract roots, write CSV and SVG")
    _add_common(p_roots)

    p_sums = sub.add_parser("sums", help="exact inverse-root power sums")
    _add_common(p_sums)
    p_sums.add_argument("--m-list", type=str, default="3,6,9")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = _config_from(args)
    try:
        if args.command == "gen":
            return cmd_gen(config)
        if args.command == "verify":
            if args.suites == "all":
                suites = ALL_SUITES
            else:
                suites = [s.strip() for s in args.suites.split(",") if s.strip()]
                unknown = [s for s in suites if s not in ALL_SUITES]
                if unknown:
                    print(f"unknown suites: {', '.join(unknown)}", file=sys.stderr)
                    return 2
            return cmd_verify(config, suites)
        if args.command == "roots":
            return cmd_roots(config)
        if args.command == "sums":
            m_list = [int(m) for m in args.m_list.split(",")]
            if any(m < 1 for m in m_list):
                print("each m must be >= 1", file=sys.stderr)
                return 2
            return cmd_sums(config, m_list)
    except (family.IntegrityError, painleve.UnexpectedCommonFactor) as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
