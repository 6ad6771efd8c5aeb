"""Command line interface.

    csymop verify ID [--dim N] [--seed S] [--tol T] [--trials K] [--format json|text]
    csymop toeplitz SYMBOL [--mu MU] [--lambda LAM] [--dim N] [--show-matrix]
    csymop fixed-basis family:MU,LAM | random:SEED [--dim N]

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error.
Inconclusive reports (unmet hypotheses) do not count as failures.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .conjugations import (
    Conjugation,
    family_conjugation,
    fixed_basis,
    random_conjugation,
)
from .hardy import ToleranceConfig, random_unitary, unitarity_residual
from .instances import (
    PAIR_KINDS,
    doubly_symmetric_instance,
    random_matrix,
    toeplitz_pair_instance,
    trial_seed,
)
from .report import VerificationReport, build_report
from .symbols import SymbolSyntaxError, format_complex, format_symbol, parse_complex, parse_symbol
from .theorems import (
    CHECK_IDS,
    EXAMPLE_SYMBOL,
    check_symmetric_equivalence,
    make_doubly_symmetric,
    verify_commutation_converse,
    verify_conjugation_from_unitary,
    verify_double_symmetry_relations,
    verify_example_trio,
    verify_fixed_basis_transpose,
    verify_intertwiner,
    verify_intertwiner_rigidity,
    verify_toeplitz_relation_equivalence,
    verify_transport,
)
from .toeplitz import csym_residual, injectivity_proxy, min_dimension, toeplitz_matrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# symbol pairs cycled through by the Toeplitz equivalence sweep
TOEPLITZ_PAIR_KINDS = ("same", "opposite", "quarter")
TOEPLITZ_SWEEP_BANDWIDTH = 4


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    dimension: int = 32
    seed: int = 0
    identity_tol: float = 1e-10
    trials: int = 100
    output_format: str = "text"

    def __post_init__(self):
        if self.dimension < 1:
            raise UsageError(f"--dim must be >= 1, got {self.dimension}")
        if self.trials < 1:
            raise UsageError(f"--trials must be >= 1, got {self.trials}")
        if not self.identity_tol > 0:
            raise UsageError(f"--tol must be positive, got {self.identity_tol}")
        if self.output_format not in ("json", "text"):
            raise UsageError(f"--format must be json or text, got {self.output_format!r}")

    @property
    def tolerances(self) -> ToleranceConfig:
        return ToleranceConfig(identity_tol=self.identity_tol)


# --- verification campaigns ---------------------------------------------------


def _require_dimension(check_id: str, n: int, needed: int, why: str):
    if n < needed:
        raise UsageError(f"{check_id} needs --dim >= {needed} ({why}); got {n}")


def _tag(report: VerificationReport, check_id: str, trial: int, seed: int) -> VerificationReport:
    params = {"check": check_id, "trial": trial, "seed": seed, **report.parameters}
    return build_report(
        report.name, params, report.residuals, report.tolerances, report.notes, report.inconclusive
    )


def _trial_reports(check_id: str, n: int, s: int, trial: int, tol: ToleranceConfig) -> list[VerificationReport]:
    if check_id == "T2.1":
        return [verify_intertwiner(random_conjugation(n, s), tol)]
    if check_id == "P2.2":
        return [verify_conjugation_from_unitary(random_unitary(n, s), tol)]
    if check_id == "R2.3":
        c = random_conjugation(n, s)
        a = make_doubly_symmetric(random_matrix(n, trial_seed(s, 1)), c, c, tol)
        return [verify_transport(a, c, tol), verify_intertwiner_rigidity(c, tol)]
    if check_id == "C2.4":
        return [check_symmetric_equivalence(random_matrix(n, s), tol)]
    if check_id in ("T2.5", "R2.6", "P-CONVERSE"):
        t, c, j = doubly_symmetric_instance(n, s, PAIR_KINDS[trial % len(PAIR_KINDS)], tol)
        verifier = {
            "T2.5": verify_double_symmetry_relations,
            "R2.6": verify_fixed_basis_transpose,
            "P-CONVERSE": verify_commutation_converse,
        }[check_id]
        return [verifier(t, c, j, tol)]
    if check_id == "C2.8":
        kind = TOEPLITZ_PAIR_KINDS[trial % len(TOEPLITZ_PAIR_KINDS)]
        phi, c, j = toeplitz_pair_instance(n, s, kind, TOEPLITZ_SWEEP_BANDWIDTH)
        return [verify_toeplitz_relation_equivalence(phi, c, j, n, tol)]
    raise UsageError(f"unknown check {check_id!r}")


def run_check(check_id: str, config: RunConfig) -> Iterator[VerificationReport]:
    """Reports for one check id, in trial order."""
    n, tol = config.dimension, config.tolerances
    if check_id == "EX":
        needed = min_dimension(parse_symbol(EXAMPLE_SYMBOL))
        _require_dimension(check_id, n, needed, f"symbol {EXAMPLE_SYMBOL!r} has bandwidth 2")
        yield _tag(verify_example_trio(n, tol), check_id, 0, config.seed)
        return
    if check_id == "C2.8":
        needed = 2 * TOEPLITZ_SWEEP_BANDWIDTH + 2
        _require_dimension(check_id, n, needed, f"sweep symbols have bandwidth {TOEPLITZ_SWEEP_BANDWIDTH}")
    for trial in range(config.trials):
        s = trial_seed(config.seed, trial)
        for report in _trial_reports(check_id, n, s, trial, tol):
            yield _tag(report, check_id, trial, s)


def summarize(check_id: str, config: RunConfig, reports: Iterable[VerificationReport]) -> VerificationReport:
    reports = list(reports)
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    worst: dict[str, float] = {}
    for r in reports:
        counts[r.status] += 1
        for k, v in r.residuals.items():
            worst[k] = max(worst.get(k, 0.0), v)
    params = {
        "check": check_id,
        "dimension": config.dimension,
        "seed": config.seed,
        "trials": config.trials,
        "identity_tol": config.identity_tol,
        "counts": counts,
    }
    notes = f"{counts['pass']} passed, {counts['fail']} failed, {counts['inconclusive']} inconclusive; residuals are maxima"
    return VerificationReport("summary", params, worst, counts["fail"] == 0, notes)


# --- output ---------------------------------------------------------------


def _format_text(report: VerificationReport) -> str:
    head = report.status.upper() if report.name != "summary" else "SUMMARY"
    params = " ".join(
        f"{k}={v}" for k, v in report.parameters.items() if k in ("check", "trial", "dimension", "symbol")
    )
    residuals = " ".join(f"{k}={v!r}" for k, v in report.residuals.items())
    line = f"{head:<12} {report.name} {params} {residuals}".rstrip()
    if report.notes:
        line += f"  # {report.notes}"
    return line


def _emit(report: VerificationReport, fmt: str, out):
    print(report.to_json() if fmt == "json" else _format_text(report), file=out)


def _matrix_payload(a: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in a]


def _format_matrix(a: np.ndarray) -> str:
    return np.array2string(a, precision=6, suppress_small=True, max_line_width=160)


# --- subcommands ------------------------------------------------------------


def cmd_verify(check_id: str, config: RunConfig, out=sys.stdout) -> int:
    ids = CHECK_IDS if check_id == "ALL" else (check_id,)
    if check_id != "ALL" and check_id not in CHECK_IDS:
        raise UsageError(f"unknown check {check_id!r}; valid: {', '.join(CHECK_IDS + ('ALL',))}")
    failed = False
    for cid in ids:
        reports = []
        for report in run_check(cid, config):
            reports.append(report)
            _emit(report, config.output_format, out)
        summary = summarize(cid, config, reports)
        _emit(summary, config.output_format, out)
        failed = failed or not summary.passed
    return EXIT_FAIL if failed else EXIT_OK


def cmd_toeplitz(
    symbol_text: str, mu: complex, lam: complex, config: RunConfig, show_matrix: bool = False, out=sys.stdout
) -> int:
    phi = parse_symbol(symbol_text)
    n, tol = config.dimension, config.tolerances
    _require_dimension("toeplitz", n, min_dimension(phi), f"symbol bandwidth is {phi.bandwidth}")
    try:
        c = family_conjugation(mu, lam, n, tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    a = toeplitz_matrix(phi, n)
    injective, sigma = injectivity_proxy(a, tol)
    params = {
        "dimension": n,
        "symbol": format_symbol(phi),
        "mu": format_complex(mu),
        "lambda": format_complex(lam),
    }
    if show_matrix and config.output_format == "json":
        params["matrix"] = _matrix_payload(a)
    report = build_report(
        "toeplitz_symmetry",
        params,
        {"csym": csym_residual(a, c), "sigma_min": sigma},
        {"csym": tol.identity_tol},
        f"injective_proxy={injective}",
    )
    if show_matrix and config.output_format == "text":
        print(_format_matrix(a), file=out)
    _emit(report, config.output_format, out)
    return EXIT_OK if report.passed else EXIT_FAIL


def parse_conjugation_spec(spec: str, n: int, tol: ToleranceConfig) -> Conjugation:
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise UsageError(f"malformed conjugation spec {spec!r}; expected family:MU,LAMBDA or random:SEED")
    if kind == "random":
        try:
            seed = int(rest)
        except ValueError:
            raise UsageError(f"random seed must be an integer, got {rest!r}") from None
        return random_conjugation(n, seed)
    if kind == "family":
        parts = rest.split(",")
        if len(parts) != 2:
            raise UsageError(f"family spec needs two parameters MU,LAMBDA, got {rest!r}")
        mu, lam = (parse_complex(p) for p in parts)
        try:
            return family_conjugation(mu, lam, n, tol)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown conjugation kind {kind!r}; expected family or random")


def cmd_fixed_basis(conjugation_spec: str, config: RunConfig, out=sys.stdout) -> int:
    n, tol = config.dimension, config.tolerances
    c = parse_conjugation_spec(conjugation_spec, n, tol)
    f = fixed_basis(c, tol)
    residuals = {"unitarity": unitarity_residual(f)}
    for k in range(n):
        residuals[f"column_{k}"] = float(np.linalg.norm(c(f[:, k]) - f[:, k]))
    params = {"dimension": n, "C": c.label}
    if config.output_format == "json":
        params["basis"] = _matrix_payload(f)
    else:
        print(_format_matrix(f), file=out)
    report = build_report("fixed_basis", params, residuals, {k: tol.identity_tol for k in residuals})
    _emit(report, config.output_format, out)
    return EXIT_OK if report.passed else EXIT_FAIL


# --- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, default=32, help="truncation dimension N (default 32)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=1e-10, help="identity tolerance (default 1e-10)")
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--show-matrix", action="store_true")

    parser = argparse.ArgumentParser(prog="csymop", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification campaign")
    p.add_argument("check", choices=CHECK_IDS + ("ALL",), metavar="ID", help=", ".join(CHECK_IDS + ("ALL",)))

    p = sub.add_parser("toeplitz", parents=[common], help="symmetry of a Toeplitz truncation against C_{mu,lambda}")
    p.add_argument("symbol")
    p.add_argument("--mu", default="1")
    p.add_argument("--lambda", dest="lam", default="1")

    p = sub.add_parser("fixed-basis", parents=[common], help="orthonormal basis fixed by a conjugation")
    p.add_argument("conjugation", metavar="SPEC", help="family:MU,LAMBDA or random:SEED")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = RunConfig(args.dim, args.seed, args.tol, args.trials, args.format)
        if args.command == "verify":
            return cmd_verify(args.check, config, out)
        if args.command == "toeplitz":
            mu, lam = parse_complex(args.mu), parse_complex(args.lam)
            return cmd_toeplitz(args.symbol, mu, lam, config, args.show_matrix, out)
        return cmd_fixed_basis(args.conjugation, config, out)
    except SymbolSyntaxError as exc:
        print(f"csymop: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"csymop: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
