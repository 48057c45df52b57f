"""Command-line interface for torus-wrt."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, List, Sequence

from .asymp import verify_aec
from .config import VerifySettings, _debug, resolve_jobs, resolve_seed
from .dyn import STRETCH_METHODS, estimate, spectral_radius
from .moduli import growth_rate, su2_components, su3_cs_phase_set
from .plotting import ScanRecord, scan_csv, scan_svg, write_html
from .verify import SUITES, run_suite
from .wrt import (
    FINITE_ORDER_TAGS,
    METHODS,
    BundleClass,
    FiniteOrder,
    MethodUnavailable,
    SL2ZMatrix,
    Trace2,
    apply_framing,
    classify,
    invariant,
)

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNAVAILABLE = 3


def _emit(payload: object) -> None:
    print(json.dumps(payload, indent=2))


def _add_class_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--shear", type=int, help="Shear b of the trace 2 class [[1,-b],[0,1]].")
    group.add_argument("--matrix", help="Monodromy as 'a,b,c,d'; it is classified up to conjugacy first.")
    group.add_argument("--finite-order", choices=FINITE_ORDER_TAGS, help="Periodic monodromy by tag.")


def _bundle_class(args: argparse.Namespace) -> BundleClass:
    if args.shear is not None:
        return Trace2(args.shear)
    if args.matrix is not None:
        return classify(SL2ZMatrix.parse(args.matrix))
    return FiniteOrder(args.finite_order)


def _scan_point(task: tuple) -> ScanRecord:
    N, k, cls, method = task
    return ScanRecord.from_result(invariant(N, k, cls, method))


def cmd_invariant(args: argparse.Namespace) -> int:
    cls = _bundle_class(args)
    result = invariant(args.N, args.level, cls, args.method, colour=args.colour)
    if args.framing_correction:
        result = apply_framing(result, args.framing_correction)
    payload = result.to_dict()
    payload["class"] = cls.to_dict()
    _emit(payload)
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    cls = _bundle_class(args)
    if args.kmin < 0 or args.kmax < args.kmin:
        raise ValueError(f"Need 0 <= kmin <= kmax, got kmin={args.kmin}, kmax={args.kmax}")
    tasks = [(args.N, k, cls, args.method) for k in range(args.kmin, args.kmax + 1)]
    jobs = resolve_jobs(args.jobs)
    _debug(f"scan: {len(tasks)} levels on {jobs} worker(s)")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records: List[ScanRecord] = list(pool.map(_scan_point, tasks, chunksize=8))
    else:
        records = [_scan_point(task) for task in tasks]

    table = scan_csv(records)
    if args.out:
        Path(args.out).write_text(table)
    else:
        sys.stdout.write(table)
    title = f"SU({args.N}) {json.dumps(cls.to_dict())}"
    if args.svg:
        Path(args.svg).write_text(scan_svg(records, title))
    if args.html:
        write_html(records, Path(args.html), title)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    settings = VerifySettings.from_environment(seed=args.seed, trials=args.trials, kmax=args.kmax, bmax=args.bmax)
    reports = run_suite(args.suite, settings)
    passed = all(report.passed for report in reports)
    _emit({"passed": passed, "seed": settings.seed, "suites": [report.to_dict() for report in reports]})
    return 0 if passed else EXIT_FAILED


def cmd_cs_values(args: argparse.Namespace) -> int:
    if args.N == 2:
        _emit({"N": 2, "b": args.b, "components": [c.to_dict() for c in su2_components(args.b)]})
    elif args.N == 3:
        _emit({"N": 3, "b": args.b, "cs": [str(c) for c in sorted(su3_cs_phase_set(args.b))]})
    else:
        raise MethodUnavailable(f"Chern-Simons values are implemented for SU(2) and SU(3), not SU({args.N})")
    return 0


def cmd_growth_rate(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    rows = []
    for component in su2_components(args.b):
        row = component.to_dict()
        row["growth"] = str(growth_rate(component, args.b, seed=seed))
        rows.append(row)
    _emit({"b": args.b, "seed": seed, "components": rows})
    return 0


def cmd_asymptotics(args: argparse.Namespace) -> int:
    report = verify_aec(args.b, args.kmax, args.L)
    _emit(report.to_dict())
    return 0 if report.passed else EXIT_FAILED


def cmd_stretch(args: argparse.Namespace) -> int:
    U = SL2ZMatrix.parse(args.matrix)
    result = estimate(U, args.n, args.method)
    payload = result.to_dict()
    payload["error_vs_spectral"] = abs(result.lambda_ - spectral_radius(U))
    _emit(payload)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    U = SL2ZMatrix.parse(args.matrix)
    payload = classify(U).to_dict()
    payload["matrix"] = list(U.as_tuple())
    _emit(payload)
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-wrt",
        description="Quantum SU(N) invariants of torus bundles and their asymptotics",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    inv = commands.add_parser("invariant", help="Evaluate one invariant and print it as JSON.")
    inv.add_argument("--N", type=int, default=2, help="Rank parameter of SU(N) (default: 2).")
    inv.add_argument("--level", type=int, required=True, help="Level k >= 0.")
    _add_class_arguments(inv)
    inv.add_argument("--colour", type=int, help="Colour j of a fibre-parallel link (SU(2), trace 2 only).")
    inv.add_argument("--method", choices=METHODS, default="direct", help="Evaluation method (default: direct).")
    inv.add_argument(
        "--framing-correction",
        type=int,
        default=0,
        metavar="P",
        help="Multiply by the P-th power of the framing anomaly.",
    )
    inv.set_defaults(handler=cmd_invariant)

    scan = commands.add_parser("scan", help="Evaluate over a range of levels and print CSV.")
    scan.add_argument("--N", type=int, default=2, help="Rank parameter of SU(N) (default: 2).")
    _add_class_arguments(scan)
    scan.add_argument("--kmin", type=int, default=0, help="First level (default: 0).")
    scan.add_argument("--kmax", type=int, required=True, help="Last level, inclusive.")
    scan.add_argument("--method", choices=METHODS, default="direct", help="Evaluation method (default: direct).")
    scan.add_argument("--out", help="Write the CSV here instead of standard output.")
    scan.add_argument("--svg", help="Also write a scatter of the values as SVG.")
    scan.add_argument("--html", help="Also write an interactive plotly figure.")
    scan.add_argument("--jobs", type=_positive, help="Worker processes (default: TORUS_WRT_JOBS or 1).")
    scan.set_defaults(handler=cmd_scan)

    ver = commands.add_parser("verify", help="Run a verification suite and print a JSON report.")
    ver.add_argument("suite", choices=[*SUITES, "all"], help="Suite to run.")
    ver.add_argument("--seed", type=int, help="Seed for randomized checks (default: TORUS_WRT_SEED or 0xC0FFEE).")
    ver.add_argument("--trials", type=_positive, help="Random reciprocity instances (default: 1000).")
    ver.add_argument("--kmax", type=int, help="Largest level checked (default: 200).")
    ver.add_argument("--bmax", type=_positive, help="Largest |shear| checked (default: 12).")
    ver.set_defaults(handler=cmd_verify)

    cs = commands.add_parser("cs-values", help="Chern-Simons values of the flat connection moduli space.")
    cs.add_argument("--b", type=int, required=True, help="Nonzero shear.")
    cs.add_argument("--N", type=int, default=2, choices=(2, 3), help="SU(2) components or the SU(3) phase set.")
    cs.set_defaults(handler=cmd_cs_values)

    growth = commands.add_parser("growth-rate", help="Generic (h1 - h0)/2 on each SU(2) component.")
    growth.add_argument("--b", type=int, required=True, help="Nonzero shear.")
    growth.add_argument("--seed", type=int, help="Seed for the sampled torus parameters.")
    growth.set_defaults(handler=cmd_growth_rate)

    asym = commands.add_parser("asymptotics", help="Check the SU(2) asymptotic expansion numerically.")
    asym.add_argument("--b", type=int, required=True, help="Nonzero shear.")
    asym.add_argument("--kmax", type=int, default=300, help="Largest level (default: 300).")
    asym.add_argument("--L", type=int, default=3, help="Largest truncation order (default: 3).")
    asym.set_defaults(handler=cmd_asymptotics)

    stretch = commands.add_parser("stretch", help="Stretch factor of an Anosov monodromy.")
    stretch.add_argument("--matrix", required=True, help="Monodromy as 'a,b,c,d'.")
    stretch.add_argument("--n", type=_positive, default=1, help="Level index or iterate (default: 1).")
    stretch.add_argument("--method", choices=STRETCH_METHODS, default="invariant", help="Estimator (default: invariant).")
    stretch.set_defaults(handler=cmd_stretch)

    cls = commands.add_parser("classify", help="Conjugacy class of a monodromy.")
    cls.add_argument("--matrix", required=True, help="Monodromy as 'a,b,c,d'.")
    cls.set_defaults(handler=cmd_classify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run a subcommand; errors go to stderr and select the exit code."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except MethodUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNAVAILABLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
