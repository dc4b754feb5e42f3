"""Command-line interface.

Exit status: 0 on success, 2 for invalid input, 3 when a resource bound is
hit, 4 when a verification fails or two methods disagree.  Errors are also
written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .characters import default_cache
from .errors import (
    HurwitzError,
    InconclusiveFitError,
    InconsistencyError,
    PreconditionError,
    ResourceLimitError,
)
from .hurwitz import brute_force, build_series_table, closed_form, connected, r_value
from .partitions import Partition, aut_order, format_rational
from .polynomiality import METHODS as RAY_METHODS
from .polynomiality import degree_report, ray_polynomial, ray_samples
from .suites import SUITES, run_suite
from .symbols import symbol_def, symbol_wittcor

CACHE_ENV = "DHURWITZ_CACHE_DIR"
EXIT_OK, EXIT_PRECONDITION, EXIT_RESOURCE, EXIT_VERIFY = 0, 2, 3, 4

COMPUTE_METHODS = ("auto", "brute", "character", "closed")
FORMATS = ("json", "csv", "plain")
BRUTE_AUTO_MAX = 6
CHARACTER_CROSS_CHECK_MAX = 14


@dataclass(frozen=True)
class RunConfig:
    method: str = "auto"
    d_max: int = 6
    r_max: int = 6
    order: int = 6
    work_limit: int = 10**8
    fmt: str = "plain"
    cache_dir: Path | None = None

    def __post_init__(self):
        for name in ("d_max", "order", "work_limit"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be positive")
        if self.r_max < 0:
            raise PreconditionError("r_max must be non-negative")


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except PreconditionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


# compute ----------------------------------------------------------------------


def _compute_value(g: int, alpha, beta, method: str, work_limit: int) -> tuple[Fraction, str]:
    if method == "brute":
        return brute_force(g, alpha, beta, max_degree=12, work_limit=work_limit), "brute"
    if method == "character":
        return connected(g, alpha, beta), "character"
    if method == "closed":
        return closed_form(g, alpha, beta)
    # auto: closed form when one applies, otherwise characters; then cross-check
    try:
        value, name = closed_form(g, alpha, beta)
    except PreconditionError:
        value, name = connected(g, alpha, beta), "character"
    check = None
    if name != "character" and alpha.size <= CHARACTER_CROSS_CHECK_MAX:
        check = connected(g, alpha, beta), "character"
    elif name == "character" and alpha.size <= BRUTE_AUTO_MAX:
        check = brute_force(g, alpha, beta, work_limit=work_limit), "brute"
    if check is not None:
        if check[0] != value:
            raise InconsistencyError(
                f"{name} gives {format_rational(value)} but {check[1]} gives {format_rational(check[0])}"
            )
        print(f"cross-checked against {check[1]}", file=sys.stderr)
    return value, name


def cmd_compute(args, config: RunConfig) -> int:
    alpha, beta, g = args.alpha, args.beta, args.genus
    r = r_value(g, alpha, beta)
    value, method = _compute_value(g, alpha, beta, config.method, config.work_limit)
    if args.aut_divided:
        value = value / (aut_order(alpha) * aut_order(beta))
    record = {
        "genus": g,
        "alpha": list(alpha),
        "beta": list(beta),
        "r": r,
        "value": format_rational(value),
        "method": method,
    }
    if config.fmt == "json":
        print(json.dumps(record))
    elif config.fmt == "csv":
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=list(record), lineterminator="\n")
        writer.writeheader()
        writer.writerow({**record, "alpha": str(alpha), "beta": str(beta)})
        print(out.getvalue(), end="")
    else:
        print(value)
    return EXIT_OK


# verify -----------------------------------------------------------------------


def cmd_verify(args, config: RunConfig) -> int:
    result = run_suite(args.suite, args.dmax, args.gmax, as_printed=args.as_printed)
    for check in result.checks:
        if args.verbose or not check.passed:
            print(check.describe(), file=sys.stderr)
    if config.fmt == "json":
        payload = {
            "suite": args.suite,
            "passed": result.passed,
            "checks": len(result.checks),
            "failures": [
                {"label": c.label, "left": _jsonable(c.left), "right": _jsonable(c.right)} for c in result.failures
            ],
        }
        print(json.dumps(payload))
    else:
        print(result.summary())
    return EXIT_OK if result.passed else EXIT_VERIFY


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


# symbol -----------------------------------------------------------------------


def cmd_symbol(args, config: RunConfig) -> int:
    by_definition = symbol_def(args.genus, args.k, args.b)
    by_sum = symbol_wittcor(args.genus, args.k, args.b)
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "genus": args.genus,
                    "k": args.k,
                    "b": list(args.b),
                    "definition": format_rational(by_definition),
                    "explicit_sum": format_rational(by_sum),
                }
            )
        )
    else:
        print(f"{by_definition}, {by_sum}")
    if by_definition != by_sum:
        raise InconsistencyError("the two symbol computations disagree")
    return EXIT_OK


# ray --------------------------------------------------------------------------


def cmd_ray(args, config: RunConfig) -> int:
    method = args.ray_method
    sample = ray_samples(args.genus, args.alpha, args.beta, args.t_max, method)
    report = degree_report(sample)
    coeffs = ray_polynomial(sample)
    if config.fmt == "json":
        row = report.row()
        row["values"] = [format_rational(v) for v in sample.values]
        row["polynomial"] = [format_rational(c) for c in coeffs]
        print(json.dumps(row))
    elif config.fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["t", "value"])
        for t, v in enumerate(sample.values, 1):
            writer.writerow([t, format_rational(v)])
        print(out.getvalue(), end="")
    else:
        for t, v in enumerate(sample.values, 1):
            print(f"t={t} {v}")
        print(f"degree {report.degree}, leading {report.leading}")
        low, high = report.window
        print(f"degrees present {report.degrees_present}, window [{low}, {high}]")
    return EXIT_OK


# table ------------------------------------------------------------------------


def cmd_table(args, config: RunConfig) -> int:
    table = build_series_table(config.d_max, config.r_max)
    if args.connected:
        table = table.log()
    entries = [
        {
            "alpha": row["alpha"],
            "beta": row["beta"],
            "r": row["r"],
            "genus": row["genus"],
            "coefficient": format_rational(row["coefficient"]),
            "value": format_rational(row["value"]),
        }
        for row in table.rows()
    ]
    payload = {"d_max": config.d_max, "r_max": config.r_max, "connected": args.connected, "entries": entries}
    text = json.dumps(payload, indent=1)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {len(entries)} entries to {args.out}", file=sys.stderr)
    else:
        print(text)
    return EXIT_OK


# plumbing ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """Argument errors also produce the JSON error object."""

    def error(self, message):
        self.print_usage(sys.stderr)
        _fail(PreconditionError(message), EXIT_PRECONDITION, name="UsageError")
        sys.exit(EXIT_PRECONDITION)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dhurwitz", description="Exact double Hurwitz numbers.")
    parser.add_argument("--cache-dir", help=f"character cache directory (default: ${CACHE_ENV})")
    parser.add_argument("--format", choices=FORMATS, default="plain", dest="fmt")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one double Hurwitz number")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--alpha", type=_partition_arg, required=True)
    p.add_argument("--beta", type=_partition_arg, required=True)
    p.add_argument("--method", choices=COMPUTE_METHODS, default="auto")
    p.add_argument("--work-limit", type=_positive, default=10**8)
    p.add_argument("--aut-divided", action="store_true", help="divide by |Aut alpha| |Aut beta|")
    p.add_argument("--format", choices=FORMATS, dest="fmt", default=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--dmax", type=_positive)
    p.add_argument("--gmax", type=int)
    p.add_argument("--as-printed", action="store_true", help="use the commonly quoted forms of three identities")
    p.add_argument("--verbose", action="store_true", help="list passing checks too")
    p.add_argument("--format", choices=FORMATS, dest="fmt", default=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("symbol", help="the bracket symbol by both routes")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--b", type=_int_list, required=True)
    p.add_argument("--format", choices=FORMATS, dest="fmt", default=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_symbol)

    p = sub.add_parser("ray", help="values along a ray and their polynomial fit")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--alpha", type=_partition_arg, required=True)
    p.add_argument("--beta", type=_partition_arg, required=True)
    p.add_argument("--t-max", type=_positive, required=True)
    p.add_argument("--method", choices=sorted(RAY_METHODS), default="character", dest="ray_method")
    p.add_argument("--format", choices=FORMATS, dest="fmt", default=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_ray)

    p = sub.add_parser("table", help="dump a generating-series table as JSON")
    p.add_argument("--dmax", type=_positive, default=6)
    p.add_argument("--rmax", type=int, default=6)
    p.add_argument("--connected", action="store_true", help="take the logarithm first")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_table)
    return parser


def _config(args) -> RunConfig:
    cache = args.cache_dir or os.environ.get(CACHE_ENV)
    return RunConfig(
        method=getattr(args, "method", "auto"),
        d_max=getattr(args, "dmax", None) or 6,
        r_max=getattr(args, "rmax", 6),
        work_limit=getattr(args, "work_limit", 10**8),
        fmt=args.fmt,
        cache_dir=Path(cache) if cache else None,
    )


def _load_cache(directory: Path) -> None:
    for path in sorted(directory.glob("characters_d*.json")):
        try:
            d = int(path.stem.removeprefix("characters_d"))
        except ValueError:
            continue
        default_cache.load(directory, d)


def _save_cache(directory: Path) -> None:
    degrees = {sum(lam) for lam, _, _ in default_cache.entries()}
    for d in sorted(degrees):
        if d:
            default_cache.save(directory, d)


def _fail(exc: Exception, code: int, name: str | None = None) -> int:
    payload = {"error": name or type(exc).__name__, "message": str(exc), "exit_code": code}
    print(json.dumps(payload), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config(args)
        if config.cache_dir is not None:
            _load_cache(config.cache_dir)
        code = args.handler(args, config)
        if config.cache_dir is not None:
            _save_cache(config.cache_dir)
        return code
    except (PreconditionError, InconclusiveFitError) as exc:
        return _fail(exc, EXIT_PRECONDITION)
    except ResourceLimitError as exc:
        return _fail(exc, EXIT_RESOURCE)
    except InconsistencyError as exc:
        return _fail(exc, EXIT_VERIFY)
    except HurwitzError as exc:
        return _fail(exc, EXIT_VERIFY)


if __name__ == "__main__":
    sys.exit(main())
