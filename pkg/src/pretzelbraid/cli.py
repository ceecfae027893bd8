"""
Command-line front end.

    pretzel-braid classify "P(5,3,-5,-1)"
    pretzel-braid homfly "P1(3,3,3;0)"
    pretzel-braid index "P2(4,4,2;-4)" --explain
    pretzel-braid sweep --type P1 --max-strips 4 --max-alpha 3 --jobs 4
    pretzel-braid table --type P2 --max-strips 3 --max-alpha 2 --format csv

Exit status: 0 consistent, 1 inconsistent, 2 invalid input.  Errors are
written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .braid_index import BraidIndexReport, dispatch, enumerate_params, verify_consistency
from .homfly import homfly_pretzel, mfw_bound
from .laurent import extract_extremes
from .pretzel import (
    LinkClass,
    LinkType,
    NotationError,
    ParityError,
    PretzelParams,
    classify,
    diagram_stats,
    params_from_strips,
    parse_notation,
)
from .seifert import construction_upper_bound

EXIT_OK, EXIT_INCONSISTENT, EXIT_INVALID = 0, 1, 2
CSV_COLUMNS = ["type", "strips", "case", "braid_index", "mfw_lower", "upper", "consistent"]


class InputError(Exception):
    def __init__(self, kind: str, message: str, **extra):
        super().__init__(message)
        self.payload = {"error": kind, "message": message, **extra}


@dataclass(frozen=True)
class SweepSpec:
    link_type: LinkType
    max_strips: int
    max_alpha: int
    max_beta: int
    min_strips: int = 1
    parallelism: int = 1

    def __post_init__(self):
        if min(self.max_strips, self.max_alpha, self.max_beta) < 1:
            raise InputError("empty_sweep", "sweep bounds must be positive")
        if self.parallelism < 1:
            raise InputError("bad_jobs", "--jobs must be at least 1")

    def params(self) -> list[PretzelParams]:
        return list(enumerate_params(self.link_type, self.max_strips, self.max_alpha,
                                     self.max_beta, self.min_strips))


def _parse(text: str):
    try:
        return parse_notation(text)
    except ParityError as exc:
        raise InputError("parity", str(exc), entry=exc.entry, position=exc.position) from None
    except NotationError as exc:
        raise InputError("notation", str(exc), position=exc.position) from None
    except ValueError as exc:
        raise InputError("invalid", str(exc)) from None


def _typed(text: str) -> PretzelParams:
    parsed = _parse(text)
    if isinstance(parsed, PretzelParams):
        return parsed
    try:
        return params_from_strips(parsed)
    except ValueError as exc:
        raise InputError("unsupported", str(exc)) from None


def _strips(text: str) -> tuple[int, ...]:
    parsed = _parse(text)
    return parsed.strips() if isinstance(parsed, PretzelParams) else parsed


def _csv_row(r: BraidIndexReport) -> list:
    return [r.params.link_type.value, " ".join(str(c) for c in r.params.strips()), r.case_id,
            r.formula_value, "" if r.mfw_lower is None else r.mfw_lower,
            "" if r.upper is None else r.upper, str(r.consistent).lower()]


def _write_csv(reports, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(_csv_row(r))


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


# ---------------------------------------------------------------- subcommands

def cmd_classify(args, out) -> int:
    strips = _strips(args.notation)
    cls = classify(strips)
    obj = {"input": args.notation, "strips": list(strips), "class": cls.value}
    if cls in (LinkClass.TYPE1, LinkClass.TYPE2):
        p = params_from_strips(strips)
        st = diagram_stats(p)
        obj.update(p.to_json())
        obj["notation"] = p.notation()
        obj["crossings"], obj["writhe"], obj["seifert_circles"] = st.crossings, st.writhe, st.seifert_circles
    _emit(obj, out)
    return EXIT_OK


def cmd_homfly(args, out) -> int:
    strips = _strips(args.notation)
    try:
        poly = homfly_pretzel(strips)
    except ValueError as exc:
        raise InputError("unsupported", str(exc)) from None
    x = extract_extremes(poly)
    obj = {
        "input": args.notation,
        "strips": list(strips),
        "polynomial": repr(poly),
        "terms": poly.to_json(),
        "E": x.E,
        "e": x.e,
        "p_h": repr(x.ph),
        "p_l": repr(x.pl),
        "mfw_lower": mfw_bound(x),
    }
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["z_exp", "a_exp", "coefficient"])
        w.writerows(poly.to_json())
    else:
        _emit(obj, out)
    return EXIT_OK


def _report_no_verify(p: PretzelParams) -> BraidIndexReport:
    case, value, flags = dispatch(p)
    r = BraidIndexReport(p, case, value, flags=flags + ["not_verified"])
    r.upper = construction_upper_bound(p, case).upper
    return r


def cmd_index(args, out) -> int:
    p = _typed(args.notation)
    r = _report_no_verify(p) if args.no_verify else verify_consistency(p)
    if args.format == "csv":
        _write_csv([r], out)
    else:
        obj = r.to_json()
        if args.explain:
            obj["schedule"] = construction_upper_bound(p, r.case_id).to_json()
        _emit(obj, out)
    return EXIT_OK if (r.consistent or args.no_verify) else EXIT_INCONSISTENT


def _sweep_reports(spec: SweepSpec, verify: bool) -> list[BraidIndexReport]:
    params = spec.params()
    fn = verify_consistency if verify else _report_no_verify
    if spec.parallelism == 1:
        return [fn(p) for p in params]
    with ProcessPoolExecutor(max_workers=spec.parallelism) as pool:
        # map() returns results in submission order
        return list(pool.map(fn, params, chunksize=max(1, len(params) // (8 * spec.parallelism))))


def _spec_from(args) -> SweepSpec:
    return SweepSpec(LinkType(args.type), args.max_strips, args.max_alpha,
                     args.max_beta if args.max_beta is not None else args.max_alpha,
                     args.min_strips, args.jobs)


def cmd_sweep(args, out) -> int:
    spec = _spec_from(args)
    reports = _sweep_reports(spec, verify=not args.no_verify)
    failures = [r for r in reports if not r.consistent] if not args.no_verify else []
    if args.format == "csv":
        _write_csv(reports, out)
    else:
        _emit({
            "type": spec.link_type.value,
            "max_strips": spec.max_strips,
            "max_alpha": spec.max_alpha,
            "max_beta": spec.max_beta,
            "checked": len(reports),
            "consistent": len(reports) - len(failures),
            "inconsistent": len(failures),
            "failures": [r.to_json() for r in failures],
        }, out)
    return EXIT_INCONSISTENT if failures else EXIT_OK


def cmd_table(args, out) -> int:
    spec = _spec_from(args)
    rows = []
    for p in spec.params():
        case, value, flags = dispatch(p)
        rows.append(BraidIndexReport(p, case, value, flags=flags))
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["type", "strips", "case", "braid_index"])
        for r in rows:
            w.writerow(_csv_row(r)[:4])
    else:
        _emit([{"input": r.params.notation(), "case": r.case_id, "braid_index": r.formula_value,
                "flags": r.flags} for r in rows], out)
    return EXIT_OK


# --------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pretzel-braid",
                                 description="HOMFLY-PT polynomials and braid indices of pretzel links.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("classify", help="type and diagram statistics of a pretzel diagram")
    p.add_argument("notation")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("homfly", help="HOMFLY-PT polynomial and its extreme a-powers")
    p.add_argument("notation")
    common(p)
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("index", help="braid index with lower/upper bound verification")
    p.add_argument("notation")
    p.add_argument("--explain", action="store_true", help="include the reduction schedule")
    p.add_argument("--no-verify", action="store_true", help="skip the HOMFLY-PT lower bound")
    common(p)
    p.set_defaults(func=cmd_index)

    for name, func, helptext in [("sweep", cmd_sweep, "verify every link within bounds"),
                                 ("table", cmd_table, "formula values within bounds")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--type", choices=["P1", "P2"], required=True)
        p.add_argument("--max-strips", type=int, default=4)
        p.add_argument("--max-alpha", type=int, default=3)
        p.add_argument("--max-beta", type=int, default=None)
        p.add_argument("--min-strips", type=int, default=1)
        p.add_argument("--jobs", type=int, default=1)
        if name == "sweep":
            p.add_argument("--no-verify", action="store_true")
        common(p)
        p.set_defaults(func=func)
    return ap


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code:
            err.write(json.dumps({"error": "usage", "message": "invalid command line"}) + "\n")
            return EXIT_INVALID
        return EXIT_OK
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(json.dumps(exc.payload) + "\n")
        return EXIT_INVALID


def run(argv: list[str]) -> tuple[int, str, str]:
    """Invoke :func:`main` capturing stdout and stderr."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
