"""Command-line interface.

Exit codes: 0 all inequalities hold (and routes agree), 2 some inequality
fails, 1 parse or internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .complexes import (
    ParseError,
    clique_fvector,
    fvector_of_complex,
    is_flag,
    parse_edge_list,
    parse_facet_list,
    parse_fvector,
)
from .harness import CorpusError, CorpusSpec, run_corpus
from .inequalities import (
    DEFAULT_MAX_N,
    InequalityReport,
    check_inequalities,
    default_order,
    dseries_from_alpha,
    alpha_sequence,
)

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _csv(xs) -> str:
    return ",".join(str(x) for x in xs)


def report_dict(report: InequalityReport, input_kind: str, flag: bool | None) -> dict:
    return {
        "f_vector": list(report.fvector),
        "alpha": [str(a) for a in report.alpha],
        "max_n": report.max_n,
        "results": [
            {
                "n": r.n,
                "lhs": str(r.lhs),
                "v": rat(r.v),
                "v_integral": r.v_integral,
                "holds": r.holds,
            }
            for r in report.records
        ],
        "all_hold": report.all_hold,
        "input_kind": input_kind,
        "is_flag": flag,
        "routes_agree": report.routes_agree,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def report_text(d: dict) -> str:
    flag = "n/a" if d["is_flag"] is None else str(d["is_flag"]).lower()
    lines = [
        f"input: {d['input_kind']}  flag: {flag}",
        f"f-vector: {_csv(d['f_vector'])}",
        f"alpha: {_csv(d['alpha'])}",
        f"{'N':>3}  {'lhs':>12}  {'v':>12}  integral  holds",
    ]
    for r in d["results"]:
        lines.append(
            f"{r['n']:>3}  {r['lhs']:>12}  {r['v']:>12}  {str(r['v_integral']).lower():>8}  "
            f"{str(r['holds']).lower()}"
        )
    lines.append(f"all_hold: {str(d['all_hold']).lower()}")
    lines.append(f"routes_agree: {str(d['routes_agree']).lower()}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(args) -> tuple[tuple[int, ...], str, bool | None]:
    if args.fvector is not None:
        return parse_fvector(args.fvector), "fvector", None
    if args.input is None:
        raise ParseError("no input: give a file or --fvector")
    text = _read(args.input)
    if args.facets:
        c = parse_facet_list(text)
        return fvector_of_complex(c), "facets", is_flag(c)
    return clique_fvector(parse_edge_list(text)), "graph", True


def _order(args) -> int:
    order = args.order if args.order is not None else default_order(args.max_n)
    if order < args.max_n:
        raise ParseError("--order must be at least --max-n")
    return order


def cmd_check(args) -> int:
    f, kind, flag = _load(args)
    report = check_inequalities(f, args.max_n, _order(args))
    d = report_dict(report, kind, flag)
    sys.stdout.write(dumps(d) if args.format == "json" else report_text(d))
    if not report.routes_agree:
        print("error: computation routes disagree", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK if report.all_hold else EXIT_VIOLATION


def cmd_fvector(args) -> int:
    f = clique_fvector(parse_edge_list(_read(args.input)))
    print(_csv(f))
    return EXIT_OK


def cmd_series(args) -> int:
    f = parse_fvector(args.fvector)
    order = _order(args)
    report = check_inequalities(f, min(args.max_n, order), order)
    d_series = dseries_from_alpha(alpha_sequence(f, order))
    peeled = report.peeled
    data = {
        "f_vector": list(f),
        "order": order,
        "d": [rat(x) if isinstance(x, Fraction) else str(x) for x in d_series],
        "q": [rat(x) if isinstance(x, Fraction) else str(x) for x in report.q],
        "v": [rat(r.v) for r in report.records],
        "v_peeled": [rat(x) for x in peeled.values],
        "peeling_halted_at": peeled.halted_at,
        "routes_agree": report.routes_agree,
    }
    if args.format == "json":
        sys.stdout.write(dumps(data))
    else:
        print(f"D: {_csv(data['d'])}")
        print(f"Q: {_csv(data['q'])}")
        print(f"v: {_csv(data['v'])}")
        print(f"v (peeled): {_csv(data['v_peeled'])}")
        if peeled.halted_at is not None:
            print(f"peeling: {peeled.message}")
        print(f"routes_agree: {str(report.routes_agree).lower()}")
    return EXIT_OK if report.routes_agree else EXIT_ERROR


def _corpus(args, spec: CorpusSpec) -> int:
    result = run_corpus(spec, args.workers)
    if args.format == "json":
        sys.stdout.write(result.to_json())
    else:
        for line in result.violation_lines():
            print(line)
        print(
            f"total={result.total} violations={len(result.violations)} "
            f"route_disagreements={result.route_disagreements} elapsed={result.elapsed:.2f}s"
        )
    return EXIT_OK if result.ok else EXIT_ERROR


def cmd_enumerate(args) -> int:
    spec = CorpusSpec("exhaustive", args.vertices, max_n=args.max_n, order=args.order)
    return _corpus(args, spec)


def cmd_random(args) -> int:
    spec = CorpusSpec(
        "random",
        args.vertices,
        edge_prob=Fraction(args.prob),
        trials=args.trials,
        seed=args.seed,
        max_n=args.max_n,
        order=args.order,
    )
    return _corpus(args, spec)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="largest N to check (default 10)")
    common.add_argument("--order", type=int, default=None, help="series order (default max(16, max-n))")
    common.add_argument("--format", choices=("text", "json"), default="text")

    pool = argparse.ArgumentParser(add_help=False)
    pool.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores)")

    p = argparse.ArgumentParser(prog="flagfaces", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="evaluate the inequalities")
    s.add_argument("input", nargs="?", help="edge-list file ('-' for stdin)")
    s.add_argument("--facets", action="store_true", help="input is a facet list")
    s.add_argument("--fvector", help='inline f-vector "f0,f1,..."')
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("fvector", help="clique f-vector of a graph")
    s.add_argument("input", help="edge-list file ('-' for stdin)")
    s.set_defaults(func=cmd_fvector)

    s = sub.add_parser("series", parents=[common], help="print D(t), Q(t) and v")
    s.add_argument("--fvector", required=True)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("enumerate", parents=[common, pool], help="all labelled graphs")
    s.add_argument("--vertices", type=int, required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("random", parents=[common, pool], help="seeded random graphs")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--prob", default="1/2", help="edge probability as a rational, e.g. 1/3")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_random)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, CorpusError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
