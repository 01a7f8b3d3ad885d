"""Command-line interface: gen / depth / betti / sdepth / decomp / verify.

Exit codes: 0 success (and no verification violation), 1 at least one
verification violation, 2 usage error or violated precondition.  All
numeric output is exact integers.
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import Field, RATIONALS, GF2, depth_quotient, hochster_betti
from .graphs import cycle_ideal, line_ideal
from .ideals import MonomialIdeal
from .sdepth import StanleyCertificate, stanley_depth, validate_decomposition
from .oracle import verify_suite, DEPTH_N_CAP, SDEPTH_N_CAP


class UsageError(Exception):
    pass


def _field(name: str) -> Field:
    if name == "q":
        return RATIONALS
    if name == "f2":
        return GF2
    raise UsageError(f"unknown field {name!r}")


def _load_module(args) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Resolve the (J, I) pair from --graph/--n/--m or --ideal-file."""
    module = getattr(args, "module", "quotient")
    if getattr(args, "ideal_file", None):
        if args.graph or args.m is not None:
            raise UsageError("--ideal-file excludes --graph/--m")
        if module == "subquotient":
            raise UsageError("--module subquotient needs a named graph family")
        with open(args.ideal_file) as fh:
            ideal = MonomialIdeal.from_dict(json.load(fh))
        return MonomialIdeal.whole_ring(ideal.n), ideal
    if not args.graph or args.n is None or args.m is None:
        raise UsageError("need --graph, --n and --m (or --ideal-file)")
    ideal = _named_ideal(args.graph, args.n, args.m)
    if module == "subquotient":
        if args.graph != "cycle":
            raise UsageError("--module subquotient applies to cycle ideals")
        return ideal, line_ideal(args.n, args.m)
    return MonomialIdeal.whole_ring(args.n), ideal


def _named_ideal(graph: str, n: int, m: int) -> MonomialIdeal:
    try:
        if graph == "line":
            return line_ideal(n, m)
        if graph == "cycle":
            return cycle_ideal(n, m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown graph kind {graph!r}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_gen(args) -> int:
    ideal = _named_ideal(args.graph, args.n, args.m)
    if args.format == "json":
        _emit(json.dumps(ideal.to_dict()), args.out)
    else:
        _emit(str(ideal), args.out)
    return 0


def cmd_depth(args) -> int:
    _, ideal = _load_module(args)
    if ideal.is_whole_ring:
        raise UsageError("depth of the zero module S/S is undefined")
    _emit(str(depth_quotient(ideal, _field(args.field))), args.out)
    return 0


def cmd_betti(args) -> int:
    _, ideal = _load_module(args)
    if ideal.is_whole_ring:
        raise UsageError("Betti table of the zero module S/S is undefined")
    table = hochster_betti(ideal, _field(args.field))
    if args.format == "json":
        rows = [{"i": i, "sigma": list(s), "beta": b} for i, s, b in table.rows()]
        _emit(json.dumps(rows), args.out)
    else:
        lines = ["i,sigma,beta"]
        for i, s, b in table.rows():
            lines.append(f"{i},{' '.join(map(str, s))},{b}")
        _emit("\n".join(lines), args.out)
    return 0


def _run_sdepth(args):
    j_ideal, i_ideal = _load_module(args)
    if j_ideal == i_ideal:
        raise UsageError("J = I gives the zero module")
    return stanley_depth(j_ideal, i_ideal, node_budget=args.budget_nodes), \
        j_ideal, i_ideal


def cmd_sdepth(args) -> int:
    res, j_ideal, i_ideal = _run_sdepth(args)
    if args.certificate:
        with open(args.certificate, "w") as fh:
            fh.write(res.certificate.to_json() + "\n")
    if res.exact:
        _emit(str(res.sdepth), args.out)
        return 0
    _emit(f"unknown >= {res.sdepth}", args.out)
    return 0


def cmd_decomp(args) -> int:
    j_ideal, i_ideal = _load_module(args)
    if args.check:
        with open(args.check) as fh:
            cert = StanleyCertificate.from_dict(json.load(fh), j_ideal.n)
        result = validate_decomposition(cert, j_ideal, i_ideal)
        if result:
            _emit("valid", args.out)
            return 0
        _emit(f"invalid: {result.reason}", args.out)
        return 1
    if j_ideal == i_ideal:
        raise UsageError("J = I gives the zero module")
    res = stanley_depth(j_ideal, i_ideal, node_budget=args.budget_nodes)
    _emit(res.certificate.to_json(), args.out)
    return 0


def cmd_verify(args) -> int:
    report = verify_suite(args.suite, args.n_min, args.n_max,
                          field_choice=_field(args.field),
                          node_budget=args.budget_nodes,
                          depth_n_cap=args.depth_cap,
                          sdepth_n_cap=args.sdepth_cap)
    if args.format == "json":
        text = json.dumps(report.to_json_obj(), indent=2)
    elif args.format == "csv":
        text = "\n".join(report.to_csv_lines())
    else:
        text = "\n".join(report.to_table_lines())
    _emit(text, args.out)
    return 1 if report.has_violation else 0


def _add_module_opts(p, subquotient: bool = True):
    p.add_argument("--graph", choices=["line", "cycle"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--ideal-file", help="JSON ideal {'n':..,'gens':[[..],..]}")
    if subquotient:
        p.add_argument("--module", choices=["quotient", "subquotient"],
                       default="quotient")
    p.add_argument("--out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathdepth",
        description="Exact depth / Stanley depth engines for path ideals "
                    "of line and cyclic graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a path ideal")
    p.add_argument("--graph", choices=["line", "cycle"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("depth", help="depth of S/I")
    _add_module_opts(p, subquotient=False)
    p.add_argument("--field", choices=["q", "f2"], default="q")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("betti", help="multigraded Betti numbers of S/I")
    _add_module_opts(p, subquotient=False)
    p.add_argument("--field", choices=["q", "f2"], default="q")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("sdepth", help="Stanley depth of S/I or J/I")
    _add_module_opts(p)
    p.add_argument("--certificate", help="write the certificate JSON here")
    p.add_argument("--budget-nodes", type=int)
    p.set_defaults(func=cmd_sdepth)

    p = sub.add_parser("decomp", help="emit or check a Stanley decomposition")
    _add_module_opts(p)
    p.add_argument("--check", help="validate this certificate JSON instead")
    p.add_argument("--budget-nodes", type=int)
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("verify", help="run the verification harness")
    p.add_argument("--suite", default="all",
                   choices=["all", "j2", "j3", "line", "jn1", "jn2",
                            "prop1", "max"])
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--field", choices=["q", "f2"], default="q")
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--depth-cap", type=int, default=DEPTH_N_CAP)
    p.add_argument("--sdepth-cap", type=int, default=SDEPTH_N_CAP)
    p.add_argument("--format", choices=["json", "csv", "table"],
                   default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
