"""Command-line entry point.

Exit codes: 0 when the computation or check passes, 1 when the answer is a
mathematical negative (a gap, a violation, a counterexample), 2 for usage
and input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .analysis import (
    THEOREMS,
    check_subadditivity,
    search_open_questions,
    strand_report,
    verify_theorem,
)
from .betti import SizeGuardError, default_jobs, diagram, hochster_betti
from .exactla import FieldSpec
from .graphs import (
    GraphFormatError,
    edge_ideal,
    in_class_g,
    in_class_gprime,
    induced_matching_number,
    is_chordal,
    is_unicyclic,
    min_vertex_cover_size,
    parse_edge_list,
    parse_family,
)
from .ideals import IdealFormatError, parse_ideal
from .simplicial import bits

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def load_graph(args):
    """The graph named by --family or --graph; ``None`` for --ideal input."""
    if getattr(args, "family", None):
        return parse_family(args.family)
    if getattr(args, "graph", None):
        return parse_edge_list(_read(args.graph))
    return None


def load_ideal(args):
    g = load_graph(args)
    if g is not None:
        return edge_ideal(g), g
    return parse_ideal(_read(args.ideal)), None


def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.char)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _jobs(args) -> int:
    return args.jobs if args.jobs is not None else default_jobs()


def _table(args):
    ideal, g = load_ideal(args)
    b = hochster_betti(ideal, _field(args), force=args.force, jobs=_jobs(args))
    return b, g


def betti_json(b, multigraded: bool) -> dict:
    out = {"n": b.ground_size, "field_char": b.field_char}
    if multigraded:
        out["multigraded"] = [{"i": i, "mask": bits(a), "beta": v} for i, a, v in b.sorted_entries()]
    out["graded"] = [{"i": i, "j": j, "beta": v} for (i, j), v in sorted(b.graded().items())]
    out["t"] = b.shifts()
    out["reg"] = b.reg()
    out["pdim"] = b.pdim()
    return out


def betti_csv(b, multigraded: bool) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "i", "j", "mask", "beta"])
    for (i, j), v in sorted(b.graded().items()):
        w.writerow(["graded", i, j, "", v])
    if multigraded:
        for i, a, v in b.sorted_entries():
            w.writerow(["multigraded", i, len(bits(a)), " ".join(map(str, bits(a))), v])
    return buf.getvalue()


def betti_text(b, multigraded: bool) -> str:
    lines = [diagram(b.graded())]
    lines.append(f"reg {b.reg()}  pdim {b.pdim()}  t {b.shifts()}")
    if multigraded:
        lines.append("")
        lines.append("multigraded (i, support, beta):")
        for i, a, v in b.sorted_entries():
            lines.append(f"  {i}  {bits(a)}  {v}")
    return "\n".join(lines) + "\n"


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text)


def cmd_betti(args) -> int:
    b, _ = _table(args)
    if args.format == "json":
        sys.stdout.write(json.dumps(betti_json(b, args.multigraded), indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(betti_csv(b, args.multigraded))
    else:
        sys.stdout.write(betti_text(b, args.multigraded))
    return EXIT_OK


def cmd_strands(args) -> int:
    b, _ = _table(args)
    rep = strand_report(b)
    lines = []
    for j, s in sorted(rep.strands.items()):
        state = "connected" if s.connected else f"gaps {list(s.gaps)}"
        lines.append(f"{j}-strand: q={s.q} p={s.p} present={list(s.present)} {state}")
    lines.append("strand connected" if rep.connected else "not strand connected")
    _emit(args, rep.to_json(), "\n".join(lines) + "\n")
    return EXIT_OK if rep.connected else EXIT_NEGATIVE


def cmd_subadd(args) -> int:
    b, _ = _table(args)
    rep = check_subadditivity(b)
    lines = [f"t = {rep.shifts}"]
    for a, c, ta, tc, tac in rep.violations:
        lines.append(f"violation: t_{a + c}={tac} > t_{a}+t_{c}={ta + tc}")
    lines.append("subadditivity holds" if rep.holds else "subadditivity fails")
    _emit(args, rep.to_json(), "\n".join(lines) + "\n")
    return EXIT_OK if rep.holds else EXIT_NEGATIVE


def _need_graph(args):
    g = load_graph(args)
    if g is None:
        raise UsageError(f"{args.command} needs a graph: use --family or --graph")
    return g


def cmd_nu(args) -> int:
    g = _need_graph(args)
    b = hochster_betti(edge_ideal(g), _field(args), force=args.force, jobs=_jobs(args))
    info = {"nu": induced_matching_number(g), "min_vertex_cover": min_vertex_cover_size(g), "reg": b.reg()}
    _emit(args, info, "".join(f"{k} {v}\n" for k, v in info.items()))
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _need_graph(args)
    info = {
        "in_G": in_class_g(g),
        "in_Gprime": in_class_gprime(g),
        "chordal": is_chordal(g),
        "unicyclic": is_unicyclic(g),
    }
    _emit(args, info, "".join(f"{k} {str(v).lower()}\n" for k, v in info.items()))
    return EXIT_OK


def cmd_gen(args) -> int:
    sys.stdout.write(parse_family(args.family).to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        rep = verify_theorem(args.theorem, args.n_max, _field(args), _jobs(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(json.dumps(rep.to_json(), indent=2) + "\n")
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_search(args) -> int:
    try:
        rep = search_open_questions(args.n_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    return EXIT_NEGATIVE if any(q["counterexamples"] for q in rep["questions"]) else EXIT_OK


def _add_input(p: argparse.ArgumentParser, ideal: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", help="named family, e.g. cycle:5, wheel:6, fan:2,5, kpartite:2,2,2")
    g.add_argument("--graph", help="edge-list file: first line n, then 'u v' per edge ('-' for stdin)")
    if ideal:
        g.add_argument(
            "--ideal",
            help="squarefree ideal file: first line n, then one generator per line as variable indices ('-' for stdin)",
        )


def _add_compute(p: argparse.ArgumentParser, formats) -> None:
    p.add_argument("--char", type=int, default=0, help="field characteristic: 0 or a prime (default 0)")
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $BETTIFORGE_JOBS or 1)")
    p.add_argument("--force", action="store_true", help="allow more than 16 variables")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bettiforge",
        description="Exact Betti numbers of squarefree monomial ideals and checks for edge ideals. "
        "Only squarefree ideals are accepted; polarize other monomial ideals first.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="graded (and multigraded) Betti numbers of R/I")
    _add_input(p)
    _add_compute(p, ["diagram", "json", "csv"])
    p.add_argument("--multigraded", action="store_true", help="include the multidegree entries")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("strands", help="strands j >= 1 of R/I and their gaps")
    _add_input(p)
    _add_compute(p, ["text", "json"])
    p.set_defaults(func=cmd_strands)

    p = sub.add_parser("subadd", help="check t_{a+b} <= t_a + t_b")
    _add_input(p)
    _add_compute(p, ["text", "json"])
    p.set_defaults(func=cmd_subadd)

    p = sub.add_parser("nu", help="induced matching number, minimum vertex cover and regularity")
    _add_input(p, ideal=False)
    _add_compute(p, ["text", "json"])
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("classify", help="membership in the recursive classes, chordality, unicyclicity")
    _add_input(p, ideal=False)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="print the edge list of a named family")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="exhaustive check of one result; JSON report")
    p.add_argument("theorem", choices=sorted(THEOREMS))
    p.add_argument("--n-max", type=int, default=None, help="largest vertex count (default per theorem)")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="scan small graphs for counterexamples to the open strand questions")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, IdealFormatError, SizeGuardError) as exc:
        print(f"bettiforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # invalid family parameters and similar bad input
        print(f"bettiforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
