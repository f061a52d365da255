"""Command-line entry point: ``oddcolor <command> ...``.

Exit status: 0 success (or a true answer), 1 a false answer or no coloring,
2 bad input, 3 search budget exceeded.  With ``--kv`` every result is
printed as ``key=value`` lines for scripts.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from . import generators as gen
from .coloring import Coloring, ColoringFormatError, format_coloring, is_odd_coloring, parse_coloring
from .discharging import EmbeddingError, GirthViolated, audit_sec3, audit_sec4, audit_sec5, format_embedding, named_embedding, parse_embedding
from .graph import ContractionError, GraphFormatError, find_induced_c5, format_graph, girth, parse_graph
from .mad import BudgetExceeded, mad_exact
from .reductions import keylem_find, pipeline_planar6, pipeline_sparse, pipeline_sparse4, rc5_find, struc_find, thread_find
from .solver import chi_odd, find_odd_coloring

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _graph(path: str):
    return parse_graph(_read(path))


class Out:
    """Collects results and prints them plainly or as ``key=value`` lines."""

    def __init__(self, kv: bool):
        self.kv = kv

    def value(self, key: str, val, plain: str | None = None) -> None:
        if self.kv:
            print(f"{key}={val}")
        elif plain is not None:
            print(plain)

    def coloring(self, col: Coloring, dest: str | None) -> None:
        if dest:
            Path(dest).write_text(format_coloring(col))
        if self.kv:
            print("coloring=" + ",".join("-" if k is None else str(k) for k in col.colors))
        elif not dest:
            print(format_coloring(col), end="")


def _write_or_print(text: str, dest: str | None) -> None:
    if dest:
        Path(dest).write_text(text)
    else:
        print(text, end="")


def cmd_gen(args, out: Out) -> int:
    if args.name == "random-regular":
        g = gen.random_regular(args.n, args.degree, args.seed)
    elif args.name == "random-sparse":
        g = gen.random_sparse(args.n, Fraction(args.cap), forbid_induced_c5=args.forbid_c5, seed=args.seed)
    else:
        g = gen.named(args.name, args.param)
    if args.subdivide:
        g = gen.subdivide(g)
    if args.embedding_out:
        if args.subdivide or args.name.startswith("random"):
            raise InputError("no built-in embedding for this graph")
        Path(args.embedding_out).write_text(format_embedding(named_embedding(args.name, args.param)))
    _write_or_print(format_graph(g), args.output)
    return EXIT_OK


def cmd_chi_odd(args, out: Out) -> int:
    k = chi_odd(_graph(args.graph), args.budget)
    out.value("chi_odd", k, str(k))
    return EXIT_OK


def cmd_odd_color(args, out: Out) -> int:
    res = find_odd_coloring(_graph(args.graph), args.colors, args.budget)
    out.value("colorable", str(res.colorable).lower(), None if res.colorable else "not colorable")
    out.value("nodes", res.nodes_explored)
    if res.witness is not None:
        out.coloring(res.witness, args.output)
    return EXIT_OK if res.colorable else EXIT_FALSE


def cmd_verify(args, out: Out) -> int:
    g = _graph(args.graph)
    col = parse_coloring(_read(args.coloring), g.n)
    ok = is_odd_coloring(g, col)
    out.value("valid", str(ok).lower(), "valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_mad(args, out: Out) -> int:
    cert = mad_exact(_graph(args.graph))
    out.value("mad", cert.value, str(cert.value))
    out.value("witness", ",".join(map(str, sorted(cert.witness))), "witness " + " ".join(map(str, sorted(cert.witness))))
    return EXIT_OK


def cmd_girth(args, out: Out) -> int:
    gi = girth(_graph(args.graph))
    text = "inf" if gi is None else str(gi)
    out.value("girth", text, text)
    return EXIT_OK


def cmd_find_c5(args, out: Out) -> int:
    cyc = find_induced_c5(_graph(args.graph))
    text = "none" if cyc is None else " ".join(map(str, cyc))
    out.value("induced_c5", "none" if cyc is None else ",".join(map(str, cyc)), text)
    return EXIT_FALSE if cyc is None else EXIT_OK


def _report_pipeline(res, args, out: Out) -> int:
    out.value("base_case", res.trace.base_case)
    out.value("steps", len(res.trace.steps))
    if args.trace:
        _write_or_print(res.trace.to_text(), args.trace_file)
    if res.refusal is not None:
        ids = ",".join(map(str, sorted(res.refusal)))
        out.value("refusal", ids, f"refused: contains K*_{args.colors + 1} on {ids}")
        return EXIT_FALSE
    if res.coloring is None:
        out.value("colorable", "false", "not colorable")
        return EXIT_FALSE
    out.value("colorable", "true")
    out.coloring(res.coloring, args.output)
    return EXIT_OK


def cmd_color_sparse(args, out: Out) -> int:
    if args.colors < 7:
        raise InputError("--colors must be at least 7")
    return _report_pipeline(pipeline_sparse(_graph(args.graph), args.colors), args, out)


def cmd_color_planar6(args, out: Out) -> int:
    return _report_pipeline(pipeline_planar6(_graph(args.graph)), args, out)


def cmd_color_sparse4(args, out: Out) -> int:
    return _report_pipeline(pipeline_sparse4(_graph(args.graph)), args, out)


def cmd_audit(args, out: Out) -> int:
    g = _graph(args.graph)
    if args.system == "sec3":
        rep = audit_sec3(g, args.colors)
    elif args.system == "sec5":
        rep = audit_sec5(g)
    else:
        if not args.embedding:
            raise InputError("audit sec4 needs --embedding")
        rep = audit_sec4(g, parse_embedding(_read(args.embedding), g.n))
    if out.kv:
        out.value("total_initial", rep.total_initial)
        out.value("total_final", rep.total_final)
        if rep.threshold is not None:
            out.value("threshold", rep.threshold)
            out.value("deficient", ",".join(map(str, rep.deficient)))
        for z in rep.final:
            out.value(f"final.{z}", rep.final[z])
    else:
        print(rep.to_text(), end="")
    return EXIT_OK


def cmd_reduce_find(args, out: Out) -> int:
    g = _graph(args.graph)
    if args.family == "keylem":
        if args.colors is None or args.colors < 5:
            raise InputError("keylem needs --colors of at least 5")
        step = keylem_find(g, args.colors)
    elif args.family == "struc":
        step = struc_find(g)
    else:
        step = {"rc5": rc5_find, "thread": thread_find}[args.family](g, strict=args.strict)
    if step is None:
        out.value("found", "false", "none")
        return EXIT_FALSE
    out.value("found", "true")
    out.value("kind", step.kind)
    out.value("S", ",".join(map(str, sorted(step.deletion_set))), step.describe())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddcolor", description="Odd colorings of sparse graphs.")
    p.add_argument("--kv", action="store_true", help="print results as key=value lines")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, fn, help: str):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="edge-list file, or - for stdin")
        sp.set_defaults(func=fn)
        return sp

    sp = sub.add_parser("gen", help="write a generated graph in edge-list format")
    sp.add_argument("name", choices=sorted(gen.NAMED) + ["random-regular", "random-sparse"])
    sp.add_argument("param", nargs="?", type=int, help="size parameter of the family")
    sp.add_argument("--n", type=int, default=10, help="vertices for random families (default 10)")
    sp.add_argument("--degree", type=int, default=3, help="degree for random-regular (default 3)")
    sp.add_argument("--cap", default="22/9", help="mad cap for random-sparse (default 22/9)")
    sp.add_argument("--forbid-c5", action="store_true", help="random-sparse: no induced 5-cycles")
    sp.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    sp.add_argument("--subdivide", action="store_true", help="subdivide every edge once")
    sp.add_argument("--embedding-out", help="also write a plane embedding to this file")
    sp.add_argument("-o", "--output", help="write to file instead of stdout")
    sp.set_defaults(func=cmd_gen)

    sp = graph_cmd("chi-odd", cmd_chi_odd, "odd chromatic number")
    sp.add_argument("--budget", type=int, help="search-node limit per palette size")

    sp = graph_cmd("odd-color", cmd_odd_color, "find an odd c-coloring")
    sp.add_argument("--colors", "-c", type=int, required=True)
    sp.add_argument("--budget", type=int, help="search-node limit")
    sp.add_argument("-o", "--output", help="write the witness coloring to this file")

    sp = graph_cmd("verify", cmd_verify, "check an odd coloring")
    sp.add_argument("coloring", help="coloring file")

    graph_cmd("mad", cmd_mad, "exact maximum average degree")
    graph_cmd("girth", cmd_girth, "length of a shortest cycle")
    graph_cmd("find-c5", cmd_find_c5, "an induced 5-cycle, if any")

    for name, fn, helptext in (
        ("color-sparse", cmd_color_sparse, "odd c-coloring for mad <= 4c/(c+2), c >= 7"),
        ("color-planar6", cmd_color_planar6, "odd 6-coloring for planar girth-5 graphs"),
        ("color-sparse4", cmd_color_sparse4, "odd 4-coloring for mad < 22/9 without induced C5"),
    ):
        sp = graph_cmd(name, fn, helptext)
        if name == "color-sparse":
            sp.add_argument("--colors", "-c", type=int, required=True)
        sp.add_argument("--trace", action="store_true", help="print the reduction transcript")
        sp.add_argument("--trace-file", help="write the transcript here instead of stdout")
        sp.add_argument("-o", "--output", help="write the coloring to this file")

    sp = sub.add_parser("audit", help="run a discharging system and print the ledger")
    sp.add_argument("system", choices=["sec3", "sec4", "sec5"])
    sp.add_argument("graph")
    sp.add_argument("--embedding", help="rotation-system file (sec4)")
    sp.add_argument("--colors", "-c", type=int, default=7, help="palette size for sec3 (default 7)")
    sp.set_defaults(func=cmd_audit)

    sp = graph_cmd("reduce-find", cmd_reduce_find, "report the first reducible configuration")
    sp.add_argument("--family", choices=["keylem", "struc", "rc5", "thread"], required=True)
    sp.add_argument("--colors", "-c", type=int)
    sp.add_argument("--strict", action="store_true", help="rc5/thread: only configurations the recipe can extend")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Out(args.kv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args, out)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return code
    except BudgetExceeded as e:
        print(f"error: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, GraphFormatError, ColoringFormatError, EmbeddingError, GirthViolated, ContractionError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
