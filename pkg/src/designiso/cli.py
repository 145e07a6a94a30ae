"""Command line interface.

Exit codes: 0 success, 1 a negative answer (invalid, inadmissible,
non-isomorphic), 2 usage or precondition errors.  Every command prints one
summary line starting with ``RESULT:``.  It goes to stdout, except when the
command's payload (a design or graph file) is written to stdout because no
``-o`` was given; then it goes to stderr so the payload stays parseable.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import constructions as cons
from .canonical import are_isomorphic, canonical_form, line_graph_isomorphic, sequence_bound
from .core import Params, check_admissibility, derived_counts, fisher_lower_bound, validate
from .io import FormatError, emit_design, emit_graph, read_design, read_graph
from .linegraph import line_graph, strongly_regular_check
from .reconstruct import CliqueCountError, ReconstructionError, ReconstructionRefused, reconstruct


class UsageError(Exception):
    pass


def _payload(args, text: str, summary: str) -> int:
    if args.output:
        Path(args.output).write_text(text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return 0


def cmd_gen(args) -> int:
    what, rest = args.what, args.args

    def need(n):
        if len(rest) != n:
            raise UsageError(f"gen {what} takes {n} argument(s)")
        return rest

    try:
        if what == "fano":
            need(0)
            D = cons.fano()
        elif what == "sqs":
            D = cons.boolean_sqs(int(need(1)[0]))
        elif what == "sts":
            D = cons.sts(int(need(1)[0]))
        elif what == "complete":
            v, k, t = map(int, need(3))
            D = cons.complete_design(v, k, t)
        elif what == "scramble":
            path, seed = need(2)
            D = cons.scramble(read_design(path), int(seed))
        elif what == "pasch":
            D = cons.pasch_switch(read_design(need(1)[0]))
            if D is None:
                print("RESULT: no-pasch")
                return 1
        else:
            raise UsageError(f"unknown design family {what!r}")
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise UsageError(str(exc)) from None
    return _payload(args, emit_design(D), f"RESULT: generated {D.params} b={D.b}")


def cmd_validate(args) -> int:
    D = read_design(args.file)
    report = validate(D)
    if report.ok:
        print(f"RESULT: valid {D.params} b={D.b}")
        return 0
    print(report, file=sys.stderr)
    print(f"RESULT: invalid {len(report.violations)} violation(s)")
    return 1


def cmd_params(args) -> int:
    try:
        p = Params(args.t, args.v, args.k, args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = check_admissibility(p)
    print(f"params {p} nontrivial={p.nontrivial}")
    if report.ok:
        c = derived_counts(p)
        print(f"b={c.b} r={c.r} lambda_s={list(c.lambda_s)}")
    fb = fisher_lower_bound(p)
    print(f"fisher_lower_bound={'n/a' if fb is None else fb}")
    if report.ok:
        print("RESULT: admissible")
        return 0
    print(report, file=sys.stderr)
    print("RESULT: inadmissible")
    return 1


def cmd_linegraph(args) -> int:
    G = line_graph(read_design(args.file))
    srg = strongly_regular_check(G) if G.n >= 3 else None
    srg_s = "n/a" if srg is None else ",".join(map(str, srg))
    return _payload(args, emit_graph(G), f"RESULT: linegraph n={G.n} m={G.num_edges} srg={srg_s}")


def cmd_reconstruct(args) -> int:
    G = read_graph(args.file)
    try:
        R = reconstruct(G, args.t, args.k, args.lam, force=args.force)
    except ReconstructionRefused as exc:
        print(str(exc), file=sys.stderr)
        print("RESULT: refused")
        return 2
    except CliqueCountError as exc:
        print(str(exc), file=sys.stderr)
        print(f"RESULT: not-a-line-graph cliques={exc.found} expected={exc.expected}")
        return 1
    except ReconstructionError as exc:
        print(str(exc), file=sys.stderr)
        print("RESULT: not-a-line-graph")
        return 1
    return _payload(args, emit_design(R.design), f"RESULT: reconstructed {R.design.params} b={R.design.b}")


def cmd_canon(args) -> int:
    D = read_design(args.file)
    report = validate(D)
    if not report.ok:
        print(report, file=sys.stderr)
        print("RESULT: invalid")
        return 1
    cf = canonical_form(D, threads=args.threads)
    s = cf.stats
    print(f"sequences={s.sequences} bound={sequence_bound(D.v)} leaves={s.leaves} "
          f"incell_branchings={s.incell_branchings} automorphisms={s.automorphisms}")
    if args.blocks:
        sys.stdout.write(emit_design(type(D)(D.params, cf.canonical_blocks)))
    print(f"RESULT: {cf.digest}")
    return 0


def cmd_iso(args) -> int:
    d1, d2 = read_design(args.file1), read_design(args.file2)
    for name, d in (("first", d1), ("second", d2)):
        report = validate(d)
        if not report.ok:
            print(f"{name} design is invalid:\n{report}", file=sys.stderr)
            print("RESULT: invalid")
            return 1
    phi = are_isomorphic(d1, d2, threads=args.threads)
    if phi is None:
        print("RESULT: non-isomorphic")
        return 1
    print("map " + " ".join(f"{x}->{y}" for x, y in enumerate(phi)))
    print("RESULT: isomorphic")
    return 0


def cmd_graph_iso(args) -> int:
    g1, g2 = read_graph(args.file1), read_graph(args.file2)
    try:
        res = line_graph_isomorphic(g1, g2, args.t, args.k, args.lam, threads=args.threads)
    except ReconstructionRefused as exc:
        print(str(exc), file=sys.stderr)
        print("RESULT: refused")
        return 2
    except ReconstructionError as exc:
        print(str(exc), file=sys.stderr)
        print("RESULT: not-a-line-graph")
        return 1
    if args.certificate:
        out = Path(args.certificate)
        out.mkdir(parents=True, exist_ok=True)
        # designs are written in vertex order so that block i is vertex i
        for name, R in (("first", res.first), ("second", res.second)):
            p = R.design.params
            lines = [f"design {p.t} {p.v} {p.k} {p.lam}", str(R.design.b)]
            lines += [" ".join(map(str, B)) for B in R.design.blocks]
            (out / f"{name}.design").write_text("\n".join(lines) + "\n")
        cert = {"isomorphic": res.isomorphic,
                "point_map": list(res.point_map) if res.point_map else None,
                "vertex_map": list(res.vertex_map) if res.vertex_map else None}
        (out / "map.json").write_text(json.dumps(cert, indent=1) + "\n")
    if not res.isomorphic:
        print("RESULT: non-isomorphic")
        return 1
    print("vertex_map " + " ".join(f"{i + 1}->{j + 1}" for i, j in enumerate(res.vertex_map)))
    print("RESULT: isomorphic")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="designiso", description="t-designs, line graphs and isomorphism")
    ap.add_argument("--threads", type=int, default=1, help="worker processes for canonical search")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a design: fano | sqs D | sts V | complete V K T | "
                                   "scramble FILE SEED | pasch FILE")
    p.add_argument("what")
    p.add_argument("args", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("params")
    for name in ("t", "v", "k", "lam"):
        p.add_argument(name, type=int, metavar=name if name != "lam" else "lambda")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("linegraph")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_linegraph)

    def structural(p):
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--lambda", dest="lam", type=int, required=True)

    p = sub.add_parser("reconstruct")
    p.add_argument("file")
    structural(p)
    p.add_argument("-o", "--output")
    p.add_argument("--force", action="store_true", help="skip the b > k^2(k-1) gate (diagnostics)")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("canon")
    p.add_argument("file")
    p.add_argument("--blocks", action="store_true", help="also print the canonical design")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("graph-iso")
    p.add_argument("file1")
    p.add_argument("file2")
    structural(p)
    p.add_argument("--certificate", metavar="DIR", help="write both reconstructions and the maps here")
    p.set_defaults(func=cmd_graph_iso)
    return ap


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:
            return 0
        print("RESULT: usage-error")
        return 2
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        warnings.showwarning = _show_warning
        try:
            return args.func(args)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            ap.print_usage(sys.stderr)
            print("RESULT: usage-error")
            return 2
        except (FormatError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            print("RESULT: input-error")
            return 2


if __name__ == "__main__":
    sys.exit(main())
