"""Command-line front end: ``abelrep <subcommand> ...``.

Exit status: 0 success, 1 negative verdict, 2 input error, 3 capacity error.
Errors go to stderr as one JSON line ``{"error": kind, "reason": text}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import __version__, autgrp, perm
from .cgraph import ColouredGraph
from .closure import two_closure, two_orbit_closure, two_star_closure
from .errors import CapacityError, DomainError, ParseError
from .groupspec import format_group, parse_group
from .perm import PermGroup, format_cycles, groups_equal

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

_CLOSURES = {"2": two_closure, "2star": two_star_closure, "2orbit": two_orbit_closure}


class _Negative(Exception):
    """A well-formed request whose answer is no."""


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        try:
            with open(arg[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    return arg


def _group(arg: str) -> PermGroup:
    return parse_group(_read_text(arg))


def _graph(arg: str) -> ColouredGraph:
    text = sys.stdin.read() if arg == "-" else None
    if text is None:
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {arg}: {exc.strerror}") from None
    return ColouredGraph.from_json(text)


def _group_json(G: PermGroup) -> dict:
    return {
        "degree": G.degree,
        "order": G.order(),
        "generators": [format_cycles(g) for g in G.generators],
        "spec": format_group(G),
    }


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


# ---------------------------------------------------------------- commands


def _cmd_analyze(args, out: TextIO) -> int:
    from .structure import orbit_structure

    _dump(orbit_structure(_group(args.group)).to_json(), out)
    return EXIT_OK


def _cmd_closure(args, out: TextIO) -> int:
    G = _group(args.group)
    C = _CLOSURES[args.kind](G)
    _dump({"kind": args.kind, "input": _group_json(G), "closure": _group_json(C), "equal": groups_equal(C, G)}, out)
    return EXIT_OK


def _cmd_classify(args, out: TextIO) -> int:
    from .structure import classify

    report = classify(_group(args.group), witness=args.witness, check_oracle=args.check_oracle)
    _dump(report.to_json(), out)
    return EXIT_OK


def _cmd_synth(args, out: TextIO) -> int:
    from .synth import min_colour_graph, synthesize_digraph, synthesize_graph

    G = _group(args.group)
    try:
        if args.min_colours:
            g = min_colour_graph(G, args.directed)
            if g is None:
                raise _Negative("no merge of the orbital classes into at most 4 colours has this automorphism group")
        elif args.directed:
            g = synthesize_digraph(G)
        else:
            g = synthesize_graph(G)
    except DomainError as exc:
        raise _Negative(str(exc)) from None
    order = autgrp.automorphism_group(g).order()
    equal = autgrp.aut_equals(g, G)
    stamp = f"Aut order {order}, equal: {'true' if equal else 'false'}"
    if args.out == "dot":
        out.write(g.to_dot())
        out.write(f"// {stamp}\n")
    else:
        data = g.to_json()
        data["verification"] = {"aut_order": order, "equal": equal, "stamp": stamp}
        _dump(data, out)
    return EXIT_OK if equal else EXIT_NEGATIVE


def _cmd_verify(args, out: TextIO) -> int:
    g = _graph(args.graph)
    G = _group(args.group)
    equal = autgrp.aut_equals(g, G)
    order = autgrp.automorphism_group(g).order()
    _dump({"equal": equal, "aut_order": order, "group_order": G.order()}, out)
    return EXIT_OK if equal else EXIT_NEGATIVE


def _cmd_catalogue(args, out: TextIO) -> int:
    from .synth import catalogue, catalogue_entry

    entries = [catalogue_entry(args.name)] if args.name else catalogue()
    results = [(e, e.verify()) for e in entries]
    if args.name:
        _dump(results[0][0].to_json(results[0][1]), out)
    else:
        _dump([e.to_json(ok) for e, ok in results], out)
    return EXIT_OK if all(ok for _, ok in results) else EXIT_NEGATIVE


def _cmd_aut(args, out: TextIO) -> int:
    A = autgrp.automorphism_group(_graph(args.graph))
    _dump(_group_json(A), out)
    return EXIT_OK


# ------------------------------------------------------------------ parser


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ParseError(f"usage: {message}")


def build_parser() -> argparse.ArgumentParser:
    group_help = "group spec text, @file, or - for stdin"
    p = _ArgumentParser(prog="abelrep", description="Graphical representations of abelian permutation groups.")
    p.add_argument("--version", action="version", version=f"abelrep {__version__}")
    p.add_argument("--limit-elements", type=int, metavar="N", help=f"group element cap (default {perm.ELEMENT_CAP})")
    p.add_argument("--limit-vertices", type=int, metavar="N", help=f"engine vertex cap (default {autgrp.VERTEX_LIMIT})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    s = sub.add_parser("analyze", help="orbit structure as JSON")
    s.add_argument("group", help=group_help)
    s.set_defaults(func=_cmd_analyze)

    s = sub.add_parser("closure", help="2-, 2*- or 2-orbit closure")
    s.add_argument("group", help=group_help)
    s.add_argument("--kind", choices=sorted(_CLOSURES), default="2")
    s.set_defaults(func=_cmd_closure)

    s = sub.add_parser("classify", help="decide membership in GR and DGR")
    s.add_argument("group", help=group_help)
    s.add_argument("--witness", action="store_true", help="also synthesize witness graphs")
    s.add_argument("--check-oracle", action="store_true", help="compare with the closure computations")
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("synth", help="synthesize a verified witness graph")
    s.add_argument("group", help=group_help)
    s.add_argument("--directed", action="store_true")
    s.add_argument("--min-colours", action="store_true", help="exhaustive merge search for the fewest colours")
    s.add_argument("--out", choices=("json", "dot"), default="json")
    s.set_defaults(func=_cmd_synth)

    s = sub.add_parser("verify", help="check Aut(graph) == group")
    s.add_argument("graph", help="graph JSON file or - for stdin")
    s.add_argument("group", help=group_help)
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("catalogue", help="catalogue entries with verification results")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=_cmd_catalogue)

    s = sub.add_parser("aut", help="automorphism group of a graph JSON file")
    s.add_argument("graph", help="graph JSON file or - for stdin")
    s.set_defaults(func=_cmd_aut)
    return p


def _fail(kind: str, reason: str, err: TextIO) -> None:
    err.write(json.dumps({"error": kind, "reason": " ".join(reason.split())}) + "\n")


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    saved = (perm.ELEMENT_CAP, autgrp.VERTEX_LIMIT)
    try:
        args = build_parser().parse_args(argv)
        if args.limit_elements is not None:
            perm.ELEMENT_CAP = args.limit_elements
        if args.limit_vertices is not None:
            autgrp.VERTEX_LIMIT = args.limit_vertices
        return args.func(args, out)
    except _Negative as exc:
        _fail("negative", str(exc), err)
        return EXIT_NEGATIVE
    except CapacityError as exc:
        _fail("capacity", str(exc), err)
        return EXIT_CAPACITY
    except (ParseError, DomainError) as exc:
        _fail("input", str(exc), err)
        return EXIT_INPUT
    finally:
        perm.ELEMENT_CAP, autgrp.VERTEX_LIMIT = saved


def main() -> None:
    sys.exit(run())
