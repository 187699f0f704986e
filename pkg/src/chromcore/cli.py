"""Command-line entry point.

    chromcore chi <graph>
    chromcore core <graph> [--all] [--oracle]
    chromcore verify <claim-id|all> [--seed N] [--limit key=value ...] [--timing]
    chromcore gen <family-spec>

A graph is a path to an edge-list file, a family token such as ``cycle:7``
or ``jaco:10,1,0``, or a graph6 string. Output is JSON (graph6 for ``gen``).
Exit codes: 0 success, 1 counterexample found, 2 input error, 3 capability error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from .claims import DEFAULT_LIMITS, claim_ids, verify_claim
from .coloring import chromatic_number
from .corefinder import enumerate_cores, find_core, oracle_core
from .errors import CapabilityError, InputError
from .families import from_token
from .graph import Graph
from .io import emit_graph6, parse_edge_list, parse_graph6

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2
EXIT_CAPABILITY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def load_graph(text: str) -> Graph:
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if ":" in text:
        return from_token(text)
    return parse_graph6(text)


def _parse_limits(pairs: list[str]) -> dict:
    limits = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or key not in DEFAULT_LIMITS:
            raise InputError(f"--limit expects key=value with key in {sorted(DEFAULT_LIMITS)}, got {pair!r}")
        try:
            limits[key] = int(value)
        except ValueError:
            raise InputError(f"limit {key} must be an integer, got {value!r}") from None
    return limits


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _cmd_chi(args) -> int:
    G = load_graph(args.graph)
    res = chromatic_number(G)
    _emit({"graph6": emit_graph6(G), "chi": res.chi, "coloring": res.witness.to_json(), "clique": list(res.clique)})
    return EXIT_OK


def _cmd_core(args) -> int:
    G = load_graph(args.graph)
    if args.oracle:
        cert = oracle_core(G)
        certs = [replace(cert, vertices=s) for s in cert.argmin] if args.all else [cert]
    elif args.all:
        certs = enumerate_cores(G)
    else:
        certs = [find_core(G)]
    payload = [c.to_json() for c in certs]
    _emit(payload if args.all else payload[0])
    return EXIT_OK


def _cmd_verify(args) -> int:
    limits = _parse_limits(args.limit)
    ids = claim_ids() if args.claim == "all" else [args.claim]
    reports = [verify_claim(cid, args.seed, limits) for cid in ids]
    out = [r.to_json(timing=args.timing) for r in reports]
    _emit(out if args.claim == "all" else out[0])
    return EXIT_COUNTEREXAMPLE if any(r.counterexamples for r in reports) else EXIT_OK


def _cmd_gen(args) -> int:
    sys.stdout.write(emit_graph6(from_token(args.spec)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromcore", description="Exact chromatic core subgraphs and claim verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chi", help="chromatic number with colouring and clique witness")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("core", help="chromatic core certificate")
    p.add_argument("graph")
    p.add_argument("--all", action="store_true", help="every minimum vertex set")
    p.add_argument("--oracle", action="store_true", help="use the exhaustive subset oracle")
    p.set_defaults(func=_cmd_core)

    p = sub.add_parser("verify", help="run a registered claim, or all of them")
    p.add_argument("claim")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--timing", action="store_true", help="report runtime_ms (output is then not byte-stable)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="graph6 of a family member")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        if exc.partial:
            print(json.dumps(exc.partial), file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
