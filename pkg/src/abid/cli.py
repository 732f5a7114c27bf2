"""Command-line interface: ``abid <command> ...``.

Exit status is 0 on success, 1 when a requested verification fails and 2 on
usage errors. All output is deterministic for a given command line.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .abelian import enumerate_ideals, ideal_to_json
from .dynkin import aut_pi, aut_pihat, center
from .poset import graph_automorphisms, hasse, hasse_to_dot, hasse_to_json, poset_automorphisms
from .rootsys import FAMILIES, root_system, valid_type
from .verify import ALL, run_suite
from .young import (
    OutOfStaircase,
    partitions_in_staircase,
    sigma_orbit,
    verify_dihedral,
)

SCHEMA = "abid/1"
DEFAULT_MAX_RANK = 7

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _word(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"


def _root_system(args):
    family = args.family.upper()
    if not valid_type(family, args.rank):
        raise UsageError(f"{family}{args.rank} is not an irreducible type (A n>=1, B n>=2, C n>=2, D n>=4, E 6-8, F4, G2)")
    return root_system(family, args.rank)


def _default_max_rank() -> int:
    raw = os.environ.get("ABID_MAX_RANK")
    if raw is None:
        return DEFAULT_MAX_RANK
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ABID_MAX_RANK={raw!r} is not an integer") from None


def cmd_roots(args, out) -> int:
    rs = _root_system(args)
    if args.format == "json":
        out.write(_dump({"schema": SCHEMA, **rs.to_json()}))
        return EXIT_OK
    out.write(f"{rs.name}: {len(rs.coeffs)} positive roots, theta={list(rs.theta.coeffs)}, h_dual={rs.h_dual}\n")
    out.write(f"marks={list(rs.marks)} comarks={list(rs.comarks)}\n")
    for r in rs.positive_roots:
        out.write(f"{' '.join(map(str, r.coeffs))}  {r.length_class}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    rs = _root_system(args)
    ideals = enumerate_ideals(rs)
    if args.format == "json":
        out.write(
            _dump(
                {
                    "schema": SCHEMA,
                    "type": rs.name,
                    "count": len(ideals),
                    "ideals": [ideal_to_json(rs, I) for I in ideals],
                }
            )
        )
        return EXIT_OK
    out.write(f"{rs.name}: {len(ideals)} abelian ideals\n")
    for k, I in enumerate(ideals):
        gens = "; ".join(" ".join(map(str, rs.coeffs[a])) for a in I.antichain) or "-"
        out.write(f"{k:4d}  dim={I.dim:<3d} word={_word(I.word):<30s} antichain={gens}\n")
    return EXIT_OK


def cmd_hasse(args, out) -> int:
    rs = _root_system(args)
    h = hasse(rs)
    if args.format == "dot":
        out.write(hasse_to_dot(h))
    elif args.format == "json":
        out.write(_dump(hasse_to_json(h)))
    else:
        out.write(f"{rs.name}: {len(h.nodes)} nodes, {len(h.edges)} edges\n")
        for lo, hi, lab in h.edges:
            out.write(f"{_word(h.nodes[lo].word)} --{lab}--> {_word(h.nodes[hi].word)}\n")
    return EXIT_OK


def cmd_aut(args, out) -> int:
    rs = _root_system(args)
    obj = args.object
    if obj == "poset":
        elems = [list(p) for p in poset_automorphisms(hasse(rs))]
    elif obj == "graph":
        elems = [list(p) for p in graph_automorphisms(hasse(rs))]
    elif obj == "dynkin":
        elems = [list(f.finite) for f in aut_pi(rs)]
    elif obj == "extended":
        elems = [list(f.images) for f in aut_pihat(rs)]
    else:
        elems = [str(z) for z in center(rs)]
    if args.format == "json":
        out.write(_dump({"schema": SCHEMA, "type": rs.name, "object": obj, "order": len(elems), "elements": elems}))
    else:
        out.write(f"{rs.name} {obj}: order {len(elems)}\n")
        for e in elems:
            out.write(f"  {e}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    max_rank = args.max_rank if args.max_rank is not None else _default_max_rank()
    if max_rank < 1:
        raise UsageError("--max-rank must be positive")
    rows = run_suite(args.suite, max_rank)
    ok = all(r["pass"] for r in rows)
    if args.format == "json":
        out.write(
            _dump(
                {
                    "schema": SCHEMA,
                    "suite": args.suite,
                    "max_rank": max_rank,
                    "pass": ok,
                    "failures": sum(1 for r in rows if not r["pass"]),
                    "rows": rows,
                }
            )
        )
    else:
        for r in rows:
            mark = "PASS" if r["pass"] else "FAIL"
            out.write(f"{mark}  {r.get('suite', args.suite):10s} {r['case']:5s} {r['check']}")
            if not r["pass"]:
                out.write(f"  expected={r['expected']!r} computed={r['computed']!r}")
            out.write("\n")
        out.write(f"{'pass' if ok else 'FAIL'}: {len(rows)} checks\n")
    return EXIT_OK if ok else EXIT_FAILED


def _parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot read partition {text!r}; expected e.g. 2,1") from None


def cmd_young(args, out) -> int:
    n = args.n
    if n < 2:
        raise UsageError("--n must be at least 2")
    if args.verify:
        if n < 3:
            raise UsageError("the dihedral check needs --n >= 3")
        rows = list(verify_dihedral(n))
        ok = all(r["pass"] for r in rows)
        out.write(_dump({"schema": SCHEMA, "n": n, "pass": ok, "rows": rows}))
        return EXIT_OK if ok else EXIT_FAILED
    if args.orbit is not None:
        lam = _parse_partition(args.orbit)
        try:
            orbit = sigma_orbit(n, lam)
        except (OutOfStaircase, ValueError) as exc:
            raise UsageError(str(exc)) from None
        for p in orbit:
            out.write(f"({','.join(map(str, p))})\n")
        return EXIT_OK
    for p in partitions_in_staircase(n):
        out.write(f"({','.join(map(str, p))})\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abid", description="Abelian ideals of Borel subalgebras and their symmetries.")
    parser.add_argument("--version", action="version", version=f"abid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def typed(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, choices=FAMILIES + tuple(f.lower() for f in FAMILIES))
        p.add_argument("--rank", required=True, type=int)

    p = sub.add_parser("roots", help="positive roots, highest root and marks")
    typed(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("enumerate", help="list all abelian ideals")
    typed(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hasse", help="labeled Hasse diagram")
    typed(p)
    p.add_argument("--format", choices=("dot", "json", "text"), default="text")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("aut", help="automorphism groups")
    typed(p)
    p.add_argument("--object", choices=("poset", "graph", "dynkin", "extended", "center"), required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + ALL, default="all")
    p.add_argument("--max-rank", type=int, default=None, help=f"default {DEFAULT_MAX_RANK}, or $ABID_MAX_RANK")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("young", help="staircase partitions and the sliding move")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--orbit", metavar="PARTS", help="comma-separated parts, e.g. 2,1")
    g.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_young)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"abid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
