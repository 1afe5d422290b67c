"""Command line entry point: ``friezeroots <command> ...``.

Exit status is 0 on success, 2 on invalid input and 3 when an internal
invariant check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .affine3 import (
    affine_root_set,
    crystallographic_check,
    determinant_classes,
    is_simplicial_affine,
)
from .frieze import frieze_pattern, is_dense
from .quiddity import (
    canonical_rotation,
    cycle_to_triangulation,
    enumerate_cycles,
    is_quiddity_cycle,
)
from .rank2roots import positive_roots

EXIT_INVALID = 2
EXIT_INVARIANT = 3


class InputError(Exception):
    pass


def parse_cycle(text: str, min_len: int = 3) -> tuple[int, ...]:
    try:
        c = tuple(int(s) for s in text.replace(" ", "").strip("()").split(",") if s)
    except ValueError:
        raise InputError(f"cannot parse cycle {text!r}")
    if not is_quiddity_cycle(c):
        raise InputError(f"{c} is not a quiddity cycle")
    if len(c) < min_len:
        raise InputError(f"need a cycle of length >= {min_len}")
    return c


def _chamber(c, i: int) -> int:
    if not 1 <= i <= len(c):
        raise InputError(f"chamber {i} out of range 1..{len(c)}")
    return i


def _frac(x: Fraction) -> str:
    return str(x)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def triangulation_json(c) -> dict:
    t = cycle_to_triangulation(c)
    return {"n": t.n, "triangles": [list(tri) for tri in t.triangles]}


def cmd_enumerate(args, out) -> None:
    if args.length < 2:
        raise InputError("--length must be >= 2")
    cycles = enumerate_cycles(args.length)
    if args.dense:
        if args.length < 3:
            cycles = []
        else:
            cycles = [c for c in cycles if is_dense(c)]
    if args.up_to_rotation:
        cycles = sorted({canonical_rotation(c) for c in cycles})
    for c in cycles:
        out.write(dumps({"c": list(c)}) + "\n")


def cmd_frieze(args, out) -> None:
    table = frieze_pattern(parse_cycle(args.cycle))
    if args.format == "text":
        out.write(table.render_text(args.periods))
    else:
        out.write(dumps(table.to_json()) + "\n")


def cmd_triangulate(args, out) -> None:
    out.write(dumps(triangulation_json(parse_cycle(args.cycle))) + "\n")


def cmd_roots(args, out) -> None:
    c = parse_cycle(args.cycle)
    out.write(dumps(positive_roots(c, _chamber(c, args.chamber)).to_json()) + "\n")


def cmd_affine(args, out) -> None:
    c = parse_cycle(args.cycle)
    i = _chamber(c, args.chamber)
    verdict = is_simplicial_affine(c, i)
    report = {
        "c": list(c),
        "chamber": i,
        "simplicial": verdict.simplicial,
        "cells": verdict.cells,
        "detClasses": None,
        "crystallographic": None,
        "dBound": None,
    }
    if verdict.witness is not None:
        report["witness"] = verdict.witness.to_json()
    if args.check in ("det", "ca") and not verdict.simplicial:
        raise InputError(f"{c} does not give a simplicial arrangement")
    if args.check == "det":
        report["detClasses"] = {_frac(k): v for k, v in determinant_classes(c, i).items()}
    elif args.check == "ca":
        ca = crystallographic_check(c, i, args.d_bound)
        report["crystallographic"] = ca.crystallographic
        report["dBound"] = ca.d_bound
        if ca.witness is not None:
            report["witness"] = {
                **ca.witness.cell.to_json(),
                "root": list(ca.witness.root),
                "coordinates": [_frac(x) for x in ca.witness.coordinates],
            }
    out.write(dumps(report) + "\n")
    if args.plot:
        from .plotting import plot_arrangement, save_figure

        save_figure(plot_arrangement(c, i), args.plot)


def cmd_render(args, out) -> None:
    from .plotting import plot_arrangement, plot_triangulation, save_figure

    c = parse_cycle(args.cycle)
    if args.what == "triangulation":
        ax = plot_triangulation(c)
    else:
        affine_root_set(c, _chamber(c, args.chamber))
        ax = plot_arrangement(c, args.chamber)
    path = save_figure(ax, args.output)
    out.write(dumps({"c": list(c), "what": args.what, "path": str(path)}) + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="friezeroots", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="list quiddity cycles of one length as JSON lines")
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--dense", action="store_true", help="keep only dense cycles")
    s.add_argument("--up-to-rotation", action="store_true", help="one minimal rotation per class")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("frieze", help="frieze pattern of a cycle")
    s.add_argument("--cycle", required=True, help='comma separated, e.g. "3,1,4,1,3,1,4,1"')
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--periods", type=int, default=2)
    s.set_defaults(func=cmd_frieze)

    s = sub.add_parser("triangulate", help="triangulation of a cycle as JSON")
    s.add_argument("--cycle", required=True)
    s.set_defaults(func=cmd_triangulate)

    s = sub.add_parser("roots", help="rank-two positive roots at a chamber")
    s.add_argument("--cycle", required=True)
    s.add_argument("--chamber", type=int, default=1)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("affine", help="analyse the affine arrangement of a cycle")
    s.add_argument("--cycle", required=True)
    s.add_argument("--chamber", type=int, default=1)
    s.add_argument("--check", choices=["simplicial", "count", "det", "ca"], default="simplicial")
    s.add_argument("--d-bound", type=int, default=3)
    s.add_argument("--plot", type=Path, help="also write an arrangement figure here")
    s.set_defaults(func=cmd_affine)

    s = sub.add_parser("render", help="draw a triangulation or an arrangement")
    s.add_argument("--what", choices=["triangulation", "arrangement"], required=True)
    s.add_argument("--cycle", required=True)
    s.add_argument("--chamber", type=int, default=1)
    s.add_argument("-o", "--output", type=Path, required=True)
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except AssertionError as e:
        print(f"invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    return 0


if __name__ == "__main__":
    sys.exit(main())
