"""posetbalance command line."""
from __future__ import annotations

import argparse
import json
import sys

from . import figures
from .extensions import (ONE_HALF, balance_constant, count_extensions, format_ratio, pair_matrix,
                         parse_ratio, prob_before)
from .poset import (Poset, PosetError, boolean_lattice, from_json, from_permutation, ideal_lattice,
                    parse_permutation, partition_lattice, subspace_lattice, to_dot)
from .repro import TARGETS, run_target
from .search import MAX_SEARCH_N, conjecture_scan, min_delta_by_width
from .structure import certificates
from .tableaux import (Shape, almost_twin_case, cell_element, diagram, hook_lengths, parse_shape,
                       shape_poset_is_chain, shape_to_poset, syt_count)

DEFAULT_MAX_N = 24


class CliError(Exception):
    pass


def _shape_from(args) -> Shape | None:
    text = args.shape or args.skew
    if text is None:
        return None
    if args.skew and "/" not in args.skew:
        raise CliError("--skew needs outer/inner, e.g. 4,2,2,1/2,1")
    return parse_shape(text, args.shifted)


def load_poset(args) -> tuple[Poset, tuple[int, ...] | None]:
    """The poset named by the source flags, plus the permutation if one was given."""
    pi = None
    if args.input:
        with open(args.input) as fh:
            P = from_json(fh.read())
    elif args.perm:
        pi = parse_permutation(args.perm)
        P = from_permutation(pi)
    elif args.shape or args.skew:
        P = shape_to_poset(_shape_from(args))
    elif args.figure:
        if args.figure not in figures.FIGURES:
            raise CliError(f"unknown figure {args.figure!r}; choose from {', '.join(figures.figure_names())}")
        P = figures.figure_poset(args.figure)
        if "perm" in figures.FIGURES[args.figure]:
            pi = tuple(figures.FIGURES[args.figure]["perm"])
    else:
        raise CliError("give a poset with --input, --perm, --shape, --skew or --figure")
    if P.n > args.max_n:
        raise CliError(f"refusing: poset has {P.n} elements, above --max-n {args.max_n}")
    return P, pi


def _emit(args, data: dict, text: str) -> None:
    print(json.dumps(data, indent=2) if args.json else text)


def cmd_count(args) -> int:
    P, _ = load_poset(args)
    e = count_extensions(P)
    _emit(args, {"n": P.n, "e": e}, str(e))
    return 0


def cmd_matrix(args) -> int:
    P, _ = load_poset(args)
    stats = pair_matrix(P, method=args.method)
    _emit(args, {"n": P.n, "e": stats.total, "matrix": [list(r) for r in stats.pair_counts]},
          stats.to_csv().rstrip("\n"))
    return 0


def cmd_balance(args) -> int:
    P, _ = load_poset(args)
    stats = pair_matrix(P)
    report = balance_constant(P)
    alpha = parse_ratio(args.alpha) if args.alpha else None
    if alpha is not None and not 0 <= alpha <= ONE_HALF:
        raise CliError("--alpha must lie in [0, 1/2]")
    data = {"n": P.n, "e": stats.total, "delta": format_ratio(report.delta),
            "witness": list(report.witness) if report.witness else None}
    lines = [f"e(P) = {stats.total}", f"delta = {format_ratio(report.delta)}"]
    if report.witness:
        x, y = report.witness
        lines.append(f"witness = ({P.label(x)}, {P.label(y)})")
    if alpha is not None:
        pairs = []
        for x in range(1, P.n + 1):
            for y in range(x + 1, P.n + 1):
                p = prob_before(P, x, y)
                if alpha <= p <= 1 - alpha:
                    pairs.append((x, y, p))
        data["alpha"] = format_ratio(alpha)
        data["alpha_balanced_pairs"] = [{"pair": [x, y], "prob": format_ratio(p)} for x, y, p in pairs]
        lines.append(f"{len(pairs)} pairs are {format_ratio(alpha)}-balanced")
        lines += [f"  ({P.label(x)}, {P.label(y)})  P = {format_ratio(p)}" for x, y, p in pairs]
    _emit(args, data, "\n".join(lines))
    return 0


def _certificate_holds(P: Poset, report, delta) -> bool:
    # an almost twin pair promises a 1/3-balanced pair somewhere in P, not itself
    if report.kind == "almost_twin":
        return delta >= report.bound
    p = prob_before(P, *report.pair)
    return report.bound <= p <= 1 - report.bound


def cmd_detect(args) -> int:
    P, pi = load_poset(args)
    reports = certificates(P, pi)
    data = {"n": P.n, "certificates": [json.loads(r.to_json()) for r in reports]}
    if args.verify:
        delta = balance_constant(P).delta if reports else None
        bad = [r for r in reports if not _certificate_holds(P, r, delta)]
        data["verified"] = not bad
    lines = [f"{r.kind:24s} ({P.label(r.pair[0])}, {P.label(r.pair[1])})  bound {format_ratio(r.bound)}"
             for r in reports] or ["no certificates found"]
    if args.verify:
        lines.append("all certified pairs verified" if not bad else f"{len(bad)} certificates FAILED")
    _emit(args, data, "\n".join(lines))
    return 0 if not args.verify or not bad else 1


def cmd_shape(args) -> int:
    shape = _shape_from(args)
    if shape is None:
        raise CliError("shape needs --shape or --skew")
    P = shape_to_poset(shape)
    if P.n > args.max_n:
        raise CliError(f"refusing: shape has {P.n} cells, above --max-n {args.max_n}")
    data: dict = {"shape": str(shape), "cells": P.n}
    lines = [diagram(shape)]
    if not shape.is_skew and not shape.shifted:
        hooks = hook_lengths(shape)
        data["hooks"] = hooks
        data["syt"] = syt_count(shape)
        lines.append("hooks:")
        lines += ["  " + " ".join(map(str, row)) for row in hooks]
        lines.append(f"SYT count (hook formula) = {data['syt']}")
    else:
        data["syt"] = count_extensions(P)
        lines.append(f"SYT count (extensions) = {data['syt']}")
    if shape_poset_is_chain(shape):
        data["pair"] = None
        lines.append("the cell poset is a chain")
    else:
        case, (a, b) = almost_twin_case(shape)
        p = prob_before(P, cell_element(shape, a), cell_element(shape, b))
        data.update({"case": case, "pair": [list(a), list(b)], "prob": format_ratio(p)})
        lines.append(f"almost twin pair {a}, {b} via {case}; P = {format_ratio(p)}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_lattice(args) -> int:
    if args.kind == "boolean":
        L = boolean_lattice(args.n)
        pair = figures.LATTICE_PAIRS["boolean"] if args.n >= 2 else None
    elif args.kind == "partition":
        L = partition_lattice(args.n)
        pair = figures.LATTICE_PAIRS["partition"](args.n) if args.n >= 3 else None
    elif args.kind == "subspace":
        L = subspace_lattice(args.n, args.q)
        pair = figures.LATTICE_PAIRS["subspace"](args.n) if args.n >= 2 else None
    else:
        P, _ = load_poset(args)
        L = ideal_lattice(P)
        pair = None
    if L.n > args.max_lattice:
        raise CliError(f"refusing: lattice has {L.n} elements, above --max-lattice {args.max_lattice}")
    e = count_extensions(L)
    report = balance_constant(L)
    data = {"kind": args.kind, "size": L.n, "e": e, "delta": format_ratio(report.delta)}
    lines = [f"{args.kind} lattice with {L.n} elements", f"e = {e}", f"delta = {format_ratio(report.delta)}"]
    status = 0
    if pair:
        p = prob_before(L, L.index_of(pair[0]), L.index_of(pair[1]))
        data["pair"] = list(pair)
        data["prob"] = format_ratio(p)
        lines.append(f"P({pair[0]} before {pair[1]}) = {format_ratio(p)}")
        status = 0 if p == ONE_HALF else 1
    _emit(args, data, "\n".join(lines))
    return status


def cmd_search(args) -> int:
    if args.n > args.max_n:
        raise CliError(f"refusing: n={args.n} is above --max-n {args.max_n}")
    if args.action == "scan":
        report = conjecture_scan(args.n, args.records, args.checkpoint, max_n=args.max_n)
        data = report.summary()
        lines = [f"n = {report.n}: {report.total} classes, {report.chains} chain(s)",
                 f"min delta = {data['min_delta']} at {data['min_delta_witness']}",
                 f"min delta at width >= 3 = {data['min_delta_width3']}",
                 f"classes below 1/3: {len(report.below_one_third)}",
                 f"classes at 1/3: {len(report.at_one_third)}, not T-sums: {len(report.one_third_not_T_sums)}"]
        if not args.json:
            data = {k: v for k, v in data.items() if k != "at_one_third"}
        _emit(args, data, "\n".join(lines))
        return 0 if not report.below_one_third and not report.one_third_not_T_sums else 1
    delta, cp = min_delta_by_width(args.n, args.min_width, max_n=args.max_n)
    data = {"n": args.n, "min_width": args.min_width,
            "min_delta": None if delta is None else format_ratio(delta),
            "witness": None if cp is None else cp.key,
            "covers": None if cp is None else [list(c) for c in cp.to_poset().covers]}
    text = "no non-chain class" if delta is None else \
        f"min delta = {format_ratio(delta)} at {cp.key} covers {data['covers']}"
    _emit(args, data, text)
    return 0


def cmd_repro(args) -> int:
    results = run_target(args.target)
    ok = all(c.ok for checks in results.values() for c in checks)
    data = {"ok": ok, "targets": [{"name": name, "ok": all(c.ok for c in checks),
                                   "checks": [c.to_dict() for c in checks]}
                                  for name, checks in results.items()]}
    lines = []
    for name, checks in results.items():
        lines.append(f"[{'PASS' if all(c.ok for c in checks) else 'FAIL'}] {name}")
        for c in checks:
            d = c.to_dict()
            mark = "ok " if c.ok else "BAD"
            lines.append(f"    {mark} {d['check']}: computed {d['computed']}"
                         + ("" if c.ok else f", expected {d['expected']}"))
    _emit(args, data, "\n".join(lines))
    return 0 if ok else 1


def cmd_export_dot(args) -> int:
    P, _ = load_poset(args)
    text = to_dot(P, args.name)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--input", metavar="FILE", help='poset JSON: {"n": 3, "covers": [[1, 2]]}')
    source.add_argument("--perm", help="permutation in one-line notation, e.g. 41325")
    source.add_argument("--shape", help="Young diagram, e.g. 4,4,2")
    source.add_argument("--skew", help="skew diagram outer/inner, e.g. 4,2,2,1/2,1")
    source.add_argument("--shifted", action="store_true", help="read --shape/--skew as shifted")
    source.add_argument("--figure", help="built-in example: " + ", ".join(figures.figure_names()))
    source.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help=f"refuse posets with more elements (default {DEFAULT_MAX_N})")

    parser = argparse.ArgumentParser(prog="posetbalance", description="Exact balance constants of finite posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common, source], help="number of linear extensions")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("matrix", parents=[common, source], help="e(P + xy) for every ordered pair, as CSV")
    p.add_argument("--method", choices=["sweep", "augment"], default="sweep")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("balance", parents=[common, source], help="delta(P) and alpha-balanced pairs")
    p.add_argument("--alpha", help="list pairs with alpha <= P(x<y) <= 1 - alpha, e.g. 1/3")
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("detect", parents=[common, source], help="twin, almost twin, automorphism and inversion certificates")
    p.add_argument("--verify", action="store_true", help="check each certified pair against its bound")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("shape", parents=[common, source], help="hooks, SYT count and almost twin cells of a diagram")
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("lattice", parents=[common, source], help="boolean, partition, subspace or ideal lattice")
    p.add_argument("kind", choices=["boolean", "partition", "subspace", "ideals"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--max-lattice", type=int, default=40, help="refuse larger lattices (default 40)")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("search", parents=[common], help="exhaustive scan of small posets")
    p.add_argument("action", choices=["scan", "min-delta"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-width", type=int, default=3)
    p.add_argument("--records", metavar="FILE", help="append one JSON line per class")
    p.add_argument("--checkpoint", metavar="FILE", help="resume file listing finished classes")
    p.add_argument("--max-n", type=int, default=MAX_SEARCH_N, help=f"size cap (default {MAX_SEARCH_N})")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("repro", parents=[common], help="recompute a built-in example and compare")
    p.add_argument("target", choices=list(TARGETS) + ["all"])
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("export-dot", parents=[source], help="Hasse diagram in DOT")
    p.add_argument("--name", default="P")
    p.add_argument("--output", "-o", metavar="FILE")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, PosetError, ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"posetbalance: error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
