"""Command line interface: every library operation as a subcommand.

Monomials travel as comma-separated index lists on flags and as JSON arrays
of integer arrays in files.  Output is deterministic; ``--format`` selects
plain text, JSON, or a computer-algebra-readable monomial list.  The
environment variable TSPREAD_MAX_CELLS (default 10^7) caps the size of any
enumeration-backed command so runaway parameters fail fast.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .monomial import (
    Ambient,
    DomainError,
    format_monomial,
    m2_monomial,
    parse_monomial,
)
from .enumeration import (
    card_A,
    card_M,
    enumerate_A,
    enumerate_M,
    rank_in_A,
    successor_in_A,
)
from .borel import TMonomialSet, borel_closure_degree, bshad, min_bshad_set, shadow_power
from .betti import (
    TIdeal,
    betti_table,
    corner_sequence,
    m2_generator_list,
    render_betti_table,
)
from .solver import CornerSpec, construct_ideal, max_corners
from .oracle import run_sweep

DEFAULT_MAX_CELLS = 10**7


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _max_cells() -> int:
    raw = os.environ.get("TSPREAD_MAX_CELLS", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_CELLS
    except ValueError:
        return DEFAULT_MAX_CELLS


def _check_cells(estimate: int, what: str) -> None:
    cap = _max_cells()
    if estimate > cap:
        raise DomainError(
            f"{what} would touch about {estimate} cells, over the cap {cap};"
            " raise TSPREAD_MAX_CELLS to proceed"
        )


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read JSON from {path}: {exc}") from exc


def _load_monomials(path: str) -> list[tuple[int, ...]]:
    data = _read_json(path)
    if not isinstance(data, list):
        raise DomainError(f"{path}: expected a JSON array of index arrays")
    return [tuple(int(i) for i in row) for row in data]


def _print_monomials(monomials, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([list(u) for u in monomials]))
    elif fmt == "m2":
        print(", ".join(m2_monomial(u) for u in monomials))
    else:
        for u in monomials:
            print(format_monomial(u))


def _mono_set(args, degree=None) -> TMonomialSet:
    amb = Ambient(args.n, args.t)
    gens = _load_monomials(args.gens)
    if not gens:
        raise DomainError("the generator file is empty")
    degs = {len(u) for u in gens}
    if len(degs) != 1:
        raise DomainError(f"generators must share one degree, got degrees {sorted(degs)}")
    return TMonomialSet.of(amb, degs.pop(), gens)


def _cmd_enumerate(args) -> int:
    if (args.k is None) != (args.l is None):
        raise DomainError("--k and --l must be given together")
    if args.k is not None:
        amb = Ambient(args.n, args.t)
        if args.d is not None and args.d != args.l:
            raise DomainError("--d must equal --l when enumerating a fixed-max slice")
        _check_cells(card_A(args.k, args.l) * args.l, "enumerate")
        _print_monomials(enumerate_A(args.k, args.l, amb), args.format)
        return 0
    if args.d is None:
        raise DomainError("--d is required (or give --k with --l)")
    _check_cells(card_M(args.n, args.d, args.t) * max(args.d, 1), "enumerate")
    _print_monomials(enumerate_M(args.n, args.d, args.t), args.format)
    return 0


def _cmd_rank(args) -> int:
    amb = Ambient(args.n, args.t)
    print(rank_in_A(parse_monomial(args.monomial), args.k, args.l, amb))
    return 0


def _cmd_successor(args) -> int:
    amb = Ambient(args.n, args.t)
    nxt = successor_in_A(parse_monomial(args.monomial), args.k, args.l, amb)
    if nxt is None:
        print("none")
    else:
        _print_monomials([nxt], args.format)
    return 0


def _cmd_closure(args) -> int:
    mset = _mono_set(args)
    _check_cells(card_M(args.n, mset.degree, args.t) * mset.degree, "closure")
    _print_monomials(borel_closure_degree(mset), args.format)
    return 0


def _cmd_shadow(args) -> int:
    mset = _mono_set(args)
    out_deg = mset.degree + args.s
    _check_cells(card_M(args.n, out_deg, args.t) * max(out_deg, 1), "shadow")
    _print_monomials(shadow_power(mset, args.s), args.format)
    return 0


def _cmd_bshad(args) -> int:
    mset = _mono_set(args)
    _check_cells(card_M(args.n, args.l2, args.t) * args.l2, "bshad")
    _print_monomials(bshad(mset, args.k2, args.l2), args.format)
    return 0


def _cmd_min_bshad(args) -> int:
    mset = _mono_set(args)
    _print_monomials([min_bshad_set(mset, args.k2, args.l2)], args.format)
    return 0


def _load_ideal(path: str) -> TIdeal:
    ideal = TIdeal.from_json(_read_json(path))
    ideal.validate()
    return ideal


def _cmd_betti(args) -> int:
    ideal = _load_ideal(args.ideal)
    if args.format == "m2":
        print(m2_generator_list(ideal))
        return 0
    table = betti_table(ideal)
    if args.format == "json":
        print(json.dumps(table.to_json()))
    else:
        print(render_betti_table(table))
    return 0


def _cmd_corners(args) -> int:
    data = corner_sequence(_load_ideal(args.ideal))
    if args.format == "json":
        print(json.dumps(data.to_json()))
    else:
        for (k, l), v in zip(data.corners, data.values):
            print(f"({k},{l}): {v}")
    return 0


def _cmd_solve(args) -> int:
    spec = CornerSpec.from_json(_read_json(args.spec))
    report = construct_ideal(spec)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json_text() + "\n")
    if report.feasible and args.emit_ideal:
        with open(args.emit_ideal, "w", encoding="utf-8") as fh:
            json.dump(report.ideal.to_json(), fh, indent=2)
            fh.write("\n")
    print(report.to_json_text())
    return 0 if report.feasible else 2


def _cmd_verify(args) -> int:
    result = run_sweep(args.suite)
    for name, count in result.sections.items():
        print(f"{name}: {count} checks")
    for line in result.mismatches[:20]:
        print(f"MISMATCH {line}", file=sys.stderr)
    status = "ok" if result.ok else f"{len(result.mismatches)} mismatches"
    print(f"{result.checks} checks in {result.elapsed:.1f}s: {status}")
    return 0 if result.ok else 1


def _cmd_max_corners(args) -> int:
    print(max_corners(args.n, args.t, args.l1))
    return 0


def _add_format(p, choices=("text", "json", "m2"), default="text"):
    p.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="tspread", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = cmd("enumerate", _cmd_enumerate, "list t-spread monomials slex-descending")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    _add_format(p)

    p = cmd("rank", _cmd_rank, "1-based slex rank inside a fixed-max slice")
    for flag in ("--n", "--t", "--k", "--l"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--monomial", required=True)

    p = cmd("successor", _cmd_successor, "next smaller member of the slice")
    for flag in ("--n", "--t", "--k", "--l"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--monomial", required=True)
    _add_format(p)

    p = cmd("closure", _cmd_closure, "strongly stable closure of a generator set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--gens", required=True, help="JSON array of index arrays, or -")
    _add_format(p)

    p = cmd("shadow", _cmd_shadow, "iterated t-shadow of a set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--gens", required=True)
    _add_format(p)

    p = cmd("bshad", _cmd_bshad, "Borel t-shadow at a corner")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--gens", required=True)
    _add_format(p)

    p = cmd("min-bshad", _cmd_min_bshad, "slex-least member of a Borel t-shadow")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--gens", required=True)
    _add_format(p)

    p = cmd("betti", _cmd_betti, "Betti table of an ideal file")
    p.add_argument("--ideal", required=True)
    _add_format(p, choices=("table", "json", "m2"), default="table")

    p = cmd("corners", _cmd_corners, "corner positions and values of an ideal")
    p.add_argument("--ideal", required=True)
    _add_format(p, choices=("text", "json"))

    p = cmd("solve", _cmd_solve, "decide and realize a corner spec")
    p.add_argument("--spec", required=True)
    p.add_argument("--report")
    p.add_argument("--emit-ideal", dest="emit_ideal")

    p = cmd("verify", _cmd_verify, "closed-form vs oracle sweep")
    p.add_argument("--suite", choices=("quick", "full"), default="quick")

    p = cmd("max-corners", _cmd_max_corners, "largest admissible corner count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--l1", type=int, required=True)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"tspread: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
