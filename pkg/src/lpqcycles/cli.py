"""Command-line front end.

Subcommands: lambda (span of a product of cycles), construct (build a
certificate labeling), verify (validate a labeling document), lemmas (run
the local diagonality checks), pattern (search cyclic patterns), decompose
(two-generator semigroup membership), descent (row-reduction terminal).

Human-readable text goes to standard output; --out writes the JSON
documents.  Exit codes: 0 success / valid / holds, 1 invalid labeling or
counterexample found, 2 usage or range error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from typing import IO

from .graphs import ProductKind, torus
from .labelings import (
    ConstraintParams,
    Labeling,
    labeling_document,
    read_labeling,
    validate,
)
from .lambda_numbers import (
    descent_terminal,
    lambda_cartesian,
    lambda_strong,
    verify_lemma_cartesian_local,
    verify_lemma_strong_local,
)
from .patterns import (
    concatenated_strong_pattern,
    conditions_for,
    exists_cycle_pattern,
    l21_cycle_pattern,
    lift_diagonal,
    semigroup_decompose,
)
from .solver import BudgetExhausted, SolveBudget


def _budget(args: argparse.Namespace) -> SolveBudget:
    return SolveBudget(max_nodes=args.budget_nodes)


def _grid_text(f: Labeling) -> str:
    """Color matrix with row i shifted right by i cells, so the constant
    anti-diagonals of a diagonal labeling line up as columns."""

    grid = f.color_grid()
    width = len(str(int(grid.max()))) + 1
    lines = []
    for i, row in enumerate(grid):
        lines.append(" " * (i * width) + "".join(str(int(c)).rjust(width) for c in row))
    return "\n".join(lines)


def _write_doc(path: str, doc: object) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(doc, fp, indent=1)
        fp.write("\n")


def _print_labeling(f: Labeling, params: ConstraintParams, fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        json.dump(labeling_document(f, params), out, indent=1)
        out.write("\n")
    else:
        out.write(_grid_text(f) + "\n")


def _parse_product(name: str) -> ProductKind:
    return ProductKind(name)


def _construction(kind: ProductKind, m: int, n: int):
    """The certificate labeling the dichotomies provide for C_m x C_n,
    with its base pattern, or a reason there is none."""

    d = gcd(m, n)
    if kind is ProductKind.CARTESIAN:
        if d < 3:
            return None, None, f"no lifted construction: gcd({m}, {n}) = {d} < 3"
        pat = l21_cycle_pattern(d)
    else:
        if m % 7 == 0 and n % 7 == 0:
            pat = concatenated_strong_pattern(7)
        elif semigroup_decompose(d, 7, 8) is not None:
            pat = concatenated_strong_pattern(d)
        else:
            return None, None, (
                f"no lifted construction: gcd({m}, {n}) = {d} "
                "is not a sum of 7s and 8s"
            )
    return lift_diagonal(pat, kind, m, n), pat, None


def _cmd_lambda(args: argparse.Namespace) -> int:
    kind = _parse_product(args.product)
    fn = lambda_cartesian if kind is ProductKind.CARTESIAN else lambda_strong
    res = fn(args.m, args.n, solve=args.solve, budget=_budget(args))
    if res.is_exact:
        print(f"Exact {res.lo}")
    else:
        print(f"Interval {res.lo} {res.hi}")
    print(f"certificate: {res.certificate.value}")
    print(f"note: {res.note}")
    if args.out:
        if res.witness is not None:
            _write_doc(args.out, labeling_document(res.witness))
        else:
            _write_doc(
                args.out,
                {
                    "check": f"lambda-{kind.value}-{args.m}x{args.n}-in-{res.lo}..{res.hi}",
                    "holds": True,
                    "count": 0,
                    "witness": None,
                },
            )
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    kind = _parse_product(args.product)
    if args.m < 3 or args.n < 3:
        raise ValueError("cycle sizes must be at least 3")
    f, pat, why = _construction(kind, args.m, args.n)
    if f is None:
        raise ValueError(why)
    if args.max_span is not None and f.k_budget > args.max_span:
        raise ValueError(f"construction needs span {f.k_budget} > limit {args.max_span}")
    bad = validate(torus(kind, args.m, args.n), f)
    if bad:
        print(f"construction failed its own validation: {bad[0]}", file=sys.stderr)
        return 1
    _print_labeling(f, ConstraintParams(), args.format, sys.stdout)
    if args.out:
        _write_doc(args.out, labeling_document(f, pattern=pat.colors))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    with open(args.file, encoding="utf-8") as fp:
        g, f, params = read_labeling(fp)
    bad = validate(g, f, params)
    if not bad:
        print(f"valid: {g.n_vertices} vertices, budget {f.k_budget}, no violations")
        return 0
    for v in bad:
        u, w = v.pair
        print(
            f"{v.kind.value}: vertices {u} and {w} have colors {v.labels[0]} "
            f"and {v.labels[1]}, need gap >= {v.required}"
        )
    print(f"invalid: {len(bad)} violated constraints")
    return 1


def _cmd_lemmas(args: argparse.Namespace) -> int:
    runs = []
    if args.which in ("cartesian-local", "all"):
        runs.append(
            verify_lemma_cartesian_local(
                span=args.span, workers=args.parallel, budget=_budget(args)
            )
        )
    if args.which in ("strong-local", "all"):
        runs.append(
            verify_lemma_strong_local(
                span=args.span, workers=args.parallel, budget=_budget(args)
            )
        )
    for rep in runs:
        print(f"{rep.check}: holds={str(rep.holds).lower()} labelings={rep.count}")
    if args.out:
        docs = [rep.to_document() for rep in runs]
        _write_doc(args.out, docs[0] if len(docs) == 1 else docs)
    return 0 if all(rep.holds for rep in runs) else 1


def _cmd_pattern(args: argparse.Namespace) -> int:
    if args.conditions:
        conds = tuple(int(c) for c in args.conditions.split(","))
    else:
        conds = conditions_for(_parse_product(args.product))
    span = args.span if args.span is not None else (max(conds) * 2)

    if args.feasible_up_to is not None:
        feasible = []
        for d in range(3, args.feasible_up_to + 1):
            if exists_cycle_pattern(d, span, conds) is not None:
                feasible.append(d)
        print("feasible lengths:", " ".join(map(str, feasible)) if feasible else "none")
        if args.out:
            _write_doc(
                args.out,
                {
                    "check": f"pattern-span-{span}-feasible-lengths",
                    "holds": bool(feasible),
                    "count": len(feasible),
                    "witness": feasible,
                },
            )
        return 0

    if args.length is None:
        raise ValueError("pattern needs --length (or --feasible-up-to)")
    pat = exists_cycle_pattern(args.length, span, conds)
    if pat is None:
        print(f"no pattern of length {args.length} at span {span} for {conds}")
        return 1
    print(" ".join(map(str, pat.colors)))
    if args.out:
        _write_doc(
            args.out,
            {
                "check": f"pattern-length-{args.length}-span-{span}",
                "holds": True,
                "count": 1,
                "witness": list(pat.colors),
            },
        )
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    try:
        a_gen, b_gen = (int(x) for x in args.gens.split(","))
    except ValueError:
        raise ValueError("--gens takes two comma-separated integers") from None
    dec = semigroup_decompose(args.target, a_gen, b_gen)
    if dec is None:
        print(f"{args.target} is not representable over {{{a_gen}, {b_gen}}}")
        return 1
    print(f"{dec.target} = {dec.a}*{dec.m} + {dec.b}*{dec.n}")
    return 0


def _cmd_descent(args: argparse.Namespace) -> int:
    term = descent_terminal(args.m, args.n)
    print(" -> ".join(f"({a},{b})" for a, b in term.trace))
    print(f"terminal: {term.kind.value} rows={term.rows} cols={term.cols}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lpqcycles",
        description="Exact L(p,q)-labelings of oriented cycles and their products.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, product: bool = True) -> None:
        if product:
            p.add_argument("--product", choices=["cartesian", "strong"], required=True)
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--budget-nodes", type=int, default=10**9)
        p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("lambda", help="span of a product of two oriented cycles")
    add_common(p)
    p.add_argument("--solve", action="store_true",
                   help="run the exact solver below the dichotomy range")
    p.set_defaults(fn=_cmd_lambda)

    p = sub.add_parser("construct", help="build and print a certificate labeling")
    add_common(p)
    p.add_argument("--max-span", type=int, default=None)
    p.add_argument("--format", choices=["json", "grid"], default="grid")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="validate a labeling document")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("lemmas", help="run the local diagonality checks")
    p.add_argument("--which", choices=["cartesian-local", "strong-local", "all"],
                   default="all")
    p.add_argument("--span", type=int, default=None)
    p.add_argument("--parallel", type=int, default=1, metavar="WORKERS")
    p.add_argument("--budget-nodes", type=int, default=10**9)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_lemmas)

    p = sub.add_parser("pattern", help="search cyclic color patterns")
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--span", type=int, default=None)
    p.add_argument("--conditions", help="comma-separated gaps, e.g. 2,2,1,1")
    p.add_argument("--product", choices=["cartesian", "strong"], default="cartesian",
                   help="defaults --conditions to this product's vector")
    p.add_argument("--feasible-up-to", type=int, default=None, metavar="D",
                   help="scan lengths 3..D instead of one --length")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_pattern)

    p = sub.add_parser("decompose", help="two-generator semigroup decomposition")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--gens", default="7,8", help="comma-separated generators")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("descent", help="row-reduction descent terminal")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_descent)

    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
