"""Command-line interface: ``galois-param <subcommand> ...``.

Exit codes: 0 for established or empirically supported verdicts (and for
successful non-verdict commands), 2 for refuted, 3 for inconclusive or an
operation error, 64 for a command-line parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import criteria as C
from .algebra import RatPoly, to_rational
from .extensions import (
    ExtensionDescriptor,
    builder_cyclic_cyclotomic,
    builder_manual,
    builder_morse,
    builder_quadratic_sqrt,
    builder_trinomial,
    fixture_names,
    load_fixture,
    specialize,
)
from .groups import is_g_complete, perm_order
from .numbertheory import prime_divisor_census

EXIT_OK, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 2, 3, 64

EXIT_BY_STATUS = {
    C.ESTABLISHED: EXIT_OK,
    C.EMPIRICAL: EXIT_OK,
    C.REFUTED: EXIT_REFUTED,
    C.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Argument helpers


def parse_poly(text: str) -> RatPoly:
    """Comma-separated coefficients, lowest degree first: ``"-2,0,1"`` is T^2 - 2."""
    try:
        return RatPoly(to_rational(c.strip()) for c in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad polynomial {text!r}: {exc}") from exc


def load_descriptor(ref: str) -> ExtensionDescriptor:
    """A JSON file path, or the name of a bundled descriptor."""
    path = Path(ref)
    if path.is_file():
        return builder_manual(json.loads(path.read_text()))
    name = ref[len("fixture:"):] if ref.startswith("fixture:") else ref
    if name in fixture_names():
        return load_fixture(name)
    raise UsageError(f"{ref!r} is neither a file nor a bundled descriptor")


def _case_param(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text)
    except ValueError:
        return text


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _emit_descriptor(args, E: ExtensionDescriptor) -> int:
    wire = E.to_wire()
    if args.output:
        Path(args.output).write_text(json.dumps(wire, indent=2) + "\n")
    lines = [f"{E.label} over {E.field.kind}, group {E.group.name}"]
    for o in E.orbits:
        locus = str(o.locus)
        lines.append(f"  {locus}: class {o.label}, index {o.ramification_index}, "
                     f"{'rational' if o.rational else 'not rational'}, {o.degree} point(s)")
    _emit(args, wire, "\n".join(lines))
    return EXIT_OK


def _emit_report(args, report: C.CriterionReport) -> int:
    _emit(args, report.to_wire(), report.render_text())
    return EXIT_BY_STATUS[report.overall.status]


# ---------------------------------------------------------------------------
# Subcommands


def cmd_build(args) -> int:
    kind = args.kind
    if kind == "sqrt":
        factors = [parse_poly(f) for f in args.factor] or None
        E = builder_quadratic_sqrt(parse_poly(args.poly), factors=factors)
    elif kind == "trinomial":
        E = builder_trinomial(args.n, args.m, args.q, args.s)
    elif kind == "morse":
        factors = [parse_poly(f) for f in args.factor] or None
        E = builder_morse(parse_poly(args.poly), factors=factors)
    elif kind == "cyclotomic":
        E = builder_cyclic_cyclotomic(args.n)
    else:
        E = load_descriptor(args.path)
    return _emit_descriptor(args, E)


def cmd_specialize(args) -> int:
    E = load_descriptor(args.descriptor)
    res = specialize(E, to_rational(args.t0), census_bound=args.census_bound)
    wire = res.to_wire()
    text = "\n".join(f"{k}: {v}" for k, v in wire.items())
    _emit(args, wire, text)
    return EXIT_OK


def cmd_check(args) -> int:
    E1, E2 = load_descriptor(args.e1), load_descriptor(args.e2)
    crit = args.criterion
    if crit in ("ic1", "ic2", "ic3"):
        report = C.eval_inertia_criterion(int(crit[-1]), E1, E2)
    elif crit == "bpc":
        report = C.eval_branch_point_criterion(E1, E2, args.prime_bound, args.min_witnesses)
    elif crit == "bph":
        report = C.eval_branch_point_hypothesis(E1, E2, args.prime_bound, args.min_witnesses)
    elif crit == "ih":
        report = C.eval_inertia_hypothesis(E1, E2)
    else:
        v = C.eval_ramification_variant(E1, E2, orbits=args.orbits)
        report = C.CriterionReport("ramification variant", {f"{args.orbits} orbits": v}, v)
    return _emit_report(args, report)


def cmd_case(args) -> int:
    params = [_case_param(p) for p in args.params]
    if args.id == "cor64" and params:
        params = [[parse_poly(str(p)) for p in params]]
    elif args.id == "cor65" and params:
        params = [params]
    try:
        report = C.run_case_study(args.id, *params)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    return _emit_report(args, report)


def cmd_group(args) -> int:
    G = C.named_group(args.name)
    names = G.class_names
    rows = [{"name": names[i], "size": size, "order": perm_order(rep), "label": str(G.label_of(rep))}
            for i, (rep, size) in enumerate(G.classes)]
    payload: dict = {"group": G.name, "order": G.order, "classes": rows}
    lines = [f"{G.name}: order {G.order}, {len(rows)} classes"]
    lines += [f"  {r['name']:>5}  size {r['size']:>5}  {r['label']}" for r in rows]
    if args.g_complete:
        labels = [G.label_by_name(n.strip()) for n in args.g_complete.split(",")]
        res = is_g_complete(G, labels)
        payload["g_complete"] = res.complete
        lines.append(f"g-complete: {res.complete}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_primes(args) -> int:
    P = parse_poly(args.poly)
    census = prime_divisor_census(P, args.bound)
    payload = {"bound": args.bound, "divisors": census.divisors, "non_divisors": census.non_divisors,
               "excluded": census.excluded}
    text = (f"P = {P}, primes up to {args.bound}\n"
            f"  divisors: {len(census.divisors)}  non-divisors: {len(census.non_divisors)}  "
            f"excluded: {census.excluded}\n"
            f"  first non-divisors: {census.non_divisors[:20]}")
    _emit(args, payload, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--format", choices=("json", "text"), default="text")
    # subcommands accept --format too, without clobbering a top-level choice
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    p = _Parser(prog="galois-param", description="Non-parametricity criteria for regular Galois extensions of Q(T).",
                parents=[top])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build a descriptor", parents=[fmt])
    bsub = b.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for name in ("sqrt", "morse"):
        q = bsub.add_parser(name, parents=[fmt])
        q.add_argument("poly", help="coefficients, lowest degree first, e.g. 0,1,0,0,0,1")
        q.add_argument("--factor", action="append", default=[], help="an irreducible factor (repeatable)")
        q.add_argument("-o", "--output")
    q = bsub.add_parser("trinomial", parents=[fmt])
    for arg in ("n", "m", "q", "s"):
        q.add_argument(arg, type=int)
    q.add_argument("-o", "--output")
    q = bsub.add_parser("cyclotomic", parents=[fmt])
    q.add_argument("n", type=int)
    q.add_argument("-o", "--output")
    q = bsub.add_parser("manual", parents=[fmt])
    q.add_argument("path")
    q.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("specialize", help="specialize a descriptor at t0", parents=[fmt])
    s.add_argument("descriptor")
    s.add_argument("--t0", required=True)
    s.add_argument("--census-bound", type=int, default=200)
    s.set_defaults(func=cmd_specialize)

    c = sub.add_parser("check", help="evaluate a criterion for (E1, E2)", parents=[fmt])
    c.add_argument("--criterion", required=True, choices=("ic1", "ic2", "ic3", "bpc", "bph", "ih", "ramvar"))
    c.add_argument("--e1", required=True)
    c.add_argument("--e2", required=True)
    c.add_argument("--prime-bound", type=int, default=10_000)
    c.add_argument("--min-witnesses", type=int, default=10)
    c.add_argument("--orbits", choices=("all", "rational"), default="all",
                   help="E1 orbits used by the ramification variant")
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("case", help="run a packaged case study", parents=[fmt])
    k.add_argument("id", help=", ".join(list(C.CASES) + ["all"]))
    k.add_argument("params", nargs="*")
    k.set_defaults(func=cmd_case)

    g = sub.add_parser("group", help="conjugacy classes of a small group", parents=[fmt])
    g.add_argument("name", help="S5, A5, Z6, D4, V4, PSL2(7), ...")
    g.add_argument("--g-complete", help="comma-separated class names to test")
    g.set_defaults(func=cmd_group)

    r = sub.add_parser("primes", help="prime-divisor census of a polynomial", parents=[fmt])
    r.add_argument("poly")
    r.add_argument("--bound", type=int, default=10_000)
    r.set_defaults(func=cmd_primes)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"galois-param: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, RuntimeError, KeyError) as exc:
        print(f"galois-param: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
