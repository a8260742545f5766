"""Command-line front end.

Exit codes:
    0  success
    2  parse error (bad arguments, malformed file or literal)
    3  invariant violation (invalid family, bad variable order, dimension mismatch)
    4  budget exceeded
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .formats import (
    FamilySpec,
    InputFormatError,
    dumps_document,
    hilbert_entries,
    load_family,
    load_point,
    point_to_data,
    sibirsky_document,
    verdict_entry,
    verdict_text,
)
from .groebner import Budget, BudgetExceeded
from .reversibility import (
    QUADRATIC,
    CoefficientPoint,
    FamilyError,
    compute_sibirsky,
    complexify_quadratic,
    gamma_relations,
    hilbert_basis,
    hilbert_oracle,
    is_time_reversible,
    minimal_elements,
    zeta,
)
from .reversibility.points import check_dimension
from .scalars import parse_rational

log = logging.getLogger("sibirsky")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_BUDGET = 4

_ORDER_FLAG = {"lex": "lex", "block": "block_grevlex"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", choices=sorted(_ORDER_FLAG),
                   help="elimination order (overrides the family file)")
    p.add_argument("--var-order", metavar="NAMES",
                   help="whitespace-separated a,b variable order, e.g. "
                        "'a10 a01 a-1,2 b10 b01 b2,-1'")
    p.add_argument("--budget-seconds", type=float, metavar="N")
    p.add_argument("--budget-degree", type=int, metavar="N")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON document")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock timing in the document")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sibirsky", description=(
        "Sibirsky ideals, Hilbert bases and time-reversibility checks "
        "for planar polynomial families."))
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sibirsky", help="generators of the Sibirsky ideal")
    p.add_argument("family")
    p.add_argument("--hilbert", action="store_true", help="also list the Hilbert basis")
    _add_family_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("check", help="decide time-reversibility of a point")
    p.add_argument("family")
    p.add_argument("point")
    _add_family_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("hilbert", help="Hilbert basis of the invariant monoid")
    p.add_argument("family")
    p.add_argument("--oracle", type=int, metavar="BOUND",
                   help="cross-check against exhaustive enumeration up to this norm")
    _add_family_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("complexify", help=(
        "complexify u'=-v+a1u^2+a2uv+a3v^2, v'=u+b1u^2+b2uv+b3v^2 and check it "
        "(put '--' before negative values)"))
    for name in ("a1", "a2", "a3", "b1", "b2", "b3"):
        p.add_argument(name)
    _add_output_flags(p)
    return parser


def _spec(args) -> FamilySpec:
    spec = load_family(args.family)
    order = _ORDER_FLAG[args.order] if args.order else spec.order
    var_order = tuple(args.var_order.split()) if args.var_order else spec.var_order
    spec = FamilySpec(spec.pairs, var_order, order)
    spec.config()  # validate family and variable order up front
    return spec


def _budget(args) -> Budget:
    return Budget(seconds=args.budget_seconds, max_degree=args.budget_degree)


def _emit(doc: dict, text_lines: list[str], args, t0: float) -> None:
    elapsed = time.monotonic() - t0
    log.info("%s finished in %.3f s", doc["command"], elapsed)
    if args.timing:
        doc["timing"] = {"seconds": round(elapsed, 6)}
    if args.json:
        sys.stdout.write(dumps_document(doc))
    else:
        if args.timing:
            text_lines.append(f"time: {elapsed:.3f} s")
        sys.stdout.write("\n".join(text_lines) + "\n")


def cmd_sibirsky(args) -> int:
    t0 = time.monotonic()
    spec = _spec(args)
    S = spec.family()
    res = compute_sibirsky(S, spec.config(_budget(args)))
    doc = sibirsky_document(spec, res)
    lines = [f"family {S}", f"Sibirsky ideal: {len(res.generators)} generator(s)"]
    lines += [f"  {e['label']} = {e['text']}" for e in doc["generators"]]
    if args.hilbert:
        vecs = hilbert_basis(S, spec.config(_budget(args)))
        doc["hilbert_basis"] = hilbert_entries(S, vecs, res)
        lines.append(f"Hilbert basis: {len(vecs)} vector(s)")
        lines += [f"  {tuple(e['nu'])}  {e['monomial']}" for e in doc["hilbert_basis"]]
    _emit(doc, lines, args, t0)
    return EXIT_OK


def _check_document(S, spec_dict, pt: CoefficientPoint, config) -> dict:
    check_dimension(S, pt)
    res_ideal = compute_sibirsky(S, config)
    gens = list(res_ideal.generators)
    res = is_time_reversible(S, pt, gens)
    rel = gamma_relations(S, pt, gens) if res.reversible else None
    doc = {"command": "check", "family": spec_dict, **point_to_data(pt)}
    doc.update(verdict_entry(res, gens, rel))
    return doc


def cmd_check(args) -> int:
    t0 = time.monotonic()
    spec = _spec(args)
    S = spec.family()
    pt = load_point(args.point)
    doc = _check_document(S, spec.to_dict(), pt, spec.config(_budget(args)))
    _emit(doc, [f"family {S}", f"point {pt}", verdict_text(doc)], args, t0)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    t0 = time.monotonic()
    spec = _spec(args)
    S = spec.family()
    config = spec.config(_budget(args))
    res = compute_sibirsky(S, config)
    vecs = hilbert_basis(S, config)
    doc = {
        "command": "hilbert",
        "family": spec.to_dict(),
        "zeta": list(zeta(S)),
        "hilbert_basis": hilbert_entries(S, vecs, res),
    }
    lines = [f"family {S}", f"zeta = {zeta(S)}", f"Hilbert basis: {len(vecs)} vector(s)"]
    lines += [f"  {tuple(e['nu'])}  {e['monomial']}" for e in doc["hilbert_basis"]]
    if args.oracle is not None:
        if args.oracle < 1:
            raise InputFormatError("--oracle bound must be >= 1")
        oracle = hilbert_oracle(zeta(S), args.oracle)
        agree = minimal_elements(vecs) == oracle
        doc["oracle"] = {"bound": args.oracle, "size": len(oracle), "agreement": agree}
        lines.append(f"oracle (bound {args.oracle}): {len(oracle)} minimal vector(s), "
                     f"agreement: {'true' if agree else 'false'}")
    _emit(doc, lines, args, t0)
    return EXIT_OK


def cmd_complexify(args) -> int:
    t0 = time.monotonic()
    names = ("a1", "a2", "a3", "b1", "b2", "b3")
    try:
        vals = [parse_rational(getattr(args, n)) for n in names]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(str(exc)) from None
    pt = complexify_quadratic(*vals)
    spec = FamilySpec(QUADRATIC.pairs)
    doc = _check_document(QUADRATIC, spec.to_dict(), pt, spec.config())
    doc["command"] = "complexify"
    doc["input"] = {n: getattr(args, n) for n in names}
    lines = [
        "real system: u' = -v + a1 u^2 + a2 uv + a3 v^2, v' = u + b1 u^2 + b2 uv + b3 v^2",
        "point (a10, a01, a-1,2, b2,-1, b10, b01) = " + str(pt),
        verdict_text(doc),
    ]
    _emit(doc, lines, args, t0)
    return EXIT_OK


COMMANDS = {
    "sibirsky": cmd_sibirsky,
    "check": cmd_check,
    "hilbert": cmd_hilbert,
    "complexify": cmd_complexify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except InputFormatError as exc:
        print(f"sibirsky: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FamilyError, ValueError) as exc:
        print(f"sibirsky: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except BudgetExceeded as exc:
        print(f"sibirsky: {exc}", file=sys.stderr)
        print(json.dumps({"aborted": exc.reason, **exc.diagnostics}, sort_keys=True),
              file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
