"""Command-line driver.

Subcommands re-run the case-study verifications and expose the engine
(Groebner bases, resultants, closure search) on user files.  Exit codes:
0 all checks pass, 1 verification failure, 2 bad input, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .elim import BudgetExceededError, buchberger, resultant
from .groups import BadTableError, CayleyTable
from .lame import InvalidLameConfig, closure_chain, parse_seed, search_chain, serialize_chain
from .poly import PolyRing
from .report import PASS, TIMEOUT
from .scalar import DEFAULT_PRIMES, QQ, QW, PrimeField
from .textform import ParseError, parse_poly_file, poly_to_str, scan_variables
from .verify import verify_alt4, verify_c2c4, verify_c3c3


def _emit(text, args):
    if args.out:
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_report(rep, args):
    _emit(rep.to_json() if args.format == "json" else rep.to_text(), args)
    if rep.overall == PASS:
        return 0
    if any(c.status == TIMEOUT for c in rep.checks):
        return 3
    return 1


def _ring_for_file(text, order_spec, mod):
    names, uses_omega = scan_variables(text)
    if order_spec:
        kind, _, rest = order_spec.partition(":")
        if kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown order {kind!r}; use lex[:vars] or degrevlex[:vars]")
        if rest:
            ordered = [n.strip() for n in rest.split(",") if n.strip()]
            missing = set(names) - set(ordered)
            if missing:
                raise ValueError(f"order omits variables {sorted(missing)}")
            names = ordered
    else:
        kind = "lex"
    if not names:
        raise ValueError("no variables found in the input file")
    if mod is not None:
        field = PrimeField(mod)
    elif uses_omega:
        field = QW
    else:
        field = QQ
    return PolyRing(field, tuple(names), order=kind)


def _cmd_verify(args):
    if args.case == "c3c3":
        part = args.part or "all"
        rep = verify_c3c3(("uv", "ab", "theorem") if part == "all" else (part,))
    elif args.case == "c2c4":
        seed = args.seed or "corrected"
        if seed not in ("corrected", "literal"):
            seed = parse_seed(Path(seed).read_text())
        rep = verify_c2c4(seed)
    else:
        primes = DEFAULT_PRIMES
        if args.primes:
            primes = tuple(int(t) for t in args.primes.split(",") if t.strip())
        rep = verify_alt4(primes, budget_secs=args.budget_secs, quorum=args.quorum)
    return _emit_report(rep, args)


def _cmd_gb(args):
    text = Path(args.file).read_text()
    ring = _ring_for_file(text, args.order, args.mod)
    gens = parse_poly_file(text, ring)
    if not gens:
        raise ValueError("input file holds no polynomials")
    gb = buchberger(gens, extended=args.extended, budget_secs=args.budget_secs)
    lines = [poly_to_str(g) for g in gb]
    if args.format == "json":
        payload = {
            "order": f"{ring.order.kind}:{','.join(ring.names)}",
            "generators": lines,
        }
        if args.extended:
            payload["cofactors"] = [
                [poly_to_str(c) for c in row] for row in gb.cofactors
            ]
        _emit(json.dumps(payload, indent=2), args)
    else:
        body = [f"# groebner basis, {ring.order.kind} on {','.join(ring.names)}"]
        body.extend(lines)
        if args.extended:
            body.append("# cofactors, one row per generator")
            for row in gb.cofactors:
                body.append("; ".join(poly_to_str(c) for c in row))
        _emit("\n".join(body), args)
    return 0


def _cmd_resultant(args):
    text = Path(args.file).read_text()
    ring = _ring_for_file(text, args.order, args.mod)
    polys = parse_poly_file(text, ring)
    if len(polys) != 2:
        raise ValueError(f"resultant needs exactly 2 polynomials, file has {len(polys)}")
    r = resultant(polys[0], polys[1], args.var)
    if args.format == "json":
        _emit(json.dumps({"var": args.var, "resultant": poly_to_str(r)}, indent=2), args)
    else:
        _emit(poly_to_str(r), args)
    return 0


def _cmd_lame_search(args):
    table_path = Path(args.table)
    table = CayleyTable.from_text(table_path.stem, table_path.read_text())
    seed = parse_seed(args.seed)
    result = search_chain(table, seed)
    replay = closure_chain(table, set(seed), result.chain)
    if not replay.succeeded:
        raise AssertionError("emitted chain failed to replay")
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "rounds": result.rounds,
                    "points": sorted(str(p) for p in result.final_points),
                    "chain": [str(c) for c in result.chain],
                },
                indent=2,
            ),
            args,
        )
    else:
        head = (
            f"# {len(result.final_points)} points after {result.rounds} rounds, "
            f"{len(result.chain)} configurations\n"
        )
        _emit(head + serialize_chain(result.chain) if result.chain else head, args)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dualnets",
        description="Exact verification toolkit for dual-3-net computations.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output to a file")
    sub = parser.add_subparsers(dest="command", required=True)

    ver = sub.add_parser("verify", help="re-run a case-study verification")
    vsub = ver.add_subparsers(dest="case", required=True)
    p = vsub.add_parser("c3c3", parents=[common], help="nine-element abelian case")
    p.add_argument("--part", choices=("uv", "ab", "theorem", "all"), default="all")
    p.set_defaults(func=_cmd_verify)
    p = vsub.add_parser("c2c4", parents=[common], help="eight-element closure case")
    p.add_argument(
        "--seed",
        default="corrected",
        help="'corrected', 'literal', or a file of point tokens",
    )
    p.set_defaults(func=_cmd_verify)
    p = vsub.add_parser("alt4", parents=[common], help="twelve-element modular case")
    p.add_argument("--primes", help="comma-separated primes (default 32003,31013,30011)")
    p.add_argument("--budget-secs", type=float, default=3600.0, help="per-prime budget")
    p.add_argument("--quorum", type=int, default=None, help="primes needed for a pass")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gb", parents=[common], help="Groebner basis of a polynomial file")
    p.add_argument("file")
    p.add_argument("--order", help="lex[:v1,v2,...] or degrevlex[:v1,v2,...] (default lex)")
    p.add_argument("--extended", action="store_true", help="track input cofactors")
    p.add_argument("--mod", type=int, default=None, metavar="P", help="work over GF(P)")
    p.add_argument("--budget-secs", type=float, default=None)
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("resultant", parents=[common], help="resultant of a two-polynomial file")
    p.add_argument("file")
    p.add_argument("--var", required=True)
    p.add_argument("--order", help="variable order for the ring (cosmetic)")
    p.add_argument("--mod", type=int, default=None, metavar="P")
    p.set_defaults(func=_cmd_resultant)

    lame = sub.add_parser("lame", help="grid-configuration closure tools")
    lsub = lame.add_subparsers(dest="lame_command", required=True)
    p = lsub.add_parser("search", parents=[common], help="saturate the eight-of-nine rule")
    p.add_argument("table", help="Cayley table file (whitespace grid)")
    p.add_argument("--seed", required=True, help="comma-separated point tokens")
    p.set_defaults(func=_cmd_lame_search)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ParseError, BadTableError, InvalidLameConfig, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
