"""Command-line front end.

Subcommands mirror the library surface:

    smallq check-l  --type A --rank 2 --l 9
    smallq orbits   --type A --rank 2 --l 7 --action bullet --json
    smallq blocks   --type A --rank 2 --l 7 --json / --csv
    smallq charring --l 5 product 4 1
    smallq charring --l 5 socle --json
    smallq sl2      --l 5 verify-all --json
    smallq sl2      --l 5 center

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error or inadmissible input (the violated condition is named).
JSON output is deterministic (fixed key order, orbits sorted by
representative) so it can be diffed as a golden file.  Cyclotomic
scalars are rendered as arrays of exact rational strings, never floats.

The SMALLQ_TENSOR_BUDGET environment variable caps the number of dense
tensor-grid entries the quasitriangularity checks may allocate
(default 5_000_000); over budget those checks are skipped and reported
as skipped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import affine_orbits, blocks, charring, rootdata, sl2_checks
from .uqsl2 import UqSL2

DEFAULT_TENSOR_BUDGET = 5_000_000


def _datum(args) -> rootdata.RootDatum:
    return rootdata.build(args.type, args.rank)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_check_l(args) -> int:
    verdict = rootdata.check_l(_datum(args), args.l)
    if args.json:
        _emit(
            {
                "type": args.type,
                "rank": args.rank,
                "l": args.l,
                "ok": verdict.ok,
                "reasons": list(verdict.reasons),
                "gcd_with_det": verdict.gcd_with_det,
                "cartan_invertible_mod_l": verdict.cartan_invertible_mod_l,
                "tests_agree": verdict.tests_agree,
            }
        )
    else:
        print(verdict)
    return 0 if verdict.ok else 2


def cmd_orbits(args) -> int:
    datum = _datum(args)
    try:
        table = affine_orbits.orbit_table(
            datum, args.l, action=args.action, budget=args.budget
        )
    except affine_orbits.InadmissibleError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return 2
    except affine_orbits.BudgetExceededError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _emit(
            {
                "l": table.l,
                "type": args.type,
                "rank": args.rank,
                "action": table.action,
                "orbits": [
                    {
                        "rep": list(o.representative),
                        "size": o.size,
                        "stab_order": o.stabilizer_order,
                        "regular": o.regular,
                    }
                    for o in table.orbits
                ],
            }
        )
    else:
        print(f"{datum.name}, l={table.l}, action={table.action}: "
              f"{len(table.orbits)} orbits on {table.num_points} points")
        for o in table.orbits:
            refl = len(o.stabilizer_reflections)
            print(
                f"  rep {o.representative}  size {o.size}  "
                f"stab {o.stabilizer_order}  "
                + ("regular" if o.regular else f"{refl} stabilizing reflections")
            )
    return 0


def cmd_blocks(args) -> int:
    datum = _datum(args)
    try:
        table = affine_orbits.orbit_table(datum, args.l, budget=args.budget)
    except affine_orbits.InadmissibleError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return 2
    except affine_orbits.BudgetExceededError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return 2
    report = blocks.block_report(table)
    if args.json:
        _emit(
            {
                "l": report.l,
                "type": args.type,
                "rank": args.rank,
                "totals": {
                    "ztilde": report.dim_ztilde,
                    "zprime": report.dim_zprime,
                    "intersection": report.dim_intersection,
                    "sum": report.dim_sum,
                    "xbar": report.num_blocks,
                },
                "blocks": [
                    {
                        "rep": list(r.representative),
                        "index": r.index_w_wmu,
                        "dim_sum_block": r.dim_sum_block,
                        "regular": r.regular,
                    }
                    for r in report.rows
                ],
            }
        )
    elif args.csv:
        print("rep;index_w_wmu;dim_ztilde;dim_zprime;dim_intersection;dim_sum;regular")
        for r in report.rows:
            rep = " ".join(map(str, r.representative))
            print(
                f"{rep};{r.index_w_wmu};{r.dim_ztilde_block};"
                f"{r.dim_zprime_block};{r.dim_intersection_block};"
                f"{r.dim_sum_block};{int(r.regular)}"
            )
    else:
        print(
            f"{datum.name}, l={report.l}: |Xbar| = {report.num_blocks}, "
            f"dim Ztilde = dim Zprime = {report.dim_ztilde}, "
            f"dim intersection = {report.dim_intersection}, "
            f"dim sum = {report.dim_sum}"
        )
        for r in report.rows:
            print(
                f"  mu = {r.representative}: [W:W_mu] = {r.index_w_wmu}, "
                f"block dims (Zt, Zp, meet, sum) = "
                f"({r.dim_ztilde_block}, {r.dim_zprime_block}, "
                f"{r.dim_intersection_block}, {r.dim_sum_block})"
            )
    return 0


def cmd_charring(args) -> int:
    if args.l % 2 == 0 or args.l < 3:
        print(f"inadmissible: l={args.l} must be odd and >= 3", file=sys.stderr)
        return 2
    ring = charring.CharRing(args.l)
    if args.op == "product":
        i, j = args.operands
        if not (0 <= i < args.l and 0 <= j < args.l):
            print(f"usage: xi indices must lie in [0, {args.l})", file=sys.stderr)
            return 2
        prod = ring.product(ring.xi(i), ring.xi(j))
        if args.json:
            _emit(
                {
                    "l": args.l,
                    "op": "product",
                    "factors": [i, j],
                    "xi_coefficients": [str(c) for c in prod.coeffs],
                }
            )
        else:
            print(f"xi({i}) * xi({j}) = {prod!r}")
        return 0
    if args.op in ("socle", "radical"):
        basis = ring.socle_basis() if args.op == "socle" else ring.radical()
        if args.json:
            _emit(
                {
                    "l": args.l,
                    "op": args.op,
                    "dimension": len(basis),
                    "basis": [[str(c) for c in b.coeffs] for b in basis],
                }
            )
        else:
            print(f"{args.op} of R at l={args.l}: dimension {len(basis)}")
            for b in basis:
                print(f"  {b!r}")
        return 0
    if args.op == "steinberg":
        report = ring.steinberg_checks()
        ok = report.ok
        if args.json:
            _emit(
                {
                    "l": args.l,
                    "op": "steinberg",
                    "ok": ok,
                    "socle_square_dim": report.socle_square_dim,
                }
            )
        else:
            print(report)
        return 0 if ok else 1
    print(f"usage: unknown charring operation {args.op!r}", file=sys.stderr)
    return 2


def cmd_sl2(args) -> int:
    if args.l % 2 == 0 or args.l < 3:
        print(f"inadmissible: l={args.l} must be odd and >= 3", file=sys.stderr)
        return 2
    if args.op == "center":
        u = UqSL2(args.l)
        basis = u.center_basis()
        if args.json:
            _emit(
                {
                    "l": args.l,
                    "dim_center": len(basis),
                    "basis": [
                        {
                            "monomials": [
                                {"pbw": list(m), "coeff": c.to_strings()}
                                for m, c in sorted(z.coeffs.items())
                            ]
                        }
                        for z in basis
                    ],
                }
            )
        else:
            print(f"dim Z(u_q(sl2)) at l={args.l}: {len(basis)}")
            for z in basis:
                print(f"  {z!r}")
        return 0
    if args.op == "verify-all":
        budget = int(os.environ.get("SMALLQ_TENSOR_BUDGET", DEFAULT_TENSOR_BUDGET))
        report = sl2_checks.verify_all(
            args.l, samples=args.samples, tensor_budget=budget
        )
        if args.json:
            _emit(
                {
                    "l": args.l,
                    "ok": report.ok,
                    "checks": [
                        {"name": c.name, "ok": c.ok, "detail": c.detail}
                        for c in report.checks
                    ],
                    "skipped": list(report.data.get("skipped", [])),
                    "fourier_unit_scalar": (
                        report.data["fourier_unit_scalar"].to_strings()
                        if report.data.get("fourier_unit_scalar") is not None
                        else None
                    ),
                }
            )
        else:
            for c in report.checks:
                print(c.line())
            for note in report.data.get("skipped", []):
                print(f"SKIP  {note}")
            print(
                f"{'all checks pass' if report.ok else 'FAILURES PRESENT'} "
                f"({len(report.checks)} checks, l={args.l})"
            )
        return 0 if report.ok else 1
    print(f"usage: unknown sl2 operation {args.op!r}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smallq",
        description="exact small-quantum-group block and center computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_type=True):
        if need_type:
            p.add_argument("--type", default="A", help="simply-laced type (A, D, E)")
            p.add_argument("--rank", type=int, default=1)
        p.add_argument("--l", type=int, required=True, help="odd integer >= 3")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("check-l", help="admissibility of l for a root system")
    common(p)
    p.set_defaults(func=cmd_check_l)

    p = sub.add_parser("orbits", help="Weyl orbits on restricted weights")
    common(p)
    p.add_argument(
        "--action",
        default="bullet",
        choices=list(affine_orbits.ACTIONS),
        help="bullet (shifted), circ (natural on P/lP), circ_q (on Q/lQ)",
    )
    p.add_argument("--budget", type=int, default=affine_orbits.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("blocks", help="block dimension report")
    common(p)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--budget", type=int, default=affine_orbits.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("charring", help="rank-1 character ring operations")
    common(p, need_type=False)
    p.add_argument("op", choices=["product", "socle", "radical", "steinberg"])
    p.add_argument("operands", type=int, nargs="*")
    p.set_defaults(func=cmd_charring)

    p = sub.add_parser("sl2", help="u_q(sl2) center machinery and theorem suite")
    common(p, need_type=False)
    p.add_argument("op", choices=["verify-all", "center"])
    p.add_argument("--samples", type=int, default=25, help="random elements per axiom check")
    p.set_defaults(func=cmd_sl2)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    if getattr(args, "op", None) == "product" and len(args.operands) != 2:
        print("usage: charring product needs two xi indices", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
