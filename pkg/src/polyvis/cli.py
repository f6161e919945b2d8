"""Command-line surface for the visibility toolkit.

    polyvis visible   --poly 1,1 --point 13,195
    polyvis density   --poly 1 --n 1000 [--out prefix.csv] [--prime-bound B]
    polyvis count     --poly 1 --n 5 --mode pruned
    polyvis construct --point 3,5 [--prime 7 | --multi 7,11]
    polyvis blocks    --poly 1,1 --size 2 --max 1000,1000 [--all --out blocks.csv]
    polyvis classify  --poly 1,1 --region 1,50,1,50 [--out grid.csv]
    polyvis radius    --poly 1 --region 1,10,1,10 --r 0
    polyvis reproduce --target illustration|table1 [--rows 7,13,14]

Each run prints a single JSON envelope {command, family?, payload,
elapsed_ms} on stdout; CSV output goes to the --out path. Exit codes:
0 success, 1 reproduction failure, 2 bad input, 3 resource cap exceeded.
The environment variable LATTICE_SCOPE_CAP overrides the built-in N and
region caps; --threads is accepted as a worker hint and never changes
results.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from fractions import Fraction

from . import census, geometry
from .construct import construct_multi_prime, construct_visible, valuation_profile
from .errors import ResourceLimitError
from .polyfam import LatticePoint, PolyFamily, parse_family
from .visibility import gcd_p, is_visible, is_visible_direct, lcm_criterion

_COUNT_MODES = {"oracle": None, "subsets": census.SUBSET_MODE, "pruned": census.PRUNED_MODE}


def _scope_cap() -> int | None:
    raw = os.environ.get("LATTICE_SCOPE_CAP")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"LATTICE_SCOPE_CAP={raw!r} is not an integer") from None


def _parse_point(text: str) -> LatticePoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"point must be 'a,b', got {text!r}")
    try:
        a, b = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"point must be two integers, got {text!r}") from None
    return LatticePoint(a, b)


def _parse_region(text: str) -> geometry.Region:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"region must be 'minx,maxx,miny,maxy', got {text!r}")
    try:
        mnx, mxx, mny, mxy = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"region must be four integers, got {text!r}") from None
    return geometry.Region(mnx, mxx, mny, mxy)


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"{what} must be a comma list of integers, got {text!r}") from None


def _family(args) -> PolyFamily:
    return parse_family(args.poly, normalize=True)


def _construction_record(c) -> dict:
    rec = c.to_record()
    rec["valuation_profile"] = [list(p) for p in valuation_profile(c).points]
    return rec


def cmd_visible(args):
    fam = _family(args)
    pt = _parse_point(args.point)
    verdict = is_visible(fam, pt)
    payload = {"visible": verdict.visible}
    if not verdict.visible:
        payload["witness_t"] = verdict.witness_t
        payload["witness_modulus"] = verdict.witness_modulus
    payload["gcd_p"] = gcd_p(fam, pt)
    payload["lcm_criterion"] = lcm_criterion(fam, pt)
    return fam.spec, payload, 0


def cmd_density(args):
    fam = _family(args)
    cap = _scope_cap()
    result = census.empirical_density(fam, args.n, cap=cap)
    coprime = census.coprimality_count(fam, args.n, cap=cap)
    constant = census.constant_cp(fam, args.prime_bound)
    if args.out:
        rows = census.density_rows(fam, args.n, cap=cap)
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["N", "visible_count", "density"])
            w.writerows(rows)
    payload = {
        "n": result.n,
        "visible_count": result.visible_count,
        "density": result.density_estimate,
        "coprimality_count": coprime,
        "c_p_constant": constant.value,
        "tail_bound": constant.tail_bound,
    }
    return fam.spec, payload, 0


def cmd_count(args):
    fam = _family(args)
    cap = _scope_cap()
    mode = _COUNT_MODES[args.mode]
    if mode is None:
        count = census.brute_count(fam, args.n, cap=cap)
    else:
        count = census.exact_count_ie(fam, args.n, mode=mode, cap=cap)
    return fam.spec, {"n": args.n, "count": count, "mode": args.mode}, 0


def cmd_construct(args):
    pt = _parse_point(args.point)
    if args.multi:
        ells = _parse_int_list(args.multi, "--multi")
        got = construct_multi_prime(pt, ells)
        payload = got.to_record()
        payload["components"] = [
            _construction_record(c) for c in got.components
        ]
    else:
        got = construct_visible(pt, args.prime)
        payload = _construction_record(got)
    return None, payload, 0


def cmd_blocks(args):
    fam = _family(args)
    cap = _scope_cap()
    mx, my = _parse_int_list(args.max, "--max")
    region = geometry.Region(1, mx, 1, my)
    payload = {"scanned_region": [1, mx, 1, my]}
    if args.all:
        if not args.out:
            raise ValueError("--all needs --out to receive the block CSV")
        hits = geometry.find_all_blocks(fam, args.size, region, cap=cap)
        geometry.blocks_to_csv(hits, args.out)
        payload["found"] = bool(hits)
        payload["block_count"] = len(hits)
        if hits:
            payload["corner"] = hits[0].to_record()
    else:
        hit = geometry.find_block(fam, args.size, region, cap=cap)
        payload["found"] = hit is not None
        if hit is not None:
            payload["corner"] = hit.to_record()
    return fam.spec, payload, 0


def cmd_classify(args):
    fam = _family(args)
    region = _parse_region(args.region)
    grid = geometry.classify_region(fam, region, cap=_scope_cap())
    if args.out:
        geometry.region_to_csv(grid, region, args.out)
    payload = {
        "region": [region.min_x, region.max_x, region.min_y, region.max_y],
        "visible_count": int(grid.sum()),
        "total": int(grid.size),
    }
    return fam.spec, payload, 0


def cmd_radius(args):
    fam = _family(args)
    region = _parse_region(args.region)
    got = geometry.find_point_with_radius(fam, region, args.r, cap=_scope_cap())
    payload = {
        "found": got is not None,
        "r": args.r,
        "region": [region.min_x, region.max_x, region.min_y, region.max_y],
    }
    if got is not None:
        payload["point"] = {"x": got.a, "y": got.b}
    return fam.spec, payload, 0


def _reproduce_illustration():
    c = construct_visible(LatticePoint(3, 5))
    checks = [
        ("curve(1) = 5/7", c.curve.eval(1) == Fraction(5, 7)),
        ("curve(2) = 50/21", c.curve.eval(2) == Fraction(50, 21)),
        ("curve(3) = 5", c.curve.eval(3) == 5),
    ]
    items = [{"name": name, "passed": ok} for name, ok in checks]
    return items


def _reproduce_survey(rows_filter):
    region = geometry.Region(1, 1000, 1, 1000)
    items = []
    for idx, (a_coeff, b_coeff), corner in geometry.BLOCK_SURVEY:
        if rows_filter and idx not in rows_filter:
            continue
        fam = geometry.survey_family(a_coeff, b_coeff)
        name = f"row {idx} (A={a_coeff}, B={b_coeff})"
        if corner is None:
            hit = geometry.find_block(fam, 2, region)
            ok = hit is None
            detail = "no block in [1,1000]^2" if ok else f"unexpected block {hit.to_record()}"
        else:
            x, y = corner
            ok = all(
                not is_visible_direct(fam, LatticePoint(x + dx, y + dy))
                for dx in (0, 1)
                for dy in (0, 1)
            )
            detail = f"block at {corner}" if ok else f"listed corner {corner} is not all-invisible"
        items.append({"name": name, "passed": ok, "detail": detail})
    return items


def cmd_reproduce(args):
    if args.target == "illustration":
        items = _reproduce_illustration()
    else:
        rows_filter = set(_parse_int_list(args.rows, "--rows")) if args.rows else None
        items = _reproduce_survey(rows_filter)
    passed = sum(1 for it in items if it["passed"])
    payload = {
        "target": args.target,
        "items": items,
        "passed": passed,
        "total": len(items),
    }
    return None, payload, 0 if passed == len(items) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyvis",
        description="visibility of lattice points along polynomial curve families",
    )
    parser.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker hint; results never depend on it")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("visible", help="visibility verdict for one point")
    p.add_argument("--poly", required=True, help="coefficients a_n,...,a_1 (descending)")
    p.add_argument("--point", required=True, help="a,b")
    p.set_defaults(func=cmd_visible)

    p = sub.add_parser("density", help="exact visible count and density over [1,N]^2")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write per-N prefix densities as CSV")
    p.add_argument("--prime-bound", type=int, default=10_000, dest="prime_bound")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("count", help="inclusion-exclusion visible-pair count")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=sorted(_COUNT_MODES), default="pruned")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("construct", help="curve through (a,b) missing earlier columns")
    p.add_argument("--point", required=True, help="a,b")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--prime", type=int, help="explicit prime > max(a,b)")
    group.add_argument("--multi", help="comma list of distinct primes to average")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("blocks", help="first (or all) all-invisible n x n block")
    p.add_argument("--poly", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--max", required=True, help="X,Y scan bound (region [1,X]x[1,Y])")
    p.add_argument("--all", action="store_true", help="collect every block corner")
    p.add_argument("--out", help="CSV path for --all")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("classify", help="visibility grid over a region")
    p.add_argument("--poly", required=True)
    p.add_argument("--region", required=True, help="minx,maxx,miny,maxy")
    p.add_argument("--out", help="write x,y,visible CSV")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("radius", help="first point whose visibility radius is exactly r")
    p.add_argument("--poly", required=True)
    p.add_argument("--region", required=True, help="minx,maxx,miny,maxy")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("reproduce", help="re-run the bundled worked example or block survey")
    p.add_argument("--target", choices=["illustration", "table1"], required=True)
    p.add_argument("--rows", help="comma list of survey row numbers to check")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        family, payload, code = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    envelope: dict = {"command": args.command}
    if family is not None:
        envelope["family"] = family
    envelope["payload"] = payload
    envelope["elapsed_ms"] = (time.perf_counter() - start) * 1000.0
    print(json.dumps(envelope))
    return code


def run() -> None:
    raise SystemExit(main())
