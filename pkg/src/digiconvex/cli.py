"""``digiconvex`` command line.

Exit codes: 0 convex (or success), 1 not convex, 2 input or resource error.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import bench
from .convexity2d import is_digital_convex_2d
from .convexity_nd import is_digital_convex_nd
from .fileio import read_point_set, write_point_set
from .generators import (gen_ball, gen_punctured, gen_random_polytope_points,
                         gen_skewed_pair)
from .geometry import InputError, ResourceError
from .oracle import brute_lattice_points
from .pick import lattice_count
from .quickhull import quickhull_traced
from .report import FORMAT_VERSION

EXIT_CONVEX = 0
EXIT_NOT_CONVEX = 1
EXIT_ERROR = 2

VARIANT_CHOICES = ("auto", "2d", "nd-count", "nd-early")


def _fmt(p) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


def cmd_check(args) -> int:
    S = read_point_set(args.path, args.dim_override)
    variant = args.variant
    if variant == "auto":
        variant = "2d" if S.dim == 2 else "nd-early"
    if variant == "2d":
        report = is_digital_convex_2d(S)
    else:
        report = is_digital_convex_nd(S, "count" if variant == "nd-count" else "early_exit")
    print(report.to_json() if args.json else report.to_text())
    return EXIT_CONVEX if report.is_convex else EXIT_NOT_CONVEX


def cmd_hull(args) -> int:
    S = read_point_set(args.path, args.dim_override)
    if S.dim != 2:
        raise InputError(f"hull needs a 2D point set, got dimension {S.dim}")
    if S.n == 0:
        raise InputError("hull of an empty set")
    res = quickhull_traced(S)
    hull, trace = res.hull, res.trace
    print(f"format: {FORMAT_VERSION}")
    print(f"kind: {hull.kind}")
    print(f"h: {hull.h}")
    print("vertices: " + " ".join(_fmt(v) for v in hull.vertices))
    if hull.kind == "segment":
        print("note: collinear input, hull is the segment between the two endpoints")
    elif hull.kind == "point":
        print("note: single point")
    print(f"init_discarded: {trace.init_discarded}")
    print(f"steps: {len(trace.steps)}")
    print(f"total_candidate_scans: {trace.total_candidate_scans}")
    for i, st in enumerate(trace.steps, 1):
        ratio = st.remaining_after / st.remaining_before if st.remaining_before else 0.0
        print(f"step {i}: {st.as_line()} kept_ratio={ratio:.4f}")
    return EXIT_CONVEX


def cmd_count(args) -> int:
    S = read_point_set(args.path, args.dim_override)
    if S.n == 0:
        print(0)
    elif S.dim == 2:
        print(lattice_count(quickhull_traced(S).hull))
    else:
        print(len(brute_lattice_points(S, cap=args.cap)))
    return EXIT_CONVEX


def _parse_point(text: Optional[str], d: int):
    if text is None:
        return (0,) * d
    try:
        pt = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise InputError(f"bad point {text!r}; use comma-separated integers") from None
    if len(pt) != d:
        raise InputError(f"point {text!r} has {len(pt)} coordinates, expected {d}")
    return pt


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "ball":
        S = gen_ball(args.dim, args.r2, _parse_point(args.center, args.dim))
    elif kind == "polytope":
        S = gen_random_polytope_points(args.dim, args.generators, args.half_width, args.seed)
    elif kind == "punctured":
        if args.base is None:
            raise InputError("punctured needs --base FILE")
        S = gen_punctured(read_point_set(args.base), args.seed)
    else:
        S = gen_skewed_pair(args.k)
    if args.out == "-":
        write_point_set(S, sys.stdout)
    else:
        write_point_set(S, args.out)
    return EXIT_CONVEX


def cmd_bench(args) -> int:
    suites = bench.SUITES if args.suite == "all" else (args.suite,)
    out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8")
    try:
        for i, suite in enumerate(suites):
            rows = bench.run_suite(suite, args.sizes, args.seeds, args.repeats)
            bench.write_csv(rows, out, header=i == 0)
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_CONVEX


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="digiconvex", description="Digital convexity tools.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("path", help="point-set file ('d n' header, then n rows)")
        sp.add_argument("--dim-override", type=int, default=None,
                        help="read rows with this dimension instead of the header's")

    c = sub.add_parser("check", help="test digital convexity")
    with_input(c)
    c.add_argument("--variant", choices=VARIANT_CHOICES, default="auto")
    c.add_argument("--json", action="store_true", help="structured output")
    c.set_defaults(func=cmd_check)

    h = sub.add_parser("hull", help="2D hull with step trace")
    with_input(h)
    h.set_defaults(func=cmd_hull)

    n = sub.add_parser("count", help="number of lattice points in the hull")
    with_input(n)
    n.add_argument("--cap", type=int, default=10**7, help="bounding-box volume cap (d != 2)")
    n.set_defaults(func=cmd_count)

    g = sub.add_parser("gen", help="write a generated instance")
    g.add_argument("kind", choices=("ball", "polytope", "punctured", "skewed-pair"))
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--r2", type=int, default=4, help="squared radius (ball)")
    g.add_argument("--center", default=None, help="comma-separated center (ball)")
    g.add_argument("--generators", type=int, default=8, help="generator count (polytope)")
    g.add_argument("--half-width", type=int, default=10, help="box half width (polytope)")
    g.add_argument("--base", default=None, help="input file to puncture (punctured)")
    g.add_argument("--k", type=int, default=1, help="skew parameter (skewed-pair)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--out", default="-")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="run benchmark suites and emit CSV")
    b.add_argument("suite", choices=bench.SUITES + ("all",))
    b.add_argument("--sizes", type=int, nargs="+", default=None)
    b.add_argument("--seeds", type=int, nargs="+", default=[0])
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("-o", "--out", default="-")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
