"""Command-line interface: ``antipodal <command> ...``.

Exit status is 0 on success, 1 when a verification or construction check
fails, and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import gc
import math
import sys
import time

import numpy as np

from .core import (
    AntipodalSet,
    GeometryError,
    Selection,
    contains_origin,
    is_thick,
    is_thin,
    polygon_area,
)
from .flips import FlipInvariantError, thicken
from .music import has_tritone, max_even_scale, music_clock_set, scale_notes
from .oracle import (
    MAX_VERIFY_N,
    brute_extremes,
    build_even_counterexample,
    jittered_antipodal_set,
    random_antipodal_set,
    solve_k,
    verify_ear_lemma,
    verify_solvers,
    verify_thick_claims,
    verify_thin_theorem,
    VerificationReport,
)
from .polytopes import (
    build_counterexample_3d,
    build_counterexample_d,
    gale_set,
    hemisphere_min_count,
    hull_volume,
)
from .setfile import SetFileError, format_vectors, parse_set_file
from .solvers import solve
from .svg import MAX_OVERLAYS, emit_svg

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

BENCH_SIZES = (1 << 17, 1 << 18, 1 << 19, 1 << 20)


class UsageError(Exception):
    pass


def classify(aset: AntipodalSet, sel: Selection) -> str:
    if is_thin(aset, sel):
        return "thin"
    return "thick" if is_thick(aset, sel) else "neither"


def _selection(aset: AntipodalSet, text: str) -> Selection:
    try:
        sel = Selection(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(sel) != aset.n:
        raise UsageError(f"selection has {len(sel)} bits but the set has {aset.n} pairs")
    return sel


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_solve(args) -> int:
    aset = parse_set_file(args.setfile, args.unit)
    if args.k is None:
        res = solve(aset, args.objective)
        print(f"objective: {args.objective}")
        print(f"n: {aset.n}")
        print(f"selection: {res.selection}")
        print(f"area: {res.area:.6f}")
        print(f"classification: {classify(aset, res.selection)}")
        print(f"optima_count: {res.optima_count}")
        return EXIT_OK
    res = solve_k(aset, args.k, args.objective)
    keep = [p for p in range(aset.n) if p not in res.excluded_pairs]
    sub = aset.subset(keep)
    print(f"objective: {args.objective}")
    print(f"n: {aset.n}")
    print(f"k: {args.k}")
    print(f"excluded_pairs: {' '.join(str(p) for p in res.excluded_pairs) or '-'}")
    print(f"selection: {res.selection}")
    print(f"area: {res.area:.6f}")
    print(f"classification: {classify(sub, res.selection)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    aset = parse_set_file(args.setfile, args.unit)
    sel = _selection(aset, args.selection)
    print(f"selection: {sel}")
    print(f"area: {polygon_area(aset, sel):.6f}")
    print(f"thin: {_yes(is_thin(aset, sel))}")
    print(f"thick: {_yes(is_thick(aset, sel))}")
    print(f"contains_origin: {_yes(contains_origin(aset, sel))}")
    print(f"classification: {classify(aset, sel)}")
    return EXIT_OK


def _merge(reports: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(reports[0].property, reports[0].n, 0)
    for r in reports:
        out.instances_tested += r.instances_tested
        out.violations.extend(r.violations)
    return out


def cmd_verify(args) -> int:
    if not 3 <= args.max_n <= MAX_VERIFY_N:
        raise UsageError(f"--max-n must lie in [3, {MAX_VERIFY_N}]")
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    rng = np.random.default_rng(args.seed)
    checks = (verify_thin_theorem, verify_thick_claims, verify_solvers, verify_ear_lemma)
    failed = 0
    for n in range(3, args.max_n + 1):
        sets = [random_antipodal_set(n, rng) for _ in range(args.trials)]
        for check in checks:
            report = _merge([check(s) for s in sets])
            print(report.to_text())
            print()
            failed += not report.passed
    print(f"summary: {failed} failing report(s)")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_flips(args) -> int:
    aset = parse_set_file(args.setfile, args.unit)
    sel = _selection(aset, args.selection)
    try:
        out, log = thicken(aset, sel)
    except FlipInvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"start: {sel} area {polygon_area(aset, sel):.6f} ({classify(aset, sel)})")
    if log.steps:
        print(log.to_text())
    print(f"steps: {len(log)}")
    print(f"result: {out} area {polygon_area(aset, out):.6f} ({classify(aset, out)})")
    return EXIT_OK


def cmd_counterexample(args) -> int:
    try:
        aset, P, Q = build_even_counterexample(args.n, args.eta)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print("angles_deg:")
    for a in np.degrees(aset.angles):
        print(f"  {a:.6f}")
    area_p, area_q = polygon_area(aset, P), polygon_area(aset, Q)
    print(f"P: {P} area {area_p:.6f} thick {_yes(is_thick(aset, P))}")
    print(f"Q: {Q} area {area_q:.6f} thick {_yes(is_thick(aset, Q))}")
    if area_q > area_p and is_thick(aset, P) and not is_thick(aset, Q):
        print("Q non-thick beats P thick")
        return EXIT_OK
    print("construction did not separate P and Q")
    return EXIT_FAIL


def cmd_polytope(args) -> int:
    try:
        if args.d == 3:
            thin, fat = build_counterexample_3d(args.eps)
        else:
            thin, fat = build_counterexample_d(args.d, args.eps)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    h1, h2 = hull_volume(thin), hull_volume(fat)
    print("first (thin) vertices:")
    print(format_vectors(thin), end="")
    print("second vertices:")
    print(format_vectors(fat), end="")
    print(f"volume_first: {h1.volume:.6f} origin_inside: {_yes(h1.origin_inside)}")
    print(f"volume_second: {h2.volume:.6f} origin_inside: {_yes(h2.origin_inside)}")
    print(f"ratio: {h1.volume / h2.volume:.6f} (limit {2 ** (args.d - 2)})")
    return EXIT_OK


def cmd_gale(args) -> int:
    X = gale_set(args.d, args.k)
    count, witness = hemisphere_min_count(X)
    print(f"points: {len(X)}")
    print(format_vectors(X), end="")
    print(f"hemisphere_min_count: {count}")
    print(f"witness: {' '.join(f'{x:.6f}' for x in witness)}")
    ok = count >= args.k
    print(f"at_least_k: {_yes(ok)}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_scales(args) -> int:
    aset, labels = music_clock_set()
    sel, area, notes = max_even_scale()
    _, ref = brute_extremes(aset)
    pcs = [k + 6 * b for k, b in enumerate(sel)]
    print("pitch clock: C at 0 degrees, one semitone per 30 degrees counterclockwise")
    print(f"positions: {' '.join(labels)}")
    print(f"max-area selection: {sel}")
    print(f"scale: {' '.join(notes)}")
    print(f"area: {area:.6f}")
    print(f"tritone-free: {_yes(not has_tritone(pcs))}")
    ok = abs(area - ref.area) <= 1e-9
    print(f"matches enumeration: {_yes(ok)}")
    low = solve(aset, "min")
    print(f"min-area selection: {low.selection} scale {' '.join(scale_notes(low.selection))} area {low.area:.6f}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_plot(args) -> int:
    aset = parse_set_file(args.setfile, args.unit)
    if args.selection:
        sels = [_selection(aset, s) for s in args.selection]
    else:
        sels = [solve(aset, "min").selection, solve(aset, "max").selection]
    if len(sels) > MAX_OVERLAYS:
        raise UsageError(f"at most {MAX_OVERLAYS} selections can be plotted")
    try:
        size = emit_svg(aset, [(s, i) for i, s in enumerate(sels)], args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {size} bytes to {args.out}")
    return EXIT_OK


def _time_once(fn) -> float:
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def bench_table(sizes, repeats: int, seed: int) -> list[tuple[int, float, float]]:
    """Best-of-``repeats`` wall time of both solvers for each size.

    Sizes are interleaved round by round so a burst of background load on a
    shared machine lands on every size rather than on one of them.
    """
    sets = [jittered_antipodal_set(n, np.random.default_rng([seed, n])) for n in sizes]
    best = {(n, obj): math.inf for n in sizes for obj in ("min", "max")}
    for aset in sets:
        solve(aset, "min")  # warm-up
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            for aset in sets:
                for obj in ("min", "max"):
                    key = (aset.n, obj)
                    best[key] = min(best[key], _time_once(lambda: solve(aset, obj)))
    finally:
        if enabled:
            gc.enable()
    return [(n, best[n, "min"], best[n, "max"]) for n in sizes]


def cmd_bench(args) -> int:
    sizes = args.sizes or list(BENCH_SIZES)
    if min(sizes) < 3:
        raise UsageError("bench sizes must be at least 3")
    rows = bench_table(sizes, args.repeats, args.seed)
    print(f"{'n':>9} {'min_s':>9} {'ratio':>6} {'max_s':>9} {'ratio':>6}")
    prev = None
    for n, tmin, tmax in rows:
        rmin = f"{tmin / prev[1]:6.2f}" if prev else f"{'-':>6}"
        rmax = f"{tmax / prev[2]:6.2f}" if prev else f"{'-':>6}"
        print(f"{n:>9d} {tmin:9.4f} {rmin} {tmax:9.4f} {rmax}")
        prev = (n, tmin, tmax)
    return EXIT_OK


def _add_set_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("setfile", help="text file with one angle per line")
    p.add_argument("--unit", choices=("deg", "rad"), default="deg")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antipodal", description="Extremal antipodal polygons and polytopes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimum or maximum area antipodal polygon")
    _add_set_args(p)
    p.add_argument("--objective", choices=("min", "max"), required=True)
    p.add_argument("--k", type=int, help="polygon size k < n (drops n-k pairs)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="thin / thick flags of one selection")
    _add_set_args(p)
    p.add_argument("--selection", required=True, help="bitstring, pair 0 first, 1 = antipode")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check the solvers and theorems by enumeration")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20, help="random sets per n")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("flips", help="thicken a selection by area-increasing flips")
    _add_set_args(p)
    p.add_argument("--selection", required=True)
    p.set_defaults(func=cmd_flips)

    p = sub.add_parser("counterexample", help="even-n set where a non-thick polygon wins")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--eta", type=float, default=0.01)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("polytope", help="thin polytope with larger volume than a fat one")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--eps", type=float, default=0.01)
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("gale", help="points with at least k in every open hemisphere")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_gale)

    p = sub.add_parser("scales", help="tritone-free scales on the pitch clock")
    p.set_defaults(func=cmd_scales)

    p = sub.add_parser("plot", help="write an SVG of the set and selections")
    _add_set_args(p)
    p.add_argument("--selection", action="append", help="repeat for up to four overlays")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("bench", help="solver timing over doubling n")
    p.add_argument("--sizes", type=int, nargs="+")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, SetFileError, GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run_command(argv))
