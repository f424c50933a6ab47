"""
Exhaustive ground truth for the planar results.

Everything here enumerates selections outright and measures them with the
coordinate shoelace formula, independent of the sweep code in
:mod:`antipodal.solvers`. Selections are enumerated as binary counters with
pair 0 as the most significant bit, so counter order is lexicographic order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .core import (
    AREA_GUARD,
    REL_TOL,
    AntipodalSet,
    GeometryError,
    Selection,
    ear_is_minimal,
    is_thick,
    is_thin,
    make_antipodal_set,
    polygon_area,
    thick_threshold,
    thick_word,
)
from .solvers import ExtremalResult, solve

MAX_ENUM_N = 24
MAX_VERIFY_N = 16
_CHUNK = 1 << 15


@dataclass
class VerificationReport:
    property: str
    n: int
    instances_tested: int
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        lines = [
            f"property: {self.property}",
            f"n: {self.n}",
            f"instances_tested: {self.instances_tested}",
            f"violations: {len(self.violations)}",
        ]
        for v in self.violations[:5]:
            lines.append(f"  - {v}")
        lines.append(f"passed: {'yes' if self.passed else 'no'}")
        return "\n".join(lines)


@dataclass(frozen=True)
class KPolygonResult:
    excluded_pairs: tuple[int, ...]
    selection: Selection  # bits over the included pairs, in angular order
    area: float

    @property
    def k(self) -> int:
        return len(self.selection)


def counter_bits(n: int, start: int, stop: int) -> np.ndarray:
    """Rows of selection bits for counters start..stop-1 (pair 0 most significant)."""
    c = np.arange(start, stop, dtype=np.int64)[:, None]
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((c >> shifts) & 1).astype(np.uint8)


def _words(bits: np.ndarray) -> np.ndarray:
    return np.concatenate([1 - bits, bits], axis=1)


def _measure(aset: AntipodalSet, bits: np.ndarray, want_classes: bool = False):
    """Shoelace areas (and optionally thin/thick flags) for many selections at once."""
    n = aset.n
    words = _words(bits)
    cols = np.nonzero(words)[1].reshape(len(bits), n)
    xy = aset.points()
    x, y = xy[cols, 0], xy[cols, 1]
    xn, yn = np.roll(x, -1, axis=1), np.roll(y, -1, axis=1)
    areas = 0.5 * np.sum(x * yn - xn * y, axis=1)
    if not want_classes:
        return areas
    phi = aset.point_angles()[cols]
    gaps = np.diff(phi, axis=1, append=phi[:, :1] + 2.0 * math.pi)
    thin = gaps.max(axis=1) > math.pi
    csum = np.concatenate(
        [np.zeros((len(bits), 1), dtype=np.int64), np.cumsum(np.tile(words, 2), axis=1)], axis=1
    )
    counts = csum[:, n : 3 * n] - csum[:, : 2 * n]
    thick = np.minimum(counts, n - counts).min(axis=1) >= thick_threshold(n)
    return areas, thin, thick


def _chunks(n: int, total: int):
    for lo in range(0, total, _CHUNK):
        yield lo, counter_bits(n, lo, min(total, lo + _CHUNK))


def all_areas(aset: AntipodalSet, half: bool = False) -> np.ndarray:
    """Areas of all 2^n selections in counter order (or the first 2^(n-1) if ``half``)."""
    n = aset.n
    if n > MAX_ENUM_N:
        raise ValueError(f"n={n} too large for enumeration (limit {MAX_ENUM_N})")
    total = 1 << (n - 1 if half else n)
    return np.concatenate([_measure(aset, b) for _, b in _chunks(n, total)])


def brute_extremes(aset: AntipodalSet) -> tuple[ExtremalResult, ExtremalResult]:
    """Exact (min, max) over all selections with lexicographic tie-break.

    Only selections with pair 0 at its base point are measured: a selection
    and its complement are point reflections of each other, and the
    lexicographically smaller of the two always has a leading 0.
    """
    n = aset.n
    areas = all_areas(aset, half=True)
    out = []
    for best in (float(areas.min()), float(areas.max())):
        tol = REL_TOL * max(1.0, abs(best))
        tied = np.flatnonzero(np.abs(areas - best) <= tol)
        sel = Selection(counter_bits(n, int(tied[0]), int(tied[0]) + 1)[0])
        out.append(ExtremalResult(sel, polygon_area(aset, sel), 2 * int(tied.size)))
    return out[0], out[1]


def _classified(aset: AntipodalSet):
    n = aset.n
    if n > MAX_VERIFY_N:
        raise ValueError(f"n={n} too large for exhaustive verification (limit {MAX_VERIFY_N})")
    parts = [_measure(aset, b, want_classes=True) for _, b in _chunks(n, 1 << (n - 1))]
    areas = np.concatenate([p[0] for p in parts])
    thin = np.concatenate([p[1] for p in parts])
    thick = np.concatenate([p[2] for p in parts])
    return areas, thin, thick


def _sel(n: int, counter: int) -> str:
    return format(counter, f"0{n}b")


def verify_thin_theorem(aset: AntipodalSet) -> VerificationReport:
    """Every thin polygon is strictly smaller than every non-thin one."""
    n = aset.n
    areas, thin, _ = _classified(aset)
    report = VerificationReport("thin_below_non_thin", n, 1 << n)
    if thin.any() and (~thin).any():
        i = int(np.flatnonzero(thin)[np.argmax(areas[thin])])
        j = int(np.flatnonzero(~thin)[np.argmin(areas[~thin])])
        if not areas[j] - areas[i] > AREA_GUARD:
            report.violations.append(
                ((_sel(n, i), _sel(n, j)), (float(areas[i]), float(areas[j])))
            )
    return report


def verify_thick_claims(aset: AntipodalSet) -> VerificationReport:
    """Some thick polygon beats each non-thick one; for odd n, every thick one does.

    For odd n the two thick polygons must also have equal area (to 1e-12).
    """
    n = aset.n
    areas, _, thick = _classified(aset)
    report = VerificationReport("thick_beats_non_thick", n, 1 << n)
    if not thick.any():
        report.violations.append(("no thick selection", ()))
        return report
    if (~thick).any():
        k = int(np.flatnonzero(~thick)[np.argmax(areas[~thick])])
        best_thick = int(np.flatnonzero(thick)[np.argmax(areas[thick])])
        if not areas[best_thick] - areas[k] > AREA_GUARD:
            report.violations.append(
                ((_sel(n, best_thick), _sel(n, k)), (float(areas[best_thick]), float(areas[k])))
            )
        if n % 2:
            worst = int(np.flatnonzero(thick)[np.argmin(areas[thick])])
            if not areas[worst] - areas[k] > AREA_GUARD:
                report.violations.append(
                    ((_sel(n, worst), _sel(n, k)), (float(areas[worst]), float(areas[k])))
                )
    if n % 2:
        # half enumeration holds one of the two alternating selections; its
        # complement is the other one
        t = int(np.flatnonzero(thick)[0])
        sel = Selection(_sel(n, t))
        a, b = polygon_area(aset, sel), polygon_area(aset, sel.complement())
        if abs(a - b) > AREA_GUARD:
            report.violations.append(((str(sel), str(sel.complement())), (a, b)))
    return report


def verify_solvers(aset: AntipodalSet) -> VerificationReport:
    """Linear solvers agree with enumeration on value, selection and class."""
    n = aset.n
    bmin, bmax = brute_extremes(aset)
    report = VerificationReport("solvers_match_enumeration", n, 1 << n)
    for objective, ref in (("min", bmin), ("max", bmax)):
        got = solve(aset, objective)
        if abs(got.area - ref.area) > REL_TOL * max(1.0, abs(ref.area)):
            report.violations.append((objective, (str(got.selection), str(ref.selection)), (got.area, ref.area)))
        ok_class = is_thin(aset, got.selection) if objective == "min" else is_thick(aset, got.selection)
        if not ok_class:
            report.violations.append((objective, str(got.selection), "wrong class"))
    return report


def verify_ear_lemma(aset: AntipodalSet) -> VerificationReport:
    n = aset.n
    report = VerificationReport("ear_is_minimal", n, 2 * n)
    for q in range(2 * n):
        if not ear_is_minimal(aset, q % n, q // n):
            report.violations.append(((q % n, q // n), ()))
    return report


def build_even_counterexample(n: int, eta: float) -> tuple[AntipodalSet, Selection, Selection]:
    """Point set on which a non-thick polygon Q beats a thick polygon P (even n >= 6).

    Pairs 0 and 1 sit at angles eta and 2*eta, near (1, 0); the remaining pairs
    sit at pi/2 + eta, pi/2 + 2*eta, ..., near (0, 1). P is the thick polygon
    holding both points near (1, 0). Q takes p_1, -p_2, p_3, -p_4 and the
    antipode of every later pair, which leaves three consecutive non-vertices.
    """
    if n < 6 or n % 2:
        raise ValueError(f"n must be even and at least 6, got {n}")
    if not 0 < eta < math.pi / (4 * n):
        raise ValueError(f"eta must lie in (0, pi/(4n)) = (0, {math.pi / (4 * n):.6g}), got {eta}")
    angles = [eta, 2 * eta] + [math.pi / 2 + (i - 2) * eta for i in range(3, n + 1)]
    aset = make_antipodal_set(angles)
    P = Selection.from_word(thick_word(n, 0))
    Q = Selection([0, 1, 0, 1] + [1] * (n - 4))
    if not is_thick(aset, P) or is_thick(aset, Q):
        raise GeometryError("counterexample construction failed its thickness self-check")
    return aset, P, Q


def solve_k(
    aset: AntipodalSet, k: int, objective: str, budget: int = 10**7
) -> KPolygonResult:
    """Extremal antipodal k-gon: drop n-k pairs every possible way, solve the rest.

    Ties are broken by the excluded-pair tuple, then by the selection.
    """
    n = aset.n
    if not 3 <= k <= n:
        raise ValueError(f"k must satisfy 3 <= k <= n={n}, got {k}")
    if objective not in ("min", "max"):
        raise ValueError(f"unknown objective {objective!r}")
    total = comb(n, n - k)
    if total > budget:
        raise ValueError(f"{total} sub-problems exceed the budget of {budget}")
    subsets = list(itertools.combinations(range(n), n - k))
    areas = []
    for excl in subsets:
        keep = [p for p in range(n) if p not in excl]
        areas.append(solve(aset.subset(keep), objective).area)
    arr = np.array(areas)
    best = float(arr.min() if objective == "min" else arr.max())
    tol = REL_TOL * max(1.0, abs(best))
    win = subsets[int(np.flatnonzero(np.abs(arr - best) <= tol)[0])]
    keep = [p for p in range(n) if p not in win]
    res = solve(aset.subset(keep), objective)
    return KPolygonResult(tuple(win), res.selection, res.area)


def brute_k(aset: AntipodalSet, k: int, objective: str) -> KPolygonResult:
    """Same problem as :func:`solve_k`, by enumerating every k-gon directly."""
    n = aset.n
    if not 3 <= k <= n:
        raise ValueError(f"k must satisfy 3 <= k <= n={n}, got {k}")
    best = None
    rows = []
    for excl in itertools.combinations(range(n), n - k):
        sub = aset.subset([p for p in range(n) if p not in excl])
        areas = all_areas(sub)
        rows.append((excl, areas))
        val = areas.min() if objective == "min" else areas.max()
        if best is None or (val < best if objective == "min" else val > best):
            best = float(val)
    tol = REL_TOL * max(1.0, abs(best))
    for excl, areas in rows:
        hit = np.flatnonzero(np.abs(areas - best) <= tol)
        if hit.size:
            sel = Selection(counter_bits(k, int(hit[0]), int(hit[0]) + 1)[0])
            sub = aset.subset([p for p in range(n) if p not in excl])
            return KPolygonResult(tuple(excl), sel, polygon_area(sub, sel))
    raise AssertionError("unreachable")


def random_antipodal_set(n: int, rng: np.random.Generator) -> AntipodalSet:
    """n pair angles uniform on [0, pi), redrawn on tolerance collisions."""
    while True:
        try:
            return make_antipodal_set(rng.uniform(0.0, math.pi, n))
        except GeometryError:
            continue


def clustered_antipodal_set(n: int, rng: np.random.Generator, spread: float = 1e-3) -> AntipodalSet:
    """Adversarial input: pair angles bunched into two or three tight clusters."""
    while True:
        centers = rng.uniform(0.0, math.pi, int(rng.integers(2, 4)))
        raw = rng.choice(centers, n) + rng.uniform(-spread, spread, n)
        try:
            return make_antipodal_set(raw)
        except GeometryError:
            continue


def jittered_antipodal_set(n: int, rng: np.random.Generator) -> AntipodalSet:
    """One random angle inside each of n equal slots of [0, pi).

    Uniform draws collide at the 1e-9 tolerance once n reaches about 10^4;
    keeping each angle in the middle of its slot guarantees a gap of 0.2*pi/n.
    """
    offsets = rng.uniform(0.1, 0.9, n)
    return make_antipodal_set((np.arange(n) + offsets) * (math.pi / n))
