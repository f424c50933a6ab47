"""
Area-increasing flip operations and the thickening procedure built on them.

Both operations read the circular vertex word (see :mod:`antipodal.core`)
and scan it from point 0 upward, taking the first match. A pattern and its
antipodal mirror name the same pairs, so either one found first is fine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    AREA_GUARD,
    AntipodalSet,
    Selection,
    is_alternating_pattern,
    is_thick,
    polygon_area,
)


class FlipInvariantError(RuntimeError):
    """A flip failed to increase the area, or thickening did not converge."""


@dataclass(frozen=True)
class FlipStep:
    kind: str  # "flip3" or "flip_run"
    location: int  # point index where the matched pattern starts
    pairs_flipped: tuple[int, ...]
    area_before: float
    area_after: float

    def to_line(self) -> str:
        pairs = ",".join(str(p) for p in self.pairs_flipped)
        return (
            f"{self.kind:<8} at={self.location:<4d} pairs={pairs:<12} "
            f"{self.area_before:.6f} -> {self.area_after:.6f}"
        )


@dataclass
class FlipLog:
    steps: list[FlipStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_text(self) -> str:
        return "\n".join(f"{i:>3d} {s.to_line()}" for i, s in enumerate(self.steps))


def flip_pair(sel: Selection, i: int) -> Selection:
    """Swap the chosen member of pair ``i`` (0-based)."""
    if not 0 <= i < len(sel):
        raise IndexError(f"pair index {i} out of range for {len(sel)} pairs")
    bits = sel.bits.copy()
    bits[i] ^= 1
    return Selection(bits)


def _flip_many(sel: Selection, pairs) -> Selection:
    bits = sel.bits.copy()
    bits[list(pairs)] ^= 1
    return Selection(bits)


def _step(aset, sel, kind, location, pairs) -> tuple[Selection, FlipStep]:
    new = _flip_many(sel, pairs)
    before = polygon_area(aset, sel)
    after = polygon_area(aset, new)
    if not after > before + AREA_GUARD:
        raise FlipInvariantError(
            f"{kind} at point {location} did not increase the area "
            f"({before!r} -> {after!r}) on selection {sel}"
        )
    return new, FlipStep(kind, location, tuple(int(p) for p in pairs), before, after)


def _find_triple(w: np.ndarray) -> int | None:
    hit = np.flatnonzero((w == np.roll(w, -1)) & (w == np.roll(w, -2)))
    return int(hit[0]) if hit.size else None


def apply_flip3(aset: AntipodalSet, sel: Selection) -> tuple[Selection, FlipStep] | None:
    """Flip the middle of the first three consecutive equal-status points, if any."""
    w = sel.word()
    s = _find_triple(w)
    if s is None:
        return None
    n = aset.n
    return _step(aset, sel, "flip3", s, [(s + 1) % n])


def apply_flip_run(aset: AntipodalSet, sel: Selection) -> tuple[Selection, FlipStep] | None:
    """Flip the interior of the first alternating run bounded by two equal pairs.

    A run q_1..q_m starts at an adjacent equal-status pair (q_1, q_2), alternates
    from q_2 to q_{m-1}, and ends at the next adjacent equal-status pair
    (q_{m-1}, q_m). It qualifies when 4 <= m < n; q_2..q_{m-1} are flipped.
    """
    w = sel.word()
    if _find_triple(w) is not None:
        raise ValueError("selection has three consecutive equal points; apply flip3 first")
    n = aset.n
    m2 = 2 * n
    equal = np.flatnonzero(w == np.roll(w, -1))
    for idx, s in enumerate(equal.tolist()):
        t = int(equal[(idx + 1) % equal.size])
        m = (t - s) % m2 + 2
        if 4 <= m < n:
            points = [(s + 1 + i) % m2 for i in range(m - 2)]
            return _step(aset, sel, "flip_run", s, sorted(p % n for p in points))
    return None


def thicken(aset: AntipodalSet, sel: Selection) -> tuple[Selection, FlipLog]:
    """Apply flips until none applies; the result is thick and strictly larger.

    A selection already in the alternating pattern comes back unchanged with
    an empty log.
    """
    n = aset.n
    if len(sel) != n:
        raise ValueError(f"selection has {len(sel)} bits but the set has {n} pairs")
    log = FlipLog()
    limit = n * n
    while True:
        res = apply_flip3(aset, sel)
        if res is None:
            res = apply_flip_run(aset, sel)
        if res is None:
            break
        sel, step = res
        log.steps.append(step)
        if len(log) > limit:
            raise FlipInvariantError(f"thicken exceeded {limit} steps")
    if not (is_alternating_pattern(sel) and is_thick(aset, sel)):
        raise FlipInvariantError(f"no flip applies but {sel} is not thick")
    return sel, log
