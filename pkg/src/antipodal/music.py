"""
Tritone-free scales on the 12-tone pitch clock.

Pitch class k (C = 0, C# = 1, ...) sits at angle 30*k degrees, counterclockwise
from C. Pitch classes six semitones apart (a tritone) are antipodal, so an
antipodal polygon is a six-note scale without tritones, and the largest such
polygon is the most evenly spread one.
"""

from __future__ import annotations

import math

from .core import AntipodalSet, Selection
from .solvers import solve_max_area

PITCH_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")


def music_clock_set() -> tuple[AntipodalSet, tuple[str, ...]]:
    """Six pairs at 0, 30, ..., 150 degrees; labels for all 12 positions by point index."""
    return AntipodalSet([math.radians(30 * k) for k in range(6)]), PITCH_NAMES


def scale_notes(sel: Selection) -> list[str]:
    """Note names of a selection, sorted by pitch class."""
    pcs = sorted(k + 6 * b for k, b in enumerate(sel))
    return [PITCH_NAMES[p] for p in pcs]


def has_tritone(pitch_classes) -> bool:
    pcs = set(p % 12 for p in pitch_classes)
    return any((p + 6) % 12 in pcs for p in pcs)


def max_even_scale():
    """(selection, area, note names) of the largest tritone-free six-note polygon."""
    aset, _ = music_clock_set()
    res = solve_max_area(aset)
    return res.selection, res.area, scale_notes(res.selection)
