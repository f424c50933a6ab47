"""
Linear-time minimum- and maximum-area antipodal polygons.

The minimum is attained by a thin polygon: a window of n consecutive points.
Consecutive windows differ by one vertex, so the sweep updates the area with
two triangles per step. The maximum is attained by a thick polygon: for odd n
one of the two alternating polygons, for even n one of 2n alternating
polygons with a single adjacent pair of vertices. For even n the candidates
form one chain of single-pair flips, again with a two-triangle update.

All per-step deltas are O(1) and evaluated as whole numpy arrays; the running
area is their cumulative sum seeded with one from-scratch area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    REL_TOL,
    AntipodalSet,
    Selection,
    alternating_word,
    thick_bits,
)


@dataclass(frozen=True)
class ExtremalResult:
    selection: Selection
    area: float
    optima_count: int


_BLOCK = 1024


def _compensated_sum(x: np.ndarray) -> float:
    """Sum with pairwise blocks combined exactly by fsum.

    Error stays within a few ulps per block, as with Kahan summation, while
    only n / 1024 values pass through Python.
    """
    cut = x.size - x.size % _BLOCK
    parts = x[:cut].reshape(-1, _BLOCK).sum(axis=1).tolist()
    return math.fsum(parts + [float(x[cut:].sum())])


def _initial_area(phi: np.ndarray) -> float:
    """From-scratch area of the polygon on ascending angles ``phi``."""
    gaps = np.diff(phi, append=phi[0] + 2.0 * math.pi)
    return 0.5 * _compensated_sum(np.sin(gaps))


def thin_selection(aset: AntipodalSet, q: int) -> Selection:
    """The thin polygon made of point ``q`` and the n-1 points following it."""
    n = aset.n
    if not 0 <= q < 2 * n:
        raise IndexError(f"point index {q} out of range for {2 * n} points")
    k = np.arange(n)
    # up to q = n the window holds base points q..n-1 and antipodes of the rest
    return Selection(k < q if q <= n else k >= q - n)


def _step_sines(phi: np.ndarray, r: int) -> np.ndarray:
    """sin(phi[k + r] - phi[k]) for k < n.

    Point k + n is point k turned by pi, so over all 2n points these values
    repeat with period n.
    """
    n = phi.size // 2
    return np.sin(phi[r : r + n] - phi[:n])


def _lap_areas(start: float, d: np.ndarray) -> np.ndarray:
    """Running areas over 2n steps whose deltas repeat with period n."""
    n = d.size
    areas = np.empty(2 * n)
    areas[0] = 0.0
    np.cumsum(d, out=areas[1 : n + 1])
    # the second lap repeats the first, offset by one full lap
    np.add(areas[1:n], areas[n], out=areas[n + 1 :])
    areas += start
    return areas


def _thin_profile(aset: AntipodalSet) -> np.ndarray:
    n = aset.n
    s1 = _step_sines(aset.point_angles(), 1)
    # closing chord from point n-1 back to point 0 spans pi minus one gap
    start = 0.5 * (_compensated_sum(s1[: n - 1]) - s1[n - 1])
    # S_i -> S_{i+1} trades triangle (i+n-1, i, i+1) for (i+n-1, i+n, i+1);
    # with point i+n opposite point i the difference collapses to two chords
    d = np.empty(n)
    d[0] = s1[n - 1] - s1[0]
    np.subtract(s1[:-1], s1[1:], out=d[1:])
    return _lap_areas(start, d)


def _thick_chain(n: int) -> np.ndarray:
    """Adjacent-pair positions of the even-n thick candidates in flip-chain order."""
    return (np.arange(2 * n) * (n + 1)) % (2 * n)


def _thick_areas(aset: AntipodalSet) -> np.ndarray:
    """Areas of the even-n thick candidates in flip-chain order."""
    n = aset.n
    s1, s2, s3 = (_step_sines(aset.point_angles(), r) for r in (1, 2, 3))
    # candidate 0 has vertices 0, 1, 3, ..., n-1, n+2, n+4, ..., 2n-2
    start = 0.5 * math.fsum([s1[0], s3[n - 1], _compensated_sum(s2[1 : n - 2 : 2]), _compensated_sum(s2[2 : n - 1 : 2])])
    # flipping pair of point j+1 removes j+1 (neighbours j, j+3) and inserts
    # j+n+1 (neighbours j+n-1, j+n+2); the result has its pair at j+n+1.
    # triangle (x, y, z) has area (sin(y-x) + sin(z-y) - sin(z-x)) / 2, so
    # d[k] = added - removed with
    #   removed = s1[k] + s2[k+1] - s3[k]
    #   added = s2[k-1] - s3[k-1] + s1[k+1]
    # built in place to keep large temporaries down
    d = s3 - s1
    d[1:] += s2[:-1]
    d[0] += s2[-1]
    d[1:] -= s3[:-1]
    d[0] -= s3[-1]
    d[:-1] += s1[1:]
    d[-1] += s1[0]
    d[:-1] -= s2[1:]
    d[-1] -= s2[0]
    d *= 0.5
    # step c of the chain starts from j = c(n+1) mod 2n, and j = c mod n
    return _lap_areas(start, d)


def _odd_areas(aset: AntipodalSet) -> np.ndarray:
    phi = aset.point_angles()
    n = aset.n
    return np.array([_initial_area(phi[alternating_word(n, p).astype(bool)]) for p in (0, 1)])


def _thick_profile(aset: AntipodalSet) -> tuple[np.ndarray, np.ndarray]:
    """(candidate ids, areas) of all thick candidates in sweep order."""
    if aset.n % 2:
        return np.array([0, 1]), _odd_areas(aset)
    return _thick_chain(aset.n), _thick_areas(aset)


def thick_candidate(aset: AntipodalSet, cid: int) -> Selection:
    """Thick candidate by id: the alternation phase (odd n) or adjacent-pair position (even n)."""
    n = aset.n
    if n % 2:
        return Selection.from_word(alternating_word(n, cid))
    return Selection(thick_bits(n, cid))


def thick_candidates(aset: AntipodalSet) -> list[Selection]:
    """All thick selections: 2 for odd n, 2n for even n (ordered by id)."""
    count = 2 if aset.n % 2 else 2 * aset.n
    return [thick_candidate(aset, c) for c in range(count)]


def sweep_profile(aset: AntipodalSet, family: str) -> list[tuple[int, float]]:
    """Areas of every candidate in sweep order, as (candidate id, area)."""
    if family == "thin":
        areas = _thin_profile(aset)
        return list(enumerate(areas.tolist()))
    if family == "thick":
        ids, areas = _thick_profile(aset)
        return list(zip(ids.tolist(), areas.tolist()))
    raise ValueError(f"unknown family {family!r}; expected 'thin' or 'thick'")


def _thin_rank(n: int, q: np.ndarray) -> np.ndarray:
    """Lexicographic rank of the selection of S_q among all 2n windows.

    S_0 is all zeros; S_{n+b} is 0^b 1^(n-b); S_a (1 <= a <= n) is 1^a 0^(n-a).
    """
    return np.where(q == 0, 0, np.where(q > n, 2 * n - q, n - 1 + q))


def _thick_rank(n: int, j: np.ndarray) -> np.ndarray:
    """Lexicographic rank of the even-n thick candidate with its pair at j.

    With s = (n - j) mod 2n taken in [1, 2n], the candidate's bits alternate
    from the first bit (s mod 2 for s <= n, flipped beyond) except for one
    repeated bit near position n - s + 1 or 2n - s + 1. Working out where the
    repeat falls and whether it repeats a 0 gives four linear pieces.
    """
    m = 2 * n
    s = (n - j) % m
    s[s == 0] = m
    odd = (s & 1).astype(bool)
    low = s <= n
    return np.where(
        low,
        np.where(odd, (3 * n - s - 1) // 2, (n - s) // 2),
        np.where(odd, (s - 1) // 2, s // 2 + n - 1),
    )


def _thin_unrank(n: int, r: np.ndarray) -> np.ndarray:
    """Window start q of the thin candidate with lexicographic rank r."""
    return np.where(r == 0, 0, np.where(r < n, 2 * n - r, r - n + 1))


def _thick_unrank(n: int, r: np.ndarray) -> np.ndarray:
    """Sweep position of the even-n thick candidate with lexicographic rank r.

    Inverts the four pieces of the rank to get s, then j = n - s; the chain
    visits j at step j(n+1) mod 2n because (n+1)^2 = 1 mod 2n for even n.
    """
    m = 2 * n
    s = np.where(
        2 * r < n,
        n - 2 * r,
        np.where(r < n, 2 * r + 1, np.where(2 * r < 3 * n, 3 * n - 1 - 2 * r, 2 * (r - n + 1))),
    )
    return ((n - s) % m) * (n + 1) % m


def _odd_unrank(n: int, r: np.ndarray) -> np.ndarray:
    return (n + r + 1) % 2


def _least_tied(n: int, tied: np.ndarray, unrank) -> int:
    """Sweep position of the lexicographically least tied candidate.

    Candidates are visited in rank order in growing chunks, so the work is
    bounded by the winning rank rather than by the number of ties.
    """
    m = tied.size
    lo, size = 0, 64
    while lo < m:
        pos = unrank(n, np.arange(lo, min(m, lo + size)))
        hit = tied[pos]
        if hit.any():
            return int(pos[np.argmax(hit)])
        lo, size = lo + size, 2 * size
    raise ValueError("no tied candidate")


def _selection_area(aset: AntipodalSet, sel: Selection) -> float:
    # chosen base points then chosen antipodes is already ascending order
    picked = sel.bits.astype(bool)
    angles = aset.angles
    return _initial_area(np.concatenate([angles[~picked], angles[picked] + math.pi]))


def _pick(aset, areas, to_id, make, unrank, lowest) -> ExtremalResult:
    best_area = float(areas.min() if lowest else areas.max())
    tol = REL_TOL * max(1.0, abs(best_area))
    # best_area is the extreme, so one comparison finds everything within tol
    tied = areas <= best_area + tol if lowest else areas >= best_area - tol
    # near-regular sets can tie every candidate; rank them without building each
    best = make(aset, to_id(_least_tied(aset.n, tied, unrank)))
    # recompute from scratch so the reported area carries no sweep drift
    return ExtremalResult(best, _selection_area(aset, best), int(np.count_nonzero(tied)))


def _odd_rank(n: int, phase: np.ndarray) -> np.ndarray:
    # the two alternations differ in their first bit, which is (n + phase + 1) % 2
    return (n + phase + 1) % 2


def solve_min_area(aset: AntipodalSet) -> ExtremalResult:
    """Minimum-area antipodal polygon via the thin-window sweep."""
    return _pick(aset, _thin_profile(aset), int, thin_selection, _thin_unrank, True)


def solve_max_area(aset: AntipodalSet) -> ExtremalResult:
    """Maximum-area antipodal polygon via the thick-candidate sweep."""
    n = aset.n
    if n % 2:
        return _pick(aset, _odd_areas(aset), int, thick_candidate, _odd_unrank, False)

    def chain(c):
        # sweep position c holds the candidate with its pair at c(n+1) mod 2n
        return c * (n + 1) % (2 * n)

    return _pick(aset, _thick_areas(aset), chain, thick_candidate, _thick_unrank, False)


def solve(aset: AntipodalSet, objective: str) -> ExtremalResult:
    if objective == "min":
        return solve_min_area(aset)
    if objective == "max":
        return solve_max_area(aset)
    raise ValueError(f"unknown objective {objective!r}; expected 'min' or 'max'")
