"""
Antipodal point sets on the unit circle and the basic predicates on them.

A set of 2n points closed under p -> -p is stored as n pair angles in
[0, pi). Point indices run over [0, 2n): index k < n is the base point of
pair k, index k + n is its antipode. Because the pair angles are sorted,
point indices are already in increasing angular order around the circle.

A selection picks one point per pair (bit 0 = base point, bit 1 = antipode).
Many routines work on the equivalent circular 0/1 word of length 2n, where
word[k] = 1 iff point k is a vertex of the polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

DEFAULT_TOLERANCE = 1e-9
AREA_GUARD = 1e-12
REL_TOL = 1e-9


class GeometryError(ValueError):
    """Raised for degenerate or malformed geometric input."""


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class AntipodalSet:
    """n antipodal pairs on the unit circle, one representative angle each.

    Angles are radians in [0, pi), strictly increasing, consecutive pair lines
    separated by more than ``tolerance`` (including the wrap from the last
    angle back to the first angle plus pi).
    """

    __slots__ = ("angles", "tolerance")

    def __init__(self, angles: Iterable[float], tolerance: float = DEFAULT_TOLERANCE):
        theta = np.array(angles, dtype=float).ravel()
        if theta.size < 3:
            raise GeometryError(f"need at least 3 antipodal pairs, got {theta.size}")
        if not np.all(np.isfinite(theta)):
            raise GeometryError("angles must be finite")
        if theta[0] < 0.0 or theta[-1] >= math.pi:
            raise GeometryError("pair angles must lie in [0, pi)")
        gaps = np.diff(theta)
        if np.any(gaps <= tolerance) or theta[0] + math.pi - theta[-1] <= tolerance:
            raise GeometryError(
                "pair angles must be strictly increasing and separated by more than the tolerance"
            )
        object.__setattr__(self, "angles", _frozen(theta))
        object.__setattr__(self, "tolerance", float(tolerance))

    def __setattr__(self, name, value):
        raise AttributeError("AntipodalSet is immutable")

    @property
    def n(self) -> int:
        return int(self.angles.size)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, AntipodalSet):
            return NotImplemented
        return self.tolerance == other.tolerance and np.array_equal(self.angles, other.angles)

    __hash__ = None

    def __repr__(self) -> str:
        if self.n <= 8:
            body = ", ".join(f"{math.degrees(a):.6g}" for a in self.angles)
            return f"AntipodalSet(n={self.n}, degrees=[{body}])"
        return f"AntipodalSet(n={self.n})"

    def point_angles(self) -> np.ndarray:
        """Angles of all 2n points in index order (ascending in [0, 2*pi))."""
        return np.concatenate([self.angles, self.angles + math.pi])

    def points(self) -> np.ndarray:
        phi = self.point_angles()
        return np.column_stack([np.cos(phi), np.sin(phi)])

    def pair_of(self, point: int) -> int:
        return point % self.n

    def subset(self, pairs: Sequence[int]) -> "AntipodalSet":
        """The antipodal set restricted to the given pairs (kept in angular order)."""
        idx = sorted(set(int(p) for p in pairs))
        return AntipodalSet(self.angles[idx], self.tolerance)


class Selection:
    """One bit per antipodal pair: 0 picks the base point, 1 its antipode."""

    __slots__ = ("bits",)

    def __init__(self, bits: Iterable[int] | str):
        if isinstance(bits, str):
            if not bits or set(bits) - {"0", "1"}:
                raise ValueError(f"selection must be a non-empty 0/1 string, got {bits!r}")
            arr = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
        else:
            arr = np.asarray(bits)
            if arr.dtype != np.uint8:
                arr = arr.astype(np.int64)
            arr = arr.ravel()
            if arr.size and (arr.min() < 0 or arr.max() > 1):
                raise ValueError("selection bits must be 0 or 1")
        object.__setattr__(self, "bits", _frozen(arr.astype(np.uint8)))

    def __setattr__(self, name, value):
        raise AttributeError("Selection is immutable")

    @classmethod
    def from_word(cls, word: np.ndarray) -> "Selection":
        """Selection from a circular vertex word of length 2n."""
        n = len(word) // 2
        return cls(np.asarray(word[n:], dtype=np.uint8))

    def word(self) -> np.ndarray:
        """Circular 0/1 word of length 2n; word[k] = 1 iff point k is a vertex."""
        b = self.bits
        return np.concatenate([1 - b, b]).astype(np.uint8)

    def complement(self) -> "Selection":
        return Selection(1 - self.bits)

    def key(self) -> bytes:
        """Sort key; byte order equals lexicographic order of the bits."""
        return self.bits.tobytes()

    def __len__(self) -> int:
        return int(self.bits.size)

    def __iter__(self):
        return iter(self.bits.tolist())

    def __getitem__(self, i):
        return int(self.bits[i])

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = Selection(other)
        if not isinstance(other, Selection):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    def __lt__(self, other: "Selection") -> bool:
        return self.key() < other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __str__(self) -> str:
        return (self.bits + ord("0")).tobytes().decode("ascii")

    def __repr__(self) -> str:
        return f"Selection('{self}')"


@dataclass(frozen=True)
class PolygonGeometry:
    """Vertices of an antipodal polygon in counterclockwise order, plus its area."""

    vertices: np.ndarray
    angles: np.ndarray
    area: float


def make_antipodal_set(
    raw_angles: Iterable[float],
    unit: str = "radians",
    tolerance: float = DEFAULT_TOLERANCE,
) -> AntipodalSet:
    """Canonicalize arbitrary point angles into an :class:`AntipodalSet`.

    Each angle is reduced modulo pi (a point and its antipode name the same
    pair) and the result is sorted. Two inputs that land within ``tolerance``
    of each other, either directly or across the 0/pi seam, are rejected.
    """
    raw = np.array(list(raw_angles), dtype=float).ravel()
    if raw.size == 0:
        raise GeometryError("no angles given")
    if unit in ("deg", "degrees"):
        raw = np.radians(raw)
    elif unit not in ("rad", "radians"):
        raise ValueError(f"unknown angle unit {unit!r}")
    theta = np.mod(raw, math.pi)
    theta[theta >= math.pi] -= math.pi
    theta.sort()
    if theta.size < 3:
        raise GeometryError(f"need at least 3 antipodal pairs, got {theta.size}")
    gaps = np.diff(theta)
    bad = np.flatnonzero(gaps <= tolerance)
    if bad.size:
        i = int(bad[0])
        raise GeometryError(
            f"duplicate antipodal pair: angles {math.degrees(theta[i]):.12g} and "
            f"{math.degrees(theta[i + 1]):.12g} degrees coincide modulo 180"
        )
    if theta[0] + math.pi - theta[-1] <= tolerance:
        raise GeometryError(
            f"duplicate antipodal pair: angles {math.degrees(theta[0]):.12g} and "
            f"{math.degrees(theta[-1]):.12g} degrees coincide modulo 180"
        )
    return AntipodalSet(theta, tolerance)


def regular_set(n: int) -> AntipodalSet:
    """n pairs equally spaced over the half circle: angles k*pi/n."""
    return AntipodalSet(np.arange(n) * (math.pi / n))


def _check(aset: AntipodalSet, sel: Selection) -> None:
    if len(sel) != aset.n:
        raise ValueError(f"selection has {len(sel)} bits but the set has {aset.n} pairs")


def vertex_angles(aset: AntipodalSet, sel: Selection) -> np.ndarray:
    """Angles of the selected vertices, ascending in [0, 2*pi)."""
    _check(aset, sel)
    return aset.point_angles()[sel.word().astype(bool)]


def polygon(aset: AntipodalSet, sel: Selection) -> PolygonGeometry:
    phi = vertex_angles(aset, sel)
    xy = np.column_stack([np.cos(phi), np.sin(phi)])
    return PolygonGeometry(_frozen(xy), _frozen(phi), _shoelace(xy))


def _shoelace(xy: np.ndarray) -> float:
    x, y = xy[:, 0], xy[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def polygon_area(aset: AntipodalSet, sel: Selection) -> float:
    """Area of the antipodal polygon (shoelace over the vertices in angular order)."""
    return polygon(aset, sel).area


def _max_gap(phi: np.ndarray) -> float:
    gaps = np.diff(phi)
    wrap = phi[0] + 2.0 * math.pi - phi[-1]
    return max(float(gaps.max()) if gaps.size else 0.0, wrap)


def is_thin(aset: AntipodalSet, sel: Selection) -> bool:
    """True iff all vertices lie in a half-plane bounded by a line through the origin."""
    return _max_gap(vertex_angles(aset, sel)) > math.pi


def thick_threshold(n: int, d: int = 2) -> int:
    """Minimum vertex count per open side required of a thick polygon/polytope."""
    return max(0, -(-(n - d) // 2))


def window_counts(word: np.ndarray) -> np.ndarray:
    """Number of vertices in each run of n consecutive points, for every start.

    Entry k counts vertices among points k..k+n-1, which is exactly the open
    half-plane swept between the bisectors just before point k and just
    before point k+n.
    """
    word = np.asarray(word, dtype=np.int64)
    n = word.size // 2
    c = np.concatenate([[0], np.cumsum(np.concatenate([word, word]))])
    return c[n : 3 * n] - c[0 : 2 * n]


def is_thick(aset: AntipodalSet, sel: Selection) -> bool:
    """True iff every open half-plane through the origin holds enough vertices.

    One representative line per angular interval between consecutive points
    of the set is enough: the side counts are constant inside an interval.
    """
    _check(aset, sel)
    n = aset.n
    counts = window_counts(sel.word())
    return int(np.minimum(counts, n - counts).min()) >= thick_threshold(n)


def contains_origin(aset: AntipodalSet, sel: Selection) -> bool:
    """True iff the origin lies strictly inside the polygon (edge orientation test)."""
    xy = polygon(aset, sel).vertices
    nxt = np.roll(xy, -1, axis=0)
    # cross(b - a, 0 - a) = a x b for the origin; > 0 means origin to the left
    cross = xy[:, 0] * nxt[:, 1] - xy[:, 1] * nxt[:, 0]
    return bool(np.all(cross > AREA_GUARD))


def triangle_area(a, b, c) -> float:
    """Unsigned area of a planar triangle."""
    return 0.5 * abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]))


def ear_is_minimal(aset: AntipodalSet, pair: int, sign: int) -> bool:
    """Check that the ear at a point is the strictly smallest triangle across its diameter.

    The point q is pair ``pair`` (0-based) if ``sign`` is 0, else its antipode.
    Every triangle with apex q and one point of the set strictly on each side
    of the line through q and -q is compared against the triangle formed by
    q and its two circular neighbours.
    """
    n = aset.n
    if not 0 <= pair < n or sign not in (0, 1):
        raise IndexError(f"no point ({pair}, {sign}) in a set of {n} pairs")
    pts = aset.points()
    m = 2 * n
    q = pair + n * sign
    ear = triangle_area(pts[q], pts[(q - 1) % m], pts[(q + 1) % m])
    left = [(q + t) % m for t in range(1, n)]
    right = [(q + n + t) % m for t in range(1, n)]
    for a in left:
        for b in right:
            if {a, b} == {(q + 1) % m, (q - 1) % m}:
                continue
            if triangle_area(pts[q], pts[a], pts[b]) <= ear + AREA_GUARD:
                return False
    return True


def alternating_word(n: int, phase: int) -> np.ndarray:
    """Word of length 2n with word[k] = 1 iff (k + phase) is even (n odd only)."""
    return ((np.arange(2 * n) + phase + 1) % 2).astype(np.uint8)


def thick_word(n: int, j: int) -> np.ndarray:
    """Thick word for even n with its adjacent pair of vertices at points j, j+1.

    The rest alternates; the antipodal pair j+n, j+n+1 holds two non-vertices.
    """
    m = 2 * n
    t = (np.arange(m) - j) % m
    # positions j+1 .. j+n alternate starting with a vertex at j+1
    w = np.where(t <= n, (t % 2 == 1) | (t == 0), (t - n) % 2 == 0)
    return w.astype(np.uint8)


def thick_bits(n: int, j: int) -> np.ndarray:
    """Selection bits of ``thick_word(n, j)`` built without the full word.

    With s = (n - j) mod 2n in [1, 2n], bit i is (s + i) mod 2, inverted on
    the last s - 1 positions when s <= n and on the first 2n - s + 1 otherwise.
    """
    s = (n - j) % (2 * n) or 2 * n
    bits = np.empty(n, dtype=np.uint8)
    bits[0::2] = s & 1
    bits[1::2] = 1 - (s & 1)
    if s <= n:
        bits[n - s + 1 :] ^= 1
    else:
        bits[: 2 * n - s + 1] ^= 1
    return bits


def is_alternating_pattern(sel: Selection) -> bool:
    """True iff the vertex word alternates, allowing (even n) one adjacent vertex pair.

    These are exactly the selections on which no area-increasing flip applies.
    Every such selection is thick; for even n >= 6 the converse fails (a word
    made of any mix of "01"/"10" blocks is thick as well).
    """
    w = sel.word()
    n = len(sel)
    equal = int(np.count_nonzero(w == np.roll(w, -1)))
    return equal == (0 if n % 2 else 2)
