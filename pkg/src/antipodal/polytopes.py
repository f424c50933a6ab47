"""
Antipodal point sets on the unit sphere in R^d.

Convex hulls here are small (a few dozen points at most), so facets are found
by brute force over d-subsets. Coplanar points on a facet are merged into a
single facet whose (d-1)-volume is computed recursively in the facet plane.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import AntipodalSet, GeometryError, Selection, make_antipodal_set, thick_threshold

HULL_TOL = 1e-9
MAX_HULL_POINTS = 25
MAX_HEMI_POINTS = 30

# selections over d-dimensional sets use the same bit convention as planar ones
SelectionD = Selection


@dataclass(frozen=True)
class Facet:
    vertices: tuple[int, ...]  # indices of every input point on the facet plane
    normal: np.ndarray  # outward unit normal
    offset: float  # facet plane is {x : normal . x = offset}


@dataclass(frozen=True)
class HullResult:
    facets: list[Facet]
    volume: float
    origin_inside: bool


class AntipodalSetD:
    """n antipodal pairs on the unit sphere in R^d, one unit vector per pair."""

    def __init__(self, vectors, tol: float = 1e-9):
        v = np.array(vectors, dtype=float)
        if v.ndim != 2:
            raise GeometryError("vectors must be a 2-D array (one row per pair)")
        n, d = v.shape
        if d < 2:
            raise GeometryError(f"dimension must be at least 2, got {d}")
        if n < d:
            raise GeometryError(f"need at least d={d} pairs, got {n}")
        if np.any(np.abs(np.linalg.norm(v, axis=1) - 1.0) > tol):
            raise GeometryError("every representative must be a unit vector")
        g = np.abs(v @ v.T)
        np.fill_diagonal(g, 0.0)
        if np.any(g >= 1.0 - tol):
            raise GeometryError("two pairs lie on the same line through the origin")
        v.setflags(write=False)
        self.vectors = v

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    @property
    def d(self) -> int:
        return self.vectors.shape[1]

    def vertices(self, sel: Selection) -> np.ndarray:
        if len(sel) != self.n:
            raise ValueError(f"selection has {len(sel)} bits but the set has {self.n} pairs")
        sign = 1.0 - 2.0 * sel.bits.astype(float)
        return self.vectors * sign[:, None]


def _affine_rank(pts: np.ndarray, tol: float) -> int:
    if len(pts) < 2:
        return 0
    s = np.linalg.svd(pts[1:] - pts[0], compute_uv=False)
    return int(np.sum(s > tol))


def _simplex_volume(pts: np.ndarray) -> float:
    """k-volume of the simplex on k+1 points in R^d (Gram determinant)."""
    e = pts[1:] - pts[0]
    k = len(e)
    return math.sqrt(max(np.linalg.det(e @ e.T), 0.0)) / math.factorial(k)


def _facets(P: np.ndarray, tol: float) -> list[Facet]:
    m, d = P.shape
    found: dict[frozenset, Facet] = {}
    for combo in itertools.combinations(range(m), d):
        A = P[list(combo)]
        _, s, vt = np.linalg.svd(A[1:] - A[0])
        if d > 1 and s[-1] <= tol:
            continue
        normal = vt[-1]
        offset = float(normal @ A[0])
        side = P @ normal - offset
        if np.all(side <= tol):
            pass
        elif np.all(side >= -tol):
            normal, offset, side = -normal, -offset, -side
        else:
            continue
        on = frozenset(np.flatnonzero(np.abs(side) <= tol).tolist())
        if on not in found:
            found[on] = Facet(tuple(sorted(on)), normal, offset)
    return list(found.values())


def _facet_area(P: np.ndarray, facet: Facet, tol: float) -> float:
    Q = P[list(facet.vertices)]
    d = P.shape[1]
    if len(Q) == d:
        return _simplex_volume(Q)
    # orthonormal coordinates inside the facet plane
    _, _, vt = np.linalg.svd(Q[1:] - Q[0])
    local = (Q - Q[0]) @ vt[: d - 1].T
    return _volume(local, tol)


def _volume(P: np.ndarray, tol: float) -> float:
    d = P.shape[1]
    if d == 1:
        return float(P.max() - P.min())
    center = P.mean(axis=0)
    total = 0.0
    for f in _facets(P, tol):
        height = f.offset - float(f.normal @ center)
        total += _facet_area(P, f, tol) * height / d
    return total


def hull_volume(points) -> HullResult:
    """Facets, volume and origin containment of the convex hull of a small point set."""
    P = np.array(points, dtype=float)
    if P.ndim != 2:
        raise GeometryError("points must be a 2-D array")
    m, d = P.shape
    if m > MAX_HULL_POINTS:
        raise GeometryError(f"hull oracle limited to {MAX_HULL_POINTS} points, got {m}")
    tol = HULL_TOL * max(1.0, float(np.abs(P).max()))
    if m < d + 1 or _affine_rank(P, tol) < d:
        raise GeometryError("points are not full-dimensional")
    facets = _facets(P, tol)
    center = P.mean(axis=0)
    volume = 0.0
    for f in facets:
        volume += _facet_area(P, f, tol) * (f.offset - float(f.normal @ center)) / d
    inside = all(f.offset > tol for f in facets)
    return HullResult(facets, volume, inside)


def _check_eps(eps: float, hi: float) -> None:
    if not 0.0 < eps < hi:
        raise ValueError(f"epsilon must lie in (0, {hi:.6g}), got {eps}")


def build_counterexample_3d(eps: float) -> tuple[np.ndarray, np.ndarray]:
    """Two antipodal polytopes on five pairs in R^3: a thin one with twice the volume.

    S1 is a square pyramid with apex (0, 0, 1) and base just above the origin;
    S2 flips the apex and one base corner and contains the origin.
    """
    _check_eps(eps, 0.3)
    delta = math.sqrt(1.0 - 2.0 * eps * eps)
    S1 = np.array(
        [
            [0.0, 0.0, 1.0],
            [delta, eps, eps],
            [-delta, eps, eps],
            [eps, delta, eps],
            [eps, -delta, eps],
        ]
    )
    S2 = S1.copy()
    S2[0] *= -1.0
    S2[1] *= -1.0
    _self_check(S1, S2)
    return S1, S2


def build_counterexample_d(d: int, eps: float) -> tuple[np.ndarray, np.ndarray]:
    """The same construction on 2d-1 pairs in R^d.

    T1 is the apex e_d over 2(d-1) base points at height eps: for each axis
    i < d, the points +-delta*e_i with every other coordinate at +eps. T2
    flips the apex and the +delta point of every base axis except the last.
    """
    if not 3 <= d <= 6:
        raise ValueError(f"d must lie in [3, 6], got {d}")
    _check_eps(eps, 1.0 / math.sqrt(d - 1))
    delta = math.sqrt(1.0 - (d - 1) * eps * eps)
    rows = [np.eye(d)[d - 1]]
    for axis in range(d - 1):
        for sign in (1.0, -1.0):
            v = np.full(d, eps)
            v[axis] = sign * delta
            rows.append(v)
    T1 = np.array(rows)
    T2 = T1.copy()
    T2[0] *= -1.0
    for axis in range(d - 2):
        T2[1 + 2 * axis] *= -1.0
    _self_check(T1, T2)
    return T1, T2


def _self_check(thin: np.ndarray, fat: np.ndarray) -> None:
    if hull_volume(thin).origin_inside or not hull_volume(fat).origin_inside:
        raise GeometryError("construction failed its origin-containment self-check")


def _null_vectors(subsets: np.ndarray, tol: float) -> np.ndarray:
    """Unit normals of the hyperplanes through the origin spanned by each row-subset."""
    _, s, vt = np.linalg.svd(subsets)
    keep = s[:, -1] > tol
    return vt[keep, -1, :]


def hemisphere_min_count(points) -> tuple[int, np.ndarray]:
    """Fewest points in any open half-space {x : a . x > 0}, with a witness a.

    The count is piecewise constant on the cells of the arrangement of the
    hyperplanes orthogonal to the points, and never larger on a cell than at
    its corners, so the corners (normals to d-1 of the points) suffice.
    Points within tolerance of the boundary count for neither side.
    """
    P = np.array(points, dtype=float)
    if P.ndim != 2:
        raise GeometryError("points must be a 2-D array")
    m, d = P.shape
    if d < 2:
        raise GeometryError("dimension must be at least 2")
    if m > MAX_HEMI_POINTS:
        raise GeometryError(f"hemisphere counting limited to {MAX_HEMI_POINTS} points, got {m}")
    if m < d or np.linalg.matrix_rank(P, tol=HULL_TOL) < d:
        raise GeometryError("points do not span R^d")
    combos = np.array(list(itertools.combinations(range(m), d - 1)), dtype=np.intp)
    normals = _null_vectors(P[combos], HULL_TOL)
    generic = np.sqrt(np.arange(2, d + 2, dtype=float))
    cands = np.vstack([normals, -normals, generic / np.linalg.norm(generic)])
    counts = np.count_nonzero(cands @ P.T > HULL_TOL, axis=1)
    best = int(np.argmin(counts))
    return int(counts[best]), cands[best]


def is_thick_polytope(setD: AntipodalSetD, sel: Selection) -> bool:
    """Every open half-space through the origin holds at least ceil((n-d)/2) vertices."""
    count, _ = hemisphere_min_count(setD.vertices(sel))
    return count >= thick_threshold(setD.n, setD.d)


def gale_set(d: int, k: int) -> np.ndarray:
    """2k+d-1 unit vectors in R^d with at least k in every open hemisphere.

    Points of the moment curve (1, t, ..., t^(d-1)) at t = 1, 2, ..., with
    alternating signs, normalized onto the sphere.
    """
    if not 2 <= d <= 6:
        raise ValueError(f"d must lie in [2, 6], got {d}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    m = 2 * k + d - 1
    if m > MAX_HEMI_POINTS:
        raise ValueError(f"2k+d-1 = {m} exceeds {MAX_HEMI_POINTS} points")
    t = np.arange(1, m + 1, dtype=float)
    curve = t[:, None] ** np.arange(d)[None, :]
    sign = np.where(np.arange(1, m + 1) % 2 == 0, 1.0, -1.0)
    return sign[:, None] * curve / np.linalg.norm(curve, axis=1, keepdims=True)


def build_thick_polytope(d: int, n: int) -> tuple[AntipodalSetD, Selection]:
    """An antipodal set in R^d admitting a thick polytope, and that polytope."""
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    if not d <= n <= 15:
        raise ValueError(f"n must lie in [d, 15], got {n}")
    k = -(-(n - d + 1) // 2)
    X = gale_set(d, k)[:n]
    setD = AntipodalSetD(X)
    sel = Selection(np.zeros(n, dtype=np.uint8))
    if not is_thick_polytope(setD, sel):
        raise GeometryError(f"Gale construction for d={d}, n={n} is not thick")
    return setD, sel


def to_planar(setD: AntipodalSetD, sel: Selection) -> tuple[AntipodalSet, Selection]:
    """Re-express a 2-dimensional set and selection in the planar representation."""
    if setD.d != 2:
        raise ValueError("only 2-dimensional sets have a planar form")
    verts = setD.vertices(sel)
    phi = np.mod(np.arctan2(verts[:, 1], verts[:, 0]), 2.0 * math.pi)
    aset = make_antipodal_set(phi)
    # bit 1 for vertices on the upper-half-open side [pi, 2pi)
    order = np.argsort(np.mod(phi, math.pi), kind="stable")
    return aset, Selection((phi[order] >= math.pi).astype(np.uint8))
