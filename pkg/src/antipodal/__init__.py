"""Extremal antipodal polygons on the circle and antipodal polytopes in R^d."""

from .core import (
    AntipodalSet,
    GeometryError,
    PolygonGeometry,
    Selection,
    contains_origin,
    is_thick,
    is_thin,
    make_antipodal_set,
    polygon,
    polygon_area,
    regular_set,
)
from .flips import FlipLog, FlipStep, apply_flip3, apply_flip_run, flip_pair, thicken
from .oracle import VerificationReport, brute_extremes, build_even_counterexample, solve_k
from .polytopes import (
    AntipodalSetD,
    build_counterexample_3d,
    build_counterexample_d,
    build_thick_polytope,
    gale_set,
    hemisphere_min_count,
    hull_volume,
    is_thick_polytope,
)
from .setfile import parse_set_file, serialize_set
from .solvers import (
    ExtremalResult,
    solve,
    solve_max_area,
    solve_min_area,
    sweep_profile,
    thick_candidates,
    thin_selection,
)
from .svg import emit_svg

__version__ = "0.1.0"

__all__ = [
    "AntipodalSet",
    "GeometryError",
    "PolygonGeometry",
    "Selection",
    "contains_origin",
    "is_thick",
    "is_thin",
    "make_antipodal_set",
    "polygon",
    "polygon_area",
    "regular_set",
    "AntipodalSetD",
    "build_counterexample_3d",
    "build_counterexample_d",
    "build_thick_polytope",
    "gale_set",
    "hemisphere_min_count",
    "hull_volume",
    "is_thick_polytope",
    "ExtremalResult",
    "solve",
    "solve_max_area",
    "solve_min_area",
    "sweep_profile",
    "thick_candidates",
    "thin_selection",
    "FlipLog",
    "FlipStep",
    "apply_flip3",
    "apply_flip_run",
    "flip_pair",
    "thicken",
    "VerificationReport",
    "brute_extremes",
    "build_even_counterexample",
    "solve_k",
    "parse_set_file",
    "serialize_set",
    "emit_svg",
]
