"""Plain-text formats: angle set files and rows of d-vectors."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import DEFAULT_TOLERANCE, AntipodalSet, GeometryError, make_antipodal_set


class SetFileError(ValueError):
    pass


def parse_set_text(text: str, unit: str = "deg", tolerance: float = DEFAULT_TOLERANCE) -> AntipodalSet:
    """One angle per line; blank lines and ``#`` comments are skipped."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise SetFileError(f"line {lineno}: cannot parse angle {line!r}") from None
    if not values:
        raise SetFileError("no angles found")
    try:
        return make_antipodal_set(values, unit=unit, tolerance=tolerance)
    except GeometryError as exc:
        raise SetFileError(str(exc)) from None


def parse_set_file(path, unit: str = "deg", tolerance: float = DEFAULT_TOLERANCE) -> AntipodalSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SetFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_set_text(text, unit=unit, tolerance=tolerance)


def serialize_set(aset: AntipodalSet, unit: str = "deg") -> str:
    """Angles of the pair representatives, 12 decimals, one per line."""
    if unit in ("deg", "degrees"):
        vals = np.degrees(aset.angles)
    elif unit in ("rad", "radians"):
        vals = aset.angles
    else:
        raise ValueError(f"unknown angle unit {unit!r}")
    return "".join(f"{v:.12f}\n" for v in vals)


def format_vectors(rows) -> str:
    return "".join(" ".join(f"{x:.12f}" for x in row) + "\n" for row in np.asarray(rows))


def parse_vectors(text: str) -> np.ndarray:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [float(tok) for tok in line.split()]
        except ValueError:
            raise SetFileError(f"line {lineno}: cannot parse {line!r}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise SetFileError(f"line {lineno}: expected {width} coordinates, got {len(row)}")
        rows.append(row)
    if not rows:
        raise SetFileError("no vectors found")
    return np.array(rows)

