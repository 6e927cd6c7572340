"""Point-set and certificate files: exact parsing, deterministic emission.

Coordinates travel as rational literals ("p/q", integers, terminating
decimals); JSON floats are rejected outright so no value is ever rounded on
the way in. Certificates serialize to JSON with sorted keys and fixed
formatting, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .linalg import Vector, parse_rational, render_rational
from .partition import PartitionCertificate
from .radon import RadonCertificate


class ParseError(ValueError):
    """Unreadable or inexact input file."""


@dataclass(frozen=True)
class PointSet:
    dimension: int
    points: tuple[Vector, ...]
    labels: Optional[tuple[str, ...]] = None


def _coordinate(value) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"not a coordinate: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"coordinates must be rational literals or integers, got {value!r}")


def parse_points_csv(text: str) -> PointSet:
    """One point per row, coordinates as rational literals; width fixes the dimension."""
    rows = [row for row in csv.reader(io.StringIO(text)) if row and any(c.strip() for c in row)]
    if not rows:
        raise ParseError("point file contains no rows")
    width = len(rows[0])
    points = []
    for lineno, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ParseError(f"row {lineno} has {len(row)} columns, expected {width}")
        points.append(Vector(_coordinate(cell.strip()) for cell in row))
    return PointSet(dimension=width, points=tuple(points))


def _reject_float(token: str):
    raise ParseError(f"non-integer JSON number {token!r} would be read inexactly; quote it")


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    return data


def parse_points_json(text: str) -> PointSet:
    """Object with explicit "dimension", "points" rows, and optional "labels"."""
    data = _load_json(text)
    if "dimension" not in data or "points" not in data:
        raise ParseError('point JSON needs "dimension" and "points" fields')
    dim = data["dimension"]
    if not isinstance(dim, int) or dim < 0:
        raise ParseError(f'"dimension" must be a nonnegative integer, got {dim!r}')
    rows = data["points"]
    if not isinstance(rows, list) or not rows:
        raise ParseError('"points" must be a nonempty list of coordinate rows')
    points = []
    for k, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"point {k} does not have exactly {dim} coordinates")
        points.append(Vector(_coordinate(c) for c in row))
    labels = None
    if "labels" in data and data["labels"] is not None:
        raw = data["labels"]
        if not isinstance(raw, list) or len(raw) != len(points):
            raise ParseError('"labels" must list one label per point')
        labels = tuple(str(l) for l in raw)
    return PointSet(dimension=dim, points=tuple(points), labels=labels)


def detect_format(path: str | Path, override: Optional[str] = None) -> str:
    if override:
        if override not in ("csv", "json"):
            raise ParseError(f"unknown format {override!r} (expected csv or json)")
        return override
    suffix = Path(path).suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix == ".json":
        return "json"
    raise ParseError(f"cannot infer format from {path!r}; pass --format csv|json")


def load_points(path: str | Path, fmt: Optional[str] = None) -> PointSet:
    kind = detect_format(path, fmt)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_points_csv(text) if kind == "csv" else parse_points_json(text)


def emit_certificate(cert: RadonCertificate | PartitionCertificate) -> str:
    """Deterministic JSON rendering; byte-identical for equal certificates."""
    if isinstance(cert, RadonCertificate):
        kind = "radon"
        r = 2
        groups = [list(cert.group1), list(cert.group2)]
        iterations = 0
    elif isinstance(cert, PartitionCertificate):
        kind = "tverberg"
        r = cert.r
        groups = [list(g) for g in cert.groups]
        iterations = cert.iterations
    else:
        raise TypeError(f"not a certificate: {type(cert).__name__}")
    document = {
        "kind": kind,
        "dimension": cert.common_point.dim,
        "r": r,
        "n_points": len(cert.weights),
        "iterations": iterations,
        "groups": groups,
        "weights": [render_rational(w) for w in cert.weights],
        "common_point": [render_rational(c) for c in cert.common_point],
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def parse_certificate(text: str) -> RadonCertificate | PartitionCertificate:
    data = _load_json(text)
    required = {"kind", "dimension", "r", "n_points", "iterations", "groups", "weights", "common_point"}
    missing = required - data.keys()
    if missing:
        raise ParseError(f"certificate is missing fields: {sorted(missing)}")
    kind = data["kind"]
    if kind not in ("radon", "tverberg"):
        raise ParseError(f"unknown certificate kind {data['kind']!r}")
    r = data["r"]
    groups = data["groups"]
    if not isinstance(r, int) or not isinstance(groups, list) or len(groups) != r:
        raise ParseError("certificate group list does not match r")
    if any(not isinstance(g, list) or any(not isinstance(i, int) for i in g) for g in groups):
        raise ParseError("certificate groups must be lists of integer indices")
    if not isinstance(data["weights"], list) or not isinstance(data["common_point"], list):
        raise ParseError("certificate weights and common_point must be lists")
    weights = tuple(_coordinate(w) for w in data["weights"])
    common = Vector(_coordinate(c) for c in data["common_point"])
    iterations = data["iterations"]
    if not isinstance(iterations, int) or iterations < 0:
        raise ParseError("iterations must be a nonnegative integer")
    if len(data["weights"]) != data["n_points"] or common.dim != data["dimension"]:
        raise ParseError("certificate metadata disagrees with its contents")
    if kind == "radon":
        if r != 2:
            raise ParseError("radon certificates have exactly two groups")
        return RadonCertificate(
            group1=tuple(groups[0]),
            group2=tuple(groups[1]),
            weights=weights,
            common_point=common,
        )
    try:
        return PartitionCertificate(
            r=r,
            groups=tuple(tuple(g) for g in groups),
            weights=weights,
            common_point=common,
            iterations=iterations,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def save_certificate(cert, path: str | Path) -> None:
    Path(path).write_text(emit_certificate(cert), encoding="utf-8")


def load_certificate(path: str | Path) -> RadonCertificate | PartitionCertificate:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_certificate(text)


def points_csv(points: Sequence[Vector]) -> str:
    """Render points back to CSV, mainly for tests and tooling round-trips."""
    lines = [",".join(render_rational(c) for c in p) for p in points]
    return "\n".join(lines) + "\n"
