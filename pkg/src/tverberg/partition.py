"""Tverberg partitions for arbitrary r: block vectors, transversal solve, read-off.

Every input point is lifted to (p, 1); the lifted point is then encoded r ways
as a block vector in R^((d+1)(r-1)): copy j < r places it in block j, and the
last encoding is the negated sum of all blocks. The N = (d+1)(r-1)+1 encodings
of one point form a color class averaging to zero, so a transversal through
the origin exists, and reading off which encoding each class contributed
yields the r groups with a common hull point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .colorful import ColorClasses, colorful_caratheodory
from .geometry import is_lifted, lift
from .linalg import Vector, _common_dim


@dataclass(frozen=True)
class PartitionCertificate:
    """r disjoint index groups covering [N], weights, and the common hull point.

    ``iterations`` records how many pivots the transversal solver used; it is
    bookkeeping only and carries no mathematical content.
    """

    r: int
    groups: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    common_point: Vector
    iterations: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(tuple(int(i) for i in g) for g in self.groups))
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.r < 2:
            raise ValueError("a partition certificate needs r >= 2")
        if len(self.groups) != self.r:
            raise ValueError(f"expected {self.r} groups, got {len(self.groups)}")

    def positive_supports(self) -> tuple[tuple[int, ...], ...]:
        """Per-group indices that carry strictly positive weight (the minimal groups)."""
        return tuple(
            tuple(i for i in group if self.weights[i] > 0) for group in self.groups
        )


def point_count(dim: int, r: int) -> int:
    """Number of points a partition into r groups requires: (d+1)(r-1)+1."""
    return (dim + 1) * (r - 1) + 1


def block_vector(lifted: Vector, color: int, r: int) -> Vector:
    """Encoding of a lifted point for one color: block placement, or negated sum.

    Colors 0..r-2 place the lifted point into the matching (d+1)-sized block of
    zeros; color r-1 repeats its negation across all r-1 blocks. The encodings
    of a fixed point sum to zero by construction.
    """
    if not 0 <= color < r:
        raise ValueError(f"color {color} out of range for r={r}")
    width = lifted.dim
    if color < r - 1:
        coords = [Fraction(0)] * (width * (r - 1))
        for k, c in enumerate(lifted.coords):
            coords[color * width + k] = c
        return Vector(coords)
    return Vector(tuple(-c for c in lifted.coords) * (r - 1))


def build_color_classes(lifted: list[Vector], r: int) -> ColorClasses:
    """Color classes {block_vector(p_i, 0..r-1)} for N lifted points, one class per point."""
    if r < 2:
        raise ValueError("need r >= 2")
    width = _common_dim(lifted)
    for v in lifted:
        if not is_lifted(v):
            raise ValueError(f"not a lifted point (trailing coordinate must be 1): {v!r}")
    n = width * (r - 1)
    if len(lifted) != n + 1:
        raise ValueError(
            f"need (d+1)(r-1)+1 = {n + 1} lifted points for r={r}, got {len(lifted)}"
        )
    classes = tuple(
        tuple(block_vector(p, color, r) for color in range(r)) for p in lifted
    )
    return ColorClasses(dim=n, classes=classes)


def normalize_groups(points: list[Vector], cert: PartitionCertificate) -> PartitionCertificate:
    """Rescale each group's weights to sum 1 and recompute the common point.

    Requires all groups to carry the same positive total weight, which the
    lifted trailing coordinate guarantees for solver output.
    """
    totals = [
        sum((cert.weights[i] for i in group), Fraction(0)) for group in cert.groups
    ]
    if any(t <= 0 for t in totals):
        raise ValueError("every group must carry positive total weight")
    if len(set(totals)) != 1:
        raise ValueError("groups must carry equal total weight before normalization")

    scale = totals[0]
    weights = tuple(w / scale for w in cert.weights)
    dim = points[0].dim if points else cert.common_point.dim
    commons = []
    for group in cert.groups:
        value = Vector.zero(dim)
        for i in group:
            value = value + points[i].scale(weights[i])
        commons.append(value)
    assert all(c == commons[0] for c in commons), "normalization broke the group equalities"
    return PartitionCertificate(
        r=cert.r,
        groups=cert.groups,
        weights=weights,
        common_point=commons[0],
        iterations=cert.iterations,
    )


def tverberg_partition(points: list[Vector], r: int) -> PartitionCertificate:
    """Partition (d+1)(r-1)+1 points of R^d into r groups with a common hull point.

    Pipeline: lift, build the color classes, solve for a transversal through
    the origin, then read the group of index i off the color its class
    contributed. No general-position assumption; duplicates are fine.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    dim = _common_dim(points)
    expected = point_count(dim, r)
    if len(points) != expected:
        raise ValueError(
            f"need (d+1)(r-1)+1 = {expected} points for d={dim}, r={r}, got {len(points)}"
        )

    lifted = [lift(p) for p in points]
    classes = build_color_classes(lifted, r)
    transversal = colorful_caratheodory(classes)
    assert transversal.witness is not None

    n = len(points)
    witness_weights = [transversal.witness.weight_of(i) for i in range(n)]
    groups = tuple(
        tuple(i for i in range(n) if transversal.choice[i] == color) for color in range(r)
    )

    # The witness reproduces equal lifted block sums across groups, each with
    # total weight exactly 1/r on its trailing coordinate.
    sums = []
    for group in groups:
        s = Vector.zero(dim + 1)
        for i in group:
            s = s + lifted[i].scale(witness_weights[i])
        sums.append(s)
    assert all(s == sums[0] for s in sums), "lifted group sums must agree"
    assert all(s.coords[-1] == Fraction(1, r) for s in sums), "group totals must be 1/r"

    raw = PartitionCertificate(
        r=r,
        groups=groups,
        weights=tuple(witness_weights),
        common_point=Vector(sums[0].coords[:-1]),
        iterations=transversal.iterations,
    )
    return normalize_groups(points, raw)
