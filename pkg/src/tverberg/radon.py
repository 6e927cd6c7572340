"""Split d+2 points of R^d into two groups whose convex hulls intersect.

The construction lifts every point by a trailing 1, takes an exact linear
dependence of the lifted family (d+2 vectors in d+1 coordinates always admit
one), and splits indices by coefficient sign. The coefficient magnitudes then
witness a common hull point on both sides, because the trailing coordinate
forces the two sign groups to carry equal weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import lift
from .linalg import Vector, _common_dim, nullspace_vector


@dataclass(frozen=True)
class RadonCertificate:
    """Two disjoint index groups covering [d+2], weights, and their common point.

    After normalization each group's weights sum to 1 and both group
    combinations equal ``common_point`` exactly.
    """

    group1: tuple[int, ...]
    group2: tuple[int, ...]
    weights: tuple[Fraction, ...]
    common_point: Vector

    def __post_init__(self):
        object.__setattr__(self, "group1", tuple(int(i) for i in self.group1))
        object.__setattr__(self, "group2", tuple(int(i) for i in self.group2))
        object.__setattr__(self, "weights", tuple(self.weights))


def radon_partition(points: list[Vector]) -> RadonCertificate:
    """Radon certificate for exactly d+2 points in R^d (duplicates allowed)."""
    dim = _common_dim(points)
    if len(points) != dim + 2:
        raise ValueError(f"need exactly d + 2 = {dim + 2} points, got {len(points)}")

    lifted = [lift(p) for p in points]
    dependence = nullspace_vector(lifted)
    assert dependence is not None, "d+2 lifted points are always linearly dependent"

    # Zero coefficients join group 1 with zero weight so both groups cover [d+2].
    group1 = tuple(i for i, c in enumerate(dependence) if c >= 0)
    group2 = tuple(i for i, c in enumerate(dependence) if c < 0)
    magnitudes = [abs(c) for c in dependence.coords]

    total1 = sum((magnitudes[i] for i in group1), Fraction(0))
    total2 = sum((magnitudes[i] for i in group2), Fraction(0))
    assert total1 == total2, "lifted last coordinate must balance the group sums"
    assert total1 > 0, "a nonzero dependence has coefficients of both signs"

    weights = tuple(m / total1 for m in magnitudes)
    common = Vector.zero(dim)
    for i in group1:
        common = common + points[i].scale(weights[i])
    return RadonCertificate(group1=group1, group2=group2, weights=weights, common_point=common)
