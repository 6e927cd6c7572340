"""Points, the lifting p -> (p, 1), and convex-combination bookkeeping.

Points and lifted points are plain :class:`~tverberg.linalg.Vector` values; a
lifted point is recognizable by its trailing exact 1. Combinations refer to
their host points by index so they stay valid however the hosts are stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Vector, affine_dependence, as_rational

Point = Vector


def lift(point: Vector) -> Vector:
    """Append a 1-coordinate: the point p of R^d becomes (p, 1) in R^(d+1)."""
    return Vector(point.coords + (Fraction(1),))


def unlift(lifted: Vector) -> Vector:
    """Drop the trailing coordinate, inverting :func:`lift`."""
    if lifted.dim == 0 or lifted.coords[-1] != 1:
        raise ValueError(f"not a lifted point (last coordinate must be 1): {lifted!r}")
    return Vector(lifted.coords[:-1])


def is_lifted(vector: Vector) -> bool:
    return vector.dim >= 1 and vector.coords[-1] == 1


@dataclass(frozen=True)
class WeightedCombination:
    """Convex combination of host points, stored as (index, weight) pairs plus value.

    Weights are nonnegative and sum to 1; ``value`` is the exact combination
    sum(weights[k] * host[indices[k]]) and can be recomputed from any host list.
    """

    indices: tuple[int, ...]
    weights: tuple[Fraction, ...]
    value: Vector

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        object.__setattr__(self, "weights", tuple(as_rational(w) for w in self.weights))
        if len(self.indices) != len(self.weights):
            raise ValueError("indices and weights must have equal length")
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("combination indices must be distinct")
        if any(w < 0 for w in self.weights):
            raise ValueError("combination weights must be nonnegative")
        if sum(self.weights, Fraction(0)) != 1:
            raise ValueError("combination weights must sum to 1")

    def recompute(self, points: Sequence[Vector]) -> Vector:
        """Evaluate the combination over ``points``; equals ``value`` when consistent."""
        total = Vector.zero(self.value.dim)
        for idx, w in zip(self.indices, self.weights):
            total = total + points[idx].scale(w)
        return total

    def weight_of(self, index: int) -> Fraction:
        for idx, w in zip(self.indices, self.weights):
            if idx == index:
                return w
        return Fraction(0)

    def support(self) -> tuple[int, ...]:
        """Indices carrying strictly positive weight."""
        return tuple(i for i, w in zip(self.indices, self.weights) if w > 0)


def caratheodory_reduce(
    target: Vector,
    comb: WeightedCombination,
    points: Sequence[Vector],
) -> WeightedCombination:
    """Shrink a combination of ``target`` until its positive support is affinely independent.

    Each round finds an affine dependence gamma on the positive support and
    shifts the weights along it as far as nonnegativity allows, which zeroes at
    least one weight while preserving the value and the weight sum. Of the two
    shift directions the one that zeroes the largest point index is taken, and
    that largest index is dropped from the combination; any other weight that
    reaches zero in the same shift stays listed with weight 0. Affine
    independence of the positive support bounds it by dim + 1 points.
    """
    if comb.value != target:
        raise ValueError("combination does not evaluate to the stated target")
    for idx in comb.indices:
        if not 0 <= idx < len(points):
            raise ValueError(f"combination index {idx} out of range")
        if points[idx].dim != target.dim:
            raise ValueError("host point dimension differs from target dimension")
    if comb.recompute(points) != target:
        raise ValueError("combination value is inconsistent with the host points")

    indices = list(comb.indices)
    weights = list(comb.weights)
    while True:
        support_pos = [k for k, w in enumerate(weights) if w > 0]
        gamma_vec = affine_dependence([points[indices[k]] for k in support_pos])
        if gamma_vec is None:
            break
        gamma = list(gamma_vec.coords)

        # An affine dependence sums to zero, so both sign patterns occur and
        # both shift directions are available.
        def shift(direction):
            step = min(weights[k] / g for k, g in zip(support_pos, direction) if g > 0)
            zeroed = [
                indices[k]
                for k, g in zip(support_pos, direction)
                if g > 0 and weights[k] == step * g
            ]
            return step, zeroed

        step_pos, zero_pos = shift(gamma)
        step_neg, zero_neg = shift([-g for g in gamma])
        if max(zero_pos) >= max(zero_neg):
            step, zeroed, direction = step_pos, zero_pos, gamma
        else:
            step, zeroed, direction = step_neg, zero_neg, [-g for g in gamma]

        for k, g in zip(support_pos, direction):
            weights[k] = weights[k] - step * g
        drop = indices.index(max(zeroed))
        del indices[drop], weights[drop]

    return WeightedCombination(tuple(indices), tuple(weights), target)
