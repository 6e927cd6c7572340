"""Transversal search: pick one point per color class so the hull catches the origin.

Given n+1 finite classes in R^n that each contain the origin in their convex
hull, a transversal whose hull also contains the origin always exists. The
solver below finds one by distance-decreasing pivots: while the chosen points
miss the origin, their nearest point z to the origin lies on a proper face, so
after support reduction some color carries zero weight and can be re-chosen
with a point on the far side of the hyperplane normal to z. The squared
distance drops strictly at every pivot, so the walk never revisits a
transversal and must terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Optional, Sequence

from .geometry import WeightedCombination, caratheodory_reduce
from .linalg import Vector
from .minnorm import min_norm_point, point_in_hull


class UncenteredClassError(ValueError):
    """A color class whose convex hull misses the origin."""

    def __init__(self, class_index: int):
        self.class_index = class_index
        super().__init__(
            f"color class {class_index} does not contain the origin in its convex hull"
        )


@dataclass(frozen=True)
class ColorClasses:
    """dim + 1 nonempty finite point sets in R^dim."""

    dim: int
    classes: tuple[tuple[Vector, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(tuple(c) for c in self.classes))
        if len(self.classes) != self.dim + 1:
            raise ValueError(
                f"need exactly dim + 1 = {self.dim + 1} classes, got {len(self.classes)}"
            )
        for k, cls in enumerate(self.classes):
            if not cls:
                raise ValueError(f"color class {k} is empty")
            for v in cls:
                if v.dim != self.dim:
                    raise ValueError(
                        f"class {k} holds a vector of dimension {v.dim}, expected {self.dim}"
                    )

    def chosen(self, choice: Sequence[int]) -> list[Vector]:
        return [self.classes[i][choice[i]] for i in range(len(self.classes))]


@dataclass(frozen=True)
class Transversal:
    """One selected point index per color class, plus the origin witness once solved."""

    choice: tuple[int, ...]
    witness: Optional[WeightedCombination] = None
    iterations: int = 0

    def __post_init__(self):
        object.__setattr__(self, "choice", tuple(int(i) for i in self.choice))


def check_centered(classes: ColorClasses) -> list[WeightedCombination]:
    """Exact origin certificates, one per class; raises naming the first class without one."""
    origin = Vector.zero(classes.dim)
    certificates = []
    for k, cls in enumerate(classes.classes):
        comb = point_in_hull(origin, cls)
        if comb is None:
            raise UncenteredClassError(k)
        certificates.append(comb)
    return certificates


def _validate_choice(classes: ColorClasses, choice: Sequence[int]) -> None:
    if len(choice) != len(classes.classes):
        raise ValueError("transversal must choose one point per class")
    for i, c in enumerate(choice):
        if not 0 <= c < len(classes.classes[i]):
            raise ValueError(f"choice {c} out of range for class {i}")


def pivot_step(classes: ColorClasses, transversal: Transversal) -> tuple[Transversal, Fraction]:
    """One distance-decreasing exchange; returns the new transversal and its distance.

    Requires the current chosen points to miss the origin. The support of the
    reduced nearest-point combination spans at most dim points, so at least one
    color is unused; the smallest such color is re-chosen with its point of
    minimal inner product against z (smallest index on ties), which is
    guaranteed nonpositive for a centered class.
    """
    _validate_choice(classes, transversal.choice)
    chosen = classes.chosen(transversal.choice)
    current = min_norm_point(chosen)
    if current.distance_sq == 0:
        raise ValueError("pivot_step called although the origin is already in the hull")

    reduced = caratheodory_reduce(current.point, current.combination, chosen)
    support = set(reduced.support())
    assert len(support) <= classes.dim, "positive support too large for a boundary point"
    idle_color = min(set(range(len(chosen))) - support)

    z = current.point
    cls = classes.classes[idle_color]
    replacement = min(range(len(cls)), key=lambda idx: (cls[idx].dot(z), idx))
    if cls[replacement].dot(z) > 0:
        raise UncenteredClassError(idle_color)

    new_choice = list(transversal.choice)
    new_choice[idle_color] = replacement
    new_transversal = Transversal(tuple(new_choice))
    new_distance = min_norm_point(classes.chosen(new_choice)).distance_sq
    assert new_distance < current.distance_sq, "pivot failed to decrease the distance"
    return new_transversal, new_distance


def colorful_caratheodory(
    classes: ColorClasses, start: Optional[Transversal] = None
) -> Transversal:
    """Find a transversal whose convex hull contains the origin, with exact witness.

    Every class must be centered (checked up front). Iteration count is
    bounded by the number of distinct transversals because the distance
    strictly decreases.
    """
    check_centered(classes)
    if start is None:
        transversal = Transversal((0,) * len(classes.classes))
    else:
        _validate_choice(classes, start.choice)
        transversal = Transversal(start.choice)

    bound = prod(len(cls) for cls in classes.classes)
    distance = min_norm_point(classes.chosen(transversal.choice)).distance_sq
    iterations = 0
    while distance != 0:
        transversal, new_distance = pivot_step(classes, transversal)
        iterations += 1
        assert iterations <= bound, "pivot count exceeded the transversal count"
        assert new_distance < distance
        distance = new_distance

    witness = min_norm_point(classes.chosen(transversal.choice)).combination
    assert witness.value.is_zero()
    return Transversal(transversal.choice, witness=witness, iterations=iterations)
