"""Exact nearest-point-to-origin over a polytope given by its vertices.

The production path is Wolfe's min-norm point method run entirely over
rationals: the working set ("corral") stays affinely independent, every affine
projection is an exact bordered linear solve, and the squared distance strictly
decreases across major cycles, so the method terminates finitely with the exact
minimizer. A subset-enumeration oracle with the same contract exists purely for
cross-checking.

All inner products are taken from a Gram matrix computed once per call; the
coordinate representation only reappears when the final result is assembled
and its optimality certificate is re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .geometry import WeightedCombination
from .linalg import Vector, _common_dim, solve_linear


@dataclass(frozen=True)
class MinNormResult:
    """The minimizer z of ||x||^2 over conv(points), with its convex weights.

    Carries its own optimality certificate: <v, z> >= <z, z> for every input
    point v, checked exactly before the result is built.
    """

    point: Vector
    combination: WeightedCombination
    distance_sq: Fraction

    def __post_init__(self):
        if self.distance_sq != self.point.norm_sq():
            raise ValueError("distance_sq must equal <point, point>")
        if self.combination.value != self.point:
            raise ValueError("combination must evaluate to the minimizer")


def _gram(points: Sequence[Vector]) -> list[list[Fraction]]:
    m = len(points)
    gram = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1):
            gram[i][j] = gram[j][i] = points[i].dot(points[j])
    return gram


def _affine_minimizer(gram: Sequence[Sequence[Fraction]], support: Sequence[int]):
    """Minimize ||sum(beta_i p_i)||^2 subject to sum(beta_i) = 1 over ``support``.

    Solves the bordered Gram system; the system is nonsingular exactly when the
    support points are affinely independent, and None is returned otherwise.
    The multiplier equals the squared norm of the minimizer, so it comes back
    alongside the coefficients.
    """
    k = len(support)
    rows = []
    for i in support:
        rows.append([gram[i][j] for j in support] + [Fraction(-1)])
    rows.append([Fraction(1)] * k + [Fraction(0)])
    rhs = [Fraction(0)] * k + [Fraction(1)]
    solution = solve_linear(rows, rhs)
    if solution is None:
        return None
    return solution[:k], solution[k]


def _result(points: Sequence[Vector], support: Sequence[int], beta) -> MinNormResult:
    order = sorted(range(len(support)), key=lambda k: support[k])
    indices = tuple(support[k] for k in order)
    weights = tuple(beta[k] for k in order)
    point = Vector.zero(points[0].dim)
    for i, w in zip(indices, weights):
        point = point + points[i].scale(w)
    dsq = point.norm_sq()
    assert all(v.dot(point) >= dsq for v in points), "optimality certificate violated"
    comb = WeightedCombination(indices, weights, point)
    return MinNormResult(point=point, combination=comb, distance_sq=dsq)


def min_norm_point(points: Sequence[Vector]) -> MinNormResult:
    """Wolfe's method: exact nearest point of conv(points) to the origin.

    Deterministic given input order: the start is the input point of smallest
    squared norm, the entering point minimizes <v, x>, and ties always break
    toward the smallest index.
    """
    _common_dim(points)
    m = len(points)
    gram = _gram(points)

    start = min(range(m), key=lambda i: (gram[i][i], i))
    support = [start]
    lam = [Fraction(1)]

    while True:
        # <v_i, x> for the current x = sum(lam_k p_{support_k}), via the Gram rows.
        dots = [
            sum((l * gram[i][s] for s, l in zip(support, lam)), Fraction(0))
            for i in range(m)
        ]
        dsq = sum((l * dots[s] for s, l in zip(support, lam)), Fraction(0))
        entering = min(range(m), key=lambda i: (dots[i], i))
        if dots[entering] >= dsq:
            return _result(points, support, lam)
        assert entering not in support, "entering point already in corral"
        support.append(entering)
        lam.append(Fraction(0))

        while True:
            solved = _affine_minimizer(gram, support)
            assert solved is not None, "corral lost affine independence"
            beta, _ = solved
            if all(b > 0 for b in beta):
                lam = beta
                break
            negative = [k for k, b in enumerate(beta) if b < 0]
            if negative:
                theta = min(lam[k] / (lam[k] - beta[k]) for k in negative)
                assert theta > 0, "stalled line search"
                lam = [theta * b + (1 - theta) * l for b, l in zip(beta, lam)]
            else:
                lam = beta
            keep = [k for k, l in enumerate(lam) if l > 0]
            assert len(keep) < len(support), "line search removed nothing"
            support = [support[k] for k in keep]
            lam = [lam[k] for k in keep]

        new_dsq = sum(
            (lam[a] * lam[b] * gram[support[a]][support[b]]
             for a in range(len(support)) for b in range(len(support))),
            Fraction(0),
        )
        assert new_dsq < dsq, "major cycle failed to decrease the norm"


def min_norm_bruteforce(points: Sequence[Vector]) -> MinNormResult:
    """Oracle twin of :func:`min_norm_point` by exhaustive subset projection.

    Projects the origin onto the affine hull of every affinely independent
    subset, keeps the projections with all-nonnegative weights (those lie in
    the hull), and returns the smallest squared distance; ties are settled by
    lexicographically smallest support. Intended for small inputs only.
    """
    dim = _common_dim(points)
    m = len(points)
    gram = _gram(points)
    best = None
    for size in range(1, min(m, dim + 1) + 1):
        for subset in combinations(range(m), size):
            solved = _affine_minimizer(gram, subset)
            if solved is None:
                continue
            beta, dsq = solved
            if any(b < 0 for b in beta):
                continue
            if best is None or (dsq, subset) < (best[0], best[1]):
                best = (dsq, subset, beta)
    assert best is not None, "singleton subsets always project"
    _, subset, beta = best
    return _result(points, list(subset), list(beta))


def point_in_hull(q: Vector, points: Sequence[Vector]) -> WeightedCombination | None:
    """Exact convex weights expressing q over ``points``, or None if q is outside.

    Membership is decided by the min-norm point of the translated set
    {v - q}: the distance is zero exactly when q lies in the hull. No
    tolerance is involved. conv of an empty list is empty by convention.
    """
    if not points:
        return None
    for v in points:
        if v.dim != q.dim:
            raise ValueError(f"dimension mismatch: {v.dim} vs {q.dim}")
    translated = [v - q for v in points]
    result = min_norm_point(translated)
    if result.distance_sq != 0:
        return None
    comb = result.combination
    value = Vector.zero(q.dim)
    for idx, w in zip(comb.indices, comb.weights):
        value = value + points[idx].scale(w)
    assert value == q, "hull membership weights failed to recombine"
    return WeightedCombination(comb.indices, comb.weights, value)
