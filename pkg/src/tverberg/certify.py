"""Independent certificate verification and the exhaustive partition oracle.

Verifiers recompute everything from the raw points and the certificate with
exact rational equality — zero tolerance — and never raise on malformed input:
every defect becomes a failed check in the report. The oracle enumerates set
partitions outright and decides hull intersection exactly, making it the trust
anchor the pivoting solver is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import lift
from .linalg import Vector
from .minnorm import min_norm_point, point_in_hull
from .partition import PartitionCertificate, block_vector
from .radon import RadonCertificate

DEFAULT_ORACLE_CAP = 10**6


class CapExceededError(ValueError):
    """Raised when an enumeration would exceed the configured assignment cap."""

    def __init__(self, total: int, cap: int):
        self.total = total
        self.cap = cap
        super().__init__(
            f"enumeration of {total} assignments exceeds the cap of {cap}"
        )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of all certificate checks; valid only when every check passed."""

    valid: bool
    checks: tuple[CheckResult, ...]

    @staticmethod
    def from_checks(checks: Sequence[CheckResult]) -> "VerificationReport":
        return VerificationReport(
            valid=all(c.passed for c in checks), checks=tuple(checks)
        )

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def render(self) -> str:
        lines = [
            f"[{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "")
            for c in self.checks
        ]
        lines.append(f"result: {'VALID' if self.valid else 'INVALID'}")
        return "\n".join(lines)


def _structure_checks(points, groups, weights, common_point, checks) -> bool:
    """Shape and typing guards; arithmetic checks only run when these pass."""
    n = len(points)
    dims = {p.dim for p in points}
    if len(dims) != 1:
        checks.append(CheckResult("structure", False, "points have mixed dimensions"))
        return False
    if not isinstance(common_point, Vector) or common_point.dim != points[0].dim:
        checks.append(CheckResult("structure", False, "common point dimension mismatch"))
        return False
    if len(weights) != n:
        checks.append(
            CheckResult("structure", False, f"expected {n} weights, got {len(weights)}")
        )
        return False
    flat = [i for g in groups for i in g]
    if any(not isinstance(i, int) or not 0 <= i < n for i in flat):
        checks.append(CheckResult("structure", False, "group indices out of range"))
        return False
    checks.append(CheckResult("structure", True))

    covered = set(flat)
    checks.append(
        CheckResult(
            "covers-all-indices",
            covered == set(range(n)),
            "" if covered == set(range(n)) else f"missing {sorted(set(range(n)) - covered)}",
        )
    )
    disjoint = len(flat) == len(covered)
    checks.append(
        CheckResult("groups-disjoint", disjoint, "" if disjoint else "an index appears twice")
    )
    nonneg = all(w >= 0 for w in weights)
    checks.append(
        CheckResult("weights-nonnegative", nonneg, "" if nonneg else "negative weight present")
    )
    # Cover/disjointness/sign defects already invalidate the report; the
    # arithmetic checks below them are still well defined, so let them run.
    return True


def _group_checks(points, groups, weights, common_point, checks) -> None:
    for g, group in enumerate(groups):
        total = sum((weights[i] for i in group), Fraction(0))
        checks.append(
            CheckResult(
                f"group-{g}-weight-sum",
                total == 1,
                "" if total == 1 else f"sums to {total}",
            )
        )
    for g, group in enumerate(groups):
        value = Vector.zero(points[0].dim)
        for i in group:
            value = value + points[i].scale(weights[i])
        checks.append(
            CheckResult(
                f"group-{g}-combination",
                value == common_point,
                "" if value == common_point else "combination differs from common point",
            )
        )
    for g, group in enumerate(groups):
        member = point_in_hull(common_point, [points[i] for i in group]) is not None
        checks.append(
            CheckResult(
                f"group-{g}-hull-membership",
                member,
                "" if member else "common point lies outside the group hull",
            )
        )


def verify_radon(points: Sequence[Vector], cert: RadonCertificate) -> VerificationReport:
    """Re-derive every Radon certificate condition from scratch, exactly."""
    checks: list[CheckResult] = []
    groups = (tuple(cert.group1), tuple(cert.group2))
    if _structure_checks(points, groups, cert.weights, cert.common_point, checks):
        _group_checks(points, groups, cert.weights, cert.common_point, checks)
    return VerificationReport.from_checks(checks)


def verify_tverberg(points: Sequence[Vector], cert: PartitionCertificate) -> VerificationReport:
    """Re-derive every partition certificate condition from scratch, exactly."""
    checks: list[CheckResult] = []
    groups = tuple(tuple(g) for g in cert.groups)
    if len(groups) != cert.r or cert.r < 2:
        checks.append(CheckResult("structure", False, "group count differs from r"))
        return VerificationReport.from_checks(checks)
    if any(len(g) == 0 for g in groups):
        checks.append(CheckResult("structure", False, "empty group"))
        return VerificationReport.from_checks(checks)
    if _structure_checks(points, groups, cert.weights, cert.common_point, checks):
        _group_checks(points, groups, cert.weights, cert.common_point, checks)
    return VerificationReport.from_checks(checks)


def radon_certificate_from_partition(cert: PartitionCertificate) -> RadonCertificate:
    """Reshape an r=2 partition certificate into Radon form."""
    if cert.r != 2:
        raise ValueError(f"expected r=2, got r={cert.r}")
    return RadonCertificate(
        group1=cert.groups[0],
        group2=cert.groups[1],
        weights=cert.weights,
        common_point=cert.common_point,
    )


def _set_partitions(n: int, r: int):
    """All partitions of range(n) into exactly r nonempty blocks, one per relabeling.

    Generated as restricted growth strings: index 0 opens block 0 and each
    index joins an existing block or opens the next one, so blocks are ordered
    by their smallest member and every unordered partition appears once.
    """
    assignment = [0] * n

    def descend(i: int, used: int):
        remaining = n - i
        if remaining == 0:
            if used == r:
                yield tuple(assignment)
            return
        if used + remaining < r:
            return
        limit = min(used + 1, r)
        for block in range(limit):
            assignment[i] = block
            yield from descend(i + 1, max(used, block + 1))

    if n >= r >= 1:
        yield from descend(0, 0)


def _partition_feasible(lifted: Sequence[Vector], assignment: Sequence[int], r: int) -> bool:
    """Exact test: do the r group hulls share a point under this assignment?

    Equivalent to the origin lying in the hull of the per-index block vectors,
    because any convex zero combination forces equal lifted group sums with
    positive totals, and conversely.
    """
    encoded = [block_vector(p, assignment[i], r) for i, p in enumerate(lifted)]
    return min_norm_point(encoded).distance_sq == 0


def brute_force_tverberg(
    points: Sequence[Vector], r: int, cap: int = DEFAULT_ORACLE_CAP
) -> list[tuple[tuple[int, ...], ...]]:
    """Every partition of the input indices into r nonempty groups with intersecting hulls.

    Partitions come out canonicalized: each group sorted, groups ordered by
    smallest member, list in generation order (deterministic). Refuses to run
    when r**N exceeds ``cap``.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    n = len(points)
    if n == 0:
        return []
    total = r**n
    if total > cap:
        raise CapExceededError(total, cap)

    lifted = [lift(p) for p in points]
    found = []
    for assignment in _set_partitions(n, r):
        if _partition_feasible(lifted, assignment, r):
            groups = tuple(
                tuple(i for i in range(n) if assignment[i] == block) for block in range(r)
            )
            found.append(groups)
    return found


def canonical_partition(groups: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Sort each group and order groups by smallest member, for comparisons."""
    sorted_groups = [tuple(sorted(g)) for g in groups]
    return tuple(sorted(sorted_groups, key=lambda g: g[0] if g else -1))
