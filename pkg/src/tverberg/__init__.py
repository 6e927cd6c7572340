"""Exact Radon and Tverberg partitions of finite point sets, with certificates.

Everything runs over arbitrary-precision rationals: solvers emit certificates
(a partition, nonnegative weights, and the common hull point) that an
independent verifier re-checks with exact equality and zero tolerance.
"""

from .certify import (
    CapExceededError,
    CheckResult,
    VerificationReport,
    brute_force_tverberg,
    canonical_partition,
    radon_certificate_from_partition,
    verify_radon,
    verify_tverberg,
)
from .colorful import (
    ColorClasses,
    Transversal,
    UncenteredClassError,
    check_centered,
    colorful_caratheodory,
    pivot_step,
)
from .geometry import Point, WeightedCombination, caratheodory_reduce, lift, unlift
from .linalg import (
    Rational,
    Vector,
    affine_dependence,
    nullspace_vector,
    parse_rational,
    render_rational,
    solve_linear,
)
from .minnorm import MinNormResult, min_norm_bruteforce, min_norm_point, point_in_hull
from .partition import (
    PartitionCertificate,
    block_vector,
    build_color_classes,
    normalize_groups,
    point_count,
    tverberg_partition,
)
from .radon import RadonCertificate, radon_partition

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CheckResult",
    "ColorClasses",
    "MinNormResult",
    "PartitionCertificate",
    "Point",
    "RadonCertificate",
    "Rational",
    "Transversal",
    "UncenteredClassError",
    "Vector",
    "VerificationReport",
    "WeightedCombination",
    "affine_dependence",
    "block_vector",
    "brute_force_tverberg",
    "build_color_classes",
    "canonical_partition",
    "caratheodory_reduce",
    "check_centered",
    "colorful_caratheodory",
    "lift",
    "min_norm_bruteforce",
    "min_norm_point",
    "normalize_groups",
    "nullspace_vector",
    "parse_rational",
    "pivot_step",
    "point_count",
    "point_in_hull",
    "radon_certificate_from_partition",
    "radon_partition",
    "render_rational",
    "solve_linear",
    "tverberg_partition",
    "unlift",
    "verify_radon",
    "verify_tverberg",
]
