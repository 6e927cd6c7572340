"""Exact rational scalars, vectors, and the elimination kernels used everywhere else.

All arithmetic is over ``fractions.Fraction``: arbitrary precision, always in
canonical form (positive denominator, gcd 1), so equality of certificates is a
plain field-wise ``==``. Floats are rejected at every entry point; a float that
sneaks in would silently destroy the exactness guarantee.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a terminating decimal into an exact rational.

    Terminating decimals ("0.5", "2.25e-1") convert exactly; anything else —
    including repeating-decimal notation like "0.333..." — raises ValueError.
    """
    if not isinstance(text, str):
        raise ValueError(f"expected a rational literal string, got {type(text).__name__}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal {text!r}") from None
    except ValueError:
        raise ValueError(f"not an exact rational literal: {text!r}") from None


def render_rational(value: Fraction) -> str:
    """Render in canonical text form: "p/q" with "/q" omitted when q = 1."""
    return str(value)


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction, or literal string to Fraction. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is not exact; pass a Fraction, int, or string")
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


class Vector:
    """Immutable coordinate vector over exact rationals.

    Dimension 0 is legal (the single point of R^0 is ``Vector(())``); it shows
    up when partitioning point sets with no coordinates at all.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"Vector(({', '.join(str(c) for c in self.coords)}))"

    def _check_dim(self, other: "Vector") -> None:
        if not isinstance(other, Vector):
            raise TypeError(f"expected Vector, got {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check_dim(other)
        return Vector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check_dim(other)
        return Vector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self.coords)

    def scale(self, factor) -> "Vector":
        f = as_rational(factor)
        return Vector(f * a for a in self.coords)

    def dot(self, other: "Vector") -> Fraction:
        self._check_dim(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def norm_sq(self) -> Fraction:
        return self.dot(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def concat(self, other: "Vector") -> "Vector":
        return Vector(self.coords + other.coords)

    @staticmethod
    def zero(dim: int) -> "Vector":
        return Vector((0,) * dim)


def _common_dim(vectors: Sequence[Vector]) -> int:
    if not vectors:
        raise ValueError("need at least one vector")
    dim = vectors[0].dim
    for v in vectors[1:]:
        if v.dim != dim:
            raise ValueError(f"dimension mismatch among inputs: {dim} vs {v.dim}")
    return dim


def _rref(matrix: list[list[Fraction]]) -> list[int]:
    """Reduce ``matrix`` to reduced row echelon form in place; return pivot columns.

    Pivoting order is fixed — leftmost candidate column, smallest row index with
    a nonzero entry — so outputs are reproducible across runs and platforms.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    pivot_cols: list[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        pivot = next((r for r in range(row, n_rows) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        inv = 1 / matrix[row][col]
        matrix[row] = [x * inv for x in matrix[row]]
        for r in range(n_rows):
            if r != row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[row])]
        pivot_cols.append(col)
        row += 1
    return pivot_cols


def nullspace_vector(vectors: Sequence[Vector]) -> Vector | None:
    """Find exact coefficients mu != 0 with sum(mu_i * vectors[i]) = 0, or None.

    None is returned exactly when the vectors are linearly independent; with
    more vectors than coordinates a dependence always exists. Of all solutions
    the one with the leftmost free column set to 1 (others 0) is returned, so
    the output is deterministic.
    """
    dim = _common_dim(vectors)
    count = len(vectors)
    matrix = [[vectors[j].coords[i] for j in range(count)] for i in range(dim)]
    if dim == 0:
        pivot_cols: list[int] = []
    else:
        pivot_cols = _rref(matrix)
    free_cols = [c for c in range(count) if c not in pivot_cols]
    if not free_cols:
        return None
    free = free_cols[0]
    mu = [Fraction(0)] * count
    mu[free] = Fraction(1)
    for row, col in enumerate(pivot_cols):
        mu[col] = -matrix[row][free]
    return Vector(mu)


def affine_dependence(vectors: Sequence[Vector]) -> Vector | None:
    """Find gamma != 0 with sum(gamma_i * vectors[i]) = 0 and sum(gamma_i) = 0.

    Returns None exactly when the vectors are affinely independent. Works by
    appending a 1-coordinate to every vector and taking a nullspace vector of
    the lifted family, which forces the coefficient sum to vanish.
    """
    _common_dim(vectors)
    lifted = [Vector(v.coords + (Fraction(1),)) for v in vectors]
    return nullspace_vector(lifted)


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Solve a square exact linear system; None if singular (no unique solution)."""
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise ValueError("solve_linear expects a square system")
    aug = [[as_rational(x) for x in row] + [as_rational(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]
