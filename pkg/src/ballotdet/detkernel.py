"""Binomial matrix construction and exact determinant evaluation.

The matrix of order n-1 has entries t_ij = C(m - max{u, (k-1)j}, 1 - i + j)
for 1-based i, j. Besides evaluating its determinant this module exposes the
row operation, the shared bottom row and the last-column split used to derive
the recurrence for D(m, n, u, k), each as a checkable operation.
"""

from dataclasses import dataclass
from enum import Enum

from loguru import logger

from .errors import DomainError, InternalError
from .exact import BigInt, binomial


@dataclass(frozen=True)
class QueryParams:
    """A validated quadruple (m, n, u, k)."""

    m: int
    n: int
    u: int
    k: int

    def __post_init__(self):
        if self.u < 0:
            raise DomainError(f"u must be ≥ 0 (got u={self.u})")
        if self.k < 2:
            raise DomainError(f"k must be ≥ 2 (got k={self.k})")
        if self.n < 2:
            raise DomainError(f"n must be ≥ 2 (got n={self.n})")
        bound = self.min_m(self.n, self.u, self.k)
        if self.m < bound:
            raise DomainError(
                f"m must be ≥ max{{u+1,(k-1)(n-1)}} (got m={self.m}, bound {bound})"
            )

    @staticmethod
    def min_m(n: int, u: int, k: int) -> int:
        """Smallest admissible m for the given n, u, k."""
        return max(u + 1, (k - 1) * (n - 1))

    def shift_m(self, dm: int) -> "QueryParams":
        return QueryParams(self.m + dm, self.n, self.u, self.k)

    def __str__(self) -> str:
        return f"(m={self.m}, n={self.n}, u={self.u}, k={self.k})"


class MatrixVariant(str, Enum):
    ORIGINAL = "original"
    ROW_REDUCED = "row_reduced"


@dataclass(frozen=True)
class BinomialMatrix:
    """
    Dense square integer matrix with 1-based accessors.

    ``rows`` is stored 0-based; use ``entry(i, j)`` / ``row(i)`` /
    ``column(j)`` to address it the way the construction formula does.
    """

    rows: tuple[tuple[BigInt, ...], ...]
    variant: MatrixVariant = MatrixVariant.ORIGINAL

    def __post_init__(self):
        size = len(self.rows)
        if size == 0 or any(len(row) != size for row in self.rows):
            raise InternalError("binomial matrix must be square with order ≥ 1")

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> BigInt:
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple[BigInt, ...]:
        return self.rows[i - 1]

    def column(self, j: int) -> tuple[BigInt, ...]:
        return tuple(row[j - 1] for row in self.rows)

    def with_last_column(self, column: list[BigInt]) -> "BinomialMatrix":
        """Return a copy whose last column is replaced by ``column``."""
        rows = tuple(row[:-1] + (value,) for row, value in zip(self.rows, column))
        return BinomialMatrix(rows, self.variant)


def _column_offset(p: QueryParams, j: int) -> int:
    return max(p.u, (p.k - 1) * j)


def build_matrix(p: QueryParams) -> BinomialMatrix:
    """
    Build the original (n-1)x(n-1) matrix for ``p``.

    Args:
        p: Validated parameters

    Returns:
        Matrix with entries C(m - max{u, (k-1)j}, 1 - i + j)
    """
    size = p.n - 1
    rows = tuple(
        tuple(
            binomial(p.m - _column_offset(p, j), 1 - i + j)
            for j in range(1, size + 1)
        )
        for i in range(1, size + 1)
    )
    return BinomialMatrix(rows, MatrixVariant.ORIGINAL)


def build_row_reduced(p: QueryParams) -> BinomialMatrix:
    """
    Build the row-reduced matrix directly from its closed form.

    Rows 1..n-2 use upper index m+1; the bottom row keeps upper index m.

    Raises:
        DomainError: If n < 3, where the reduction is vacuous
    """
    if p.n < 3:
        raise DomainError(f"row reduction needs n ≥ 3 (got n={p.n})")

    size = p.n - 1
    rows = []
    for i in range(1, size + 1):
        top = p.m + 1 if i < size else p.m
        rows.append(
            tuple(
                binomial(top - _column_offset(p, j), 1 - i + j)
                for j in range(1, size + 1)
            )
        )
    return BinomialMatrix(tuple(rows), MatrixVariant.ROW_REDUCED)


def apply_row_operation(mat: BinomialMatrix) -> BinomialMatrix:
    """
    Replace row i by row i + row i+1 for i = 1..order-1, in increasing i.

    Each addition reads the untouched row below, so the result equals the
    closed form of ``build_row_reduced`` by Pascal's rule.
    """
    if mat.variant is not MatrixVariant.ORIGINAL:
        raise DomainError("row operation applies to the original matrix only")
    if mat.order < 2:
        raise DomainError("row operation needs order ≥ 2")

    rows = [list(row) for row in mat.rows]
    for i in range(mat.order - 1):
        rows[i] = [a + b for a, b in zip(rows[i], rows[i + 1])]
    return BinomialMatrix(tuple(tuple(row) for row in rows), MatrixVariant.ROW_REDUCED)


def determinant(mat: BinomialMatrix) -> BigInt:
    """
    Evaluate the determinant by single-step fraction-free elimination.

    A zero pivot is replaced by the first lower row with a nonzero entry in
    the pivot column, flipping the sign; if there is none the determinant is 0.

    Args:
        mat: Square matrix of order ≥ 1

    Returns:
        The exact determinant

    Raises:
        InternalError: If a division that must be exact leaves a remainder
    """
    a = [list(row) for row in mat.rows]
    size = len(a)
    sign = 1
    previous = 1

    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign

        pivot = a[k][k]
        for i in range(k + 1, size):
            lead = a[i][k]
            for j in range(k + 1, size):
                quotient, remainder = divmod(pivot * a[i][j] - lead * a[k][j], previous)
                if remainder:
                    raise InternalError(
                        f"inexact division at step {k + 1}, entry ({i + 1}, {j + 1})"
                    )
                a[i][j] = quotient
            a[i][k] = 0
        previous = pivot

    return sign * a[-1][-1]


def evaluate_D(p: QueryParams) -> BigInt:
    """Return D(m, n, u, k) as the determinant of the original matrix."""
    value = determinant(build_matrix(p))
    logger.debug(f"D{p} = {value}")
    return value


def bottom_row_formula(p: QueryParams) -> tuple[BigInt, ...]:
    """The shared bottom row (0, ..., 0, 1, m - max{u, (k-1)(n-1)})."""
    return (0,) * (p.n - 3) + (1, p.m - _column_offset(p, p.n - 1))


def check_bottom_row(p: QueryParams) -> bool:
    """Check both matrix variants end with the bottom-row formula."""
    expected = bottom_row_formula(p)
    original = build_matrix(p)
    reduced = build_row_reduced(p)
    return original.row(original.order) == expected and reduced.row(reduced.order) == expected


def split_last_column(p: QueryParams) -> tuple[BinomialMatrix, BinomialMatrix]:
    """
    Split the row-reduced matrix along its last column.

    The last column equals alpha + beta where alpha has bottom entry
    m + 1 - max{u, (k-1)(n-1)} and beta = (0, ..., 0, -1).

    Returns:
        (matrix with last column alpha, matrix with last column beta)
    """
    reduced = build_row_reduced(p)
    last = list(reduced.column(reduced.order))
    alpha = last[:-1] + [last[-1] + 1]
    beta = [0] * (len(last) - 1) + [-1]
    return reduced.with_last_column(alpha), reduced.with_last_column(beta)


def check_column_decomposition(p: QueryParams) -> bool:
    """Check D(m,n,u,k) == D(m+1,n,u,k) - D(m+1,n-1,u,k)."""
    if p.n < 3:
        raise DomainError(f"column decomposition needs n ≥ 3 (got n={p.n})")
    lhs = evaluate_D(p)
    rhs = evaluate_D(p.shift_m(1)) - evaluate_D(QueryParams(p.m + 1, p.n - 1, p.u, p.k))
    return lhs == rhs


def is_unit_lower_triangular(mat: BinomialMatrix) -> bool:
    """True if every entry above the diagonal is 0 and the diagonal is all 1."""
    return all(
        mat.entry(i, j) == (1 if i == j else 0)
        for i in range(1, mat.order + 1)
        for j in range(i, mat.order + 1)
    )


def last_column_is_zero(mat: BinomialMatrix) -> bool:
    return all(value == 0 for value in mat.column(mat.order))


__all__ = [
    "QueryParams",
    "MatrixVariant",
    "BinomialMatrix",
    "build_matrix",
    "build_row_reduced",
    "apply_row_operation",
    "determinant",
    "evaluate_D",
    "bottom_row_formula",
    "check_bottom_row",
    "split_last_column",
    "check_column_decomposition",
    "is_unit_lower_triangular",
    "last_column_is_zero",
]
