"""Concrete lattice paths: boundary predicates, enumeration, grid DP, bijections.

Paths use unit East (1, 0) and North (0, 1) steps. Boundary predicates are
weak (touching the line is allowed) and evaluated in integer arithmetic.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Mapping, Optional

from loguru import logger

from .detkernel import QueryParams
from .errors import DomainError, SizeError
from .exact import BigInt

DEFAULT_CAP = 22

Point = tuple[int, int]


class Step(str, Enum):
    E = "E"
    N = "N"

    @property
    def delta(self) -> Point:
        return (1, 0) if self is Step.E else (0, 1)

    def swapped(self) -> "Step":
        return Step.N if self is Step.E else Step.E


@dataclass(frozen=True)
class LatticePath:
    """A start point and a sequence of E/N steps; points are derived on demand."""

    start: Point
    steps: tuple[Step, ...] = ()

    @classmethod
    def from_string(cls, start: Point, steps: str) -> "LatticePath":
        return cls(start, tuple(Step(s) for s in steps))

    def points(self) -> Iterator[Point]:
        """Yield every visited point, start and end included."""
        x, y = self.start
        yield x, y
        for step in self.steps:
            dx, dy = step.delta
            x, y = x + dx, y + dy
            yield x, y

    @property
    def end(self) -> Point:
        east = sum(1 for step in self.steps if step is Step.E)
        return self.start[0] + east, self.start[1] + len(self.steps) - east

    def __str__(self) -> str:
        return "".join(step.value for step in self.steps)


class BoundaryForm(str, Enum):
    BELOW_SHIFTED = "below_shifted"  # y ≤ (x-1)/(k-1) + 1
    BELOW_ORIGIN = "below_origin"  # y ≤ x/k
    ABOVE_ORIGIN = "above_origin"  # y ≥ kx


@dataclass(frozen=True)
class BoundaryLine:
    form: BoundaryForm
    k: int

    def __post_init__(self):
        minimum = 2 if self.form is BoundaryForm.BELOW_SHIFTED else 1
        if self.k < minimum:
            raise DomainError(f"{self.form.value} boundary needs k ≥ {minimum} (got k={self.k})")

    def contains(self, x: int, y: int) -> bool:
        if self.form is BoundaryForm.BELOW_SHIFTED:
            return (self.k - 1) * (y - 1) <= x - 1
        if self.form is BoundaryForm.BELOW_ORIGIN:
            return self.k * y <= x
        return y >= self.k * x


@dataclass(frozen=True)
class PathQuery:
    """
    Monotone paths from ``start`` to ``end`` respecting ``boundary``.

    The start must satisfy the boundary. The end may violate it, in which
    case the query simply counts zero paths.
    """

    start: Point
    end: Point
    boundary: BoundaryLine

    def __post_init__(self):
        if not self.boundary.contains(*self.start):
            raise DomainError(f"start {self.start} violates the {self.boundary.form.value} boundary")

    @property
    def gap(self) -> tuple[int, int]:
        return self.end[0] - self.start[0], self.end[1] - self.start[1]


def l_query(p: QueryParams) -> PathQuery:
    """The query for L(u+1,1;m,n;k): paths (u+1,1) -> (m,n) below y = (x-1)/(k-1) + 1."""
    return PathQuery((p.u + 1, 1), (p.m, p.n), BoundaryLine(BoundaryForm.BELOW_SHIFTED, p.k))


def path_satisfies(path: LatticePath, boundary: BoundaryLine) -> bool:
    """True iff every visited point satisfies the boundary predicate."""
    return all(boundary.contains(x, y) for x, y in path.points())


def enumerate_paths(q: PathQuery, cap: int = DEFAULT_CAP) -> list[LatticePath]:
    """
    List every admissible path for ``q`` in lexicographic order (E before N).

    Args:
        q: Start, end and boundary
        cap: Largest total step count allowed

    Returns:
        All monotone paths whose every point satisfies the boundary

    Raises:
        SizeError: If the step count exceeds ``cap``
    """
    dx, dy = q.gap
    if dx + dy > cap:
        raise SizeError(f"path length {dx + dy} exceeds enumeration cap {cap}")
    if dx < 0 or dy < 0 or not q.boundary.contains(*q.end):
        return []

    found: list[LatticePath] = []
    steps: list[Step] = []
    contains = q.boundary.contains

    total = dx + dy
    # (x, y, east_left, north_left, step taken to get here); N is pushed first so E pops first
    stack: list[tuple[int, int, int, int, Optional[Step]]] = [(*q.start, dx, dy, None)]

    while stack:
        x, y, east_left, north_left, step = stack.pop()
        if step is not None:
            depth = total - east_left - north_left
            del steps[depth - 1:]
            steps.append(step)
        if not east_left and not north_left:
            found.append(LatticePath(q.start, tuple(steps)))
            continue
        # prune at the first point outside the boundary
        if north_left and contains(x, y + 1):
            stack.append((x, y + 1, east_left, north_left - 1, Step.N))
        if east_left and contains(x + 1, y):
            stack.append((x + 1, y, east_left - 1, north_left, Step.E))

    logger.debug(f"Enumerated {len(found)} paths from {q.start} to {q.end}")
    return found


@dataclass(frozen=True)
class CountTable:
    """
    Counts |L(u+1,1;m,n;k)| for u+1 ≤ m ≤ m_max, 2 ≤ n ≤ n_max.

    Cells outside the admissible region hold 0.
    """

    u: int
    k: int
    m_max: int
    n_max: int
    values: Mapping[Point, BigInt]

    def __getitem__(self, cell: Point) -> BigInt:
        return self.values[cell]

    def __iter__(self) -> Iterator[tuple[int, int, BigInt]]:
        """Yield (m, n, count) row by row, increasing n then m."""
        for n in range(2, self.n_max + 1):
            for m in range(self.u + 1, self.m_max + 1):
                yield m, n, self.values[(m, n)]

    def row(self, n: int) -> list[BigInt]:
        return [self.values[(m, n)] for m in range(self.u + 1, self.m_max + 1)]


def count_paths_dp(u: int, k: int, m_max: int, n_max: int) -> CountTable:
    """
    Fill |L(u+1,1;m,n;k)| from the recurrence and its initial conditions.

    Seeds the row n = 2 with m - max{u, k-1}, the column m = u+1 with 1 for
    2 ≤ n ≤ ⌊u/(k-1)⌋+1 (only when u ≥ k-1), the line m = (k-1)(n-1) with 0,
    then sweeps |L(m,n)| = |L(m-1,n)| + |L(m,n-1)| by increasing n, then m.

    Raises:
        DomainError: On invalid parameters or ranges
    """
    if u < 0 or k < 2:
        raise DomainError(f"need u ≥ 0 and k ≥ 2 (got u={u}, k={k})")
    if n_max < 2:
        raise DomainError(f"n_max must be ≥ 2 (got n_max={n_max})")
    bound = QueryParams.min_m(n_max, u, k)
    if m_max < bound:
        raise DomainError(f"m_max must be ≥ max{{u+1,(k-1)(n_max-1)}} (got m_max={m_max}, bound {bound})")

    start = u + 1
    table: dict[Point, BigInt] = {}

    for m in range(start, m_max + 1):
        table[(m, 2)] = max(0, m - max(u, k - 1))

    for n in range(3, n_max + 1):
        zero_line = (k - 1) * (n - 1)
        for m in range(start, m_max + 1):
            if m <= zero_line:
                table[(m, n)] = 0
            elif m == start:
                # here u ≥ (k-1)(n-1), so u ≥ k-1 and n ≤ ⌊u/(k-1)⌋+1
                table[(m, n)] = 1
            else:
                table[(m, n)] = table[(m - 1, n)] + table[(m, n - 1)]

    logger.debug(f"DP table filled for u={u}, k={k}, m ≤ {m_max}, n ≤ {n_max}")
    return CountTable(u, k, m_max, n_max, MappingProxyType(table))


def reflect_path(path: LatticePath) -> LatticePath:
    """Mirror a path in the diagonal y = x."""
    x, y = path.start
    return LatticePath((y, x), tuple(step.swapped() for step in path.steps))


def shift_path(path: LatticePath, dx: int, dy: int) -> LatticePath:
    """Translate a path by (dx, dy)."""
    x, y = path.start
    return LatticePath((x + dx, y + dy), path.steps)


def forced_prefix_length(u: int, k: int) -> Optional[int]:
    """
    Number of leading E steps forced on every path of L(u+1,1;m,2;k), m > u+1.

    Returns None when u ≥ k-1, where no prefix is forced.
    """
    return k - 1 - u if u < k - 1 else None


__all__ = [
    "DEFAULT_CAP",
    "Step",
    "LatticePath",
    "BoundaryForm",
    "BoundaryLine",
    "PathQuery",
    "l_query",
    "path_satisfies",
    "enumerate_paths",
    "CountTable",
    "count_paths_dp",
    "reflect_path",
    "shift_path",
    "forced_prefix_length",
]
