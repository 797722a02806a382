"""Cross-validation sweep over every valid quadruple in a parameter box.

Each quadruple is checked by the four counting methods plus the identities
used to tie the determinant to the path count: the row operation, the shared
bottom row, the column split, the recurrence, the initial conditions, the
shift to the below-line formula and the bijections on enumerated paths.
"""

import collections
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from loguru import logger

from .closedform import (
    AboveLineQuery,
    closed_form_D,
    count_above_line,
    count_below_line,
    shifted_below_query,
)
from .config import SweepBounds
from .detkernel import (
    QueryParams,
    apply_row_operation,
    build_matrix,
    build_row_reduced,
    check_bottom_row,
    check_column_decomposition,
    determinant,
    evaluate_D,
    is_unit_lower_triangular,
    last_column_is_zero,
    split_last_column,
)
from .errors import BallotDetError, IntegralityError
from .latticepath import (
    BoundaryForm,
    BoundaryLine,
    PathQuery,
    Step,
    enumerate_paths,
    forced_prefix_length,
    l_query,
    path_satisfies,
    reflect_path,
    shift_path,
)
from .methods import METHOD_NAMES, get_method


@dataclass(frozen=True)
class Mismatch:
    """One failed check: where, which, and the values involved."""

    params: dict[str, int]
    check: str
    values: dict[str, str]
    dissenting: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "params": self.params,
            "check": self.check,
            "values": self.values,
            "dissenting": list(self.dissenting),
        }

    def __str__(self) -> str:
        where = ", ".join(f"{key}={value}" for key, value in self.params.items())
        values = ", ".join(f"{key}={value}" for key, value in self.values.items())
        blame = f" (dissenting: {', '.join(self.dissenting)})" if self.dissenting else ""
        return f"{self.check} failed at ({where}): {values}{blame}"


@dataclass
class SweepReport:
    bounds: SweepBounds
    instances_checked: int = 0
    checks_run: int = 0
    reflection_instances: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "bounds": asdict(self.bounds),
            "instances_checked": self.instances_checked,
            "reflection_instances": self.reflection_instances,
            "checks_run": self.checks_run,
            "mismatches": [mismatch.to_dict() for mismatch in self.mismatches],
        }


class _Checker:
    """Collects check counts and mismatches for one parameter point."""

    def __init__(self, params: dict[str, int]):
        self.params = params
        self.checks = 0
        self.mismatches: list[Mismatch] = []

    def fail(self, check: str, values: dict, dissenting: tuple[str, ...] = ()):
        self.mismatches.append(
            Mismatch(self.params, check, {key: str(value) for key, value in values.items()}, dissenting)
        )

    def expect(self, check: str, condition: Callable[[], bool], **values):
        self.checks += 1
        try:
            if not condition():
                self.fail(check, values)
        except BallotDetError as e:
            self.fail(check, {**values, "error": e})

    def agree(self, check: str, values: dict[str, int]):
        """Record a mismatch naming the methods that disagree with the majority."""
        self.checks += 1
        if len(set(values.values())) <= 1:
            return
        majority = collections.Counter(values.values()).most_common(1)[0][0]
        dissenting = tuple(name for name, value in values.items() if value != majority)
        self.fail(check, values, dissenting)


def _method_values(checker: _Checker, p: QueryParams, brute_cap: int) -> dict[str, int]:
    values = {}
    for name in METHOD_NAMES:
        if name == "brute" and p.m + p.n > brute_cap:
            continue
        try:
            values[name] = get_method(name, brute_cap=brute_cap).count(p)
        except IntegralityError as e:
            checker.checks += 1
            checker.fail("integrality", {name: e}, (name,))
    return values


def _check_paths(checker: _Checker, p: QueryParams, brute_cap: int):
    paths = enumerate_paths(l_query(p), cap=brute_cap)
    below = BoundaryLine(BoundaryForm.BELOW_ORIGIN, p.k - 1)
    shifted = [shift_path(path, -1, -1) for path in paths]

    checker.expect(
        "shift_bijection",
        lambda: all(path_satisfies(path, below) for path in shifted)
        and len(enumerate_paths(PathQuery((p.u, 0), (p.m - 1, p.n - 1), below), cap=brute_cap)) == len(paths),
        paths=len(paths),
    )

    prefix = forced_prefix_length(p.u, p.k)
    if p.n == 2 and prefix is not None and p.m > p.u + 1:
        checker.expect(
            "forced_prefix",
            lambda: all(path.steps[:prefix] == (Step.E,) * prefix for path in paths),
            prefix=prefix,
        )


def check_instance(p: QueryParams, brute_cap: int) -> tuple[int, list[Mismatch]]:
    """
    Run every applicable check on one quadruple.

    Returns:
        (number of checks run, mismatches found)
    """
    checker = _Checker(asdict(p))
    m, n, u, k = p.m, p.n, p.u, p.k

    values = _method_values(checker, p, brute_cap)
    checker.agree("four_way", values)
    d = values["det"]

    if n >= 3:
        checker.expect(
            "row_reduction",
            lambda: determinant(build_row_reduced(p)) == d
            and apply_row_operation(build_matrix(p)).rows == build_row_reduced(p).rows,
            D=d,
        )
        checker.expect("bottom_row", lambda: check_bottom_row(p))
        checker.expect("column_decomposition", lambda: check_column_decomposition(p), D=d)

        def column_split() -> bool:
            alpha, beta = split_last_column(p)
            return determinant(alpha) == evaluate_D(p.shift_m(1)) and determinant(beta) == -evaluate_D(
                QueryParams(m + 1, n - 1, u, k)
            )

        checker.expect("column_split", column_split)

        if m >= max(u + 2, (k - 1) * (n - 1) + 1):
            checker.expect(
                "recurrence",
                lambda: d == evaluate_D(p.shift_m(-1)) + evaluate_D(QueryParams(m, n - 1, u, k)),
                D=d,
            )

    if n == 2:
        # the n = 2 formula is checked on the whole admissible range, not only m ≥ max{u+2, k}
        checker.expect("initial_row_n2", lambda: d == m - max(u, k - 1), D=d)

    if m == u + 1 and u >= k - 1 and n <= u // (k - 1) + 1:
        checker.expect(
            "initial_column",
            lambda: d == 1 and is_unit_lower_triangular(build_matrix(p)),
            D=d,
        )

    if m == (k - 1) * (n - 1) and n >= max(2, -(-u // (k - 1)) + 1):
        checker.expect("zero_line", lambda: d == 0 and last_column_is_zero(build_matrix(p)), D=d)

    if m - 1 >= (k - 1) * (n - 1):
        checker.expect(
            "shifted_formula",
            lambda: closed_form_D(p) == count_below_line(shifted_below_query(p)),
            D=d,
        )

    if m + n <= brute_cap:
        _check_paths(checker, p, brute_cap)

    return checker.checks, checker.mismatches


def iter_params(bounds: SweepBounds, u: int, k: int):
    for n in range(2, bounds.n_max + 1):
        low = QueryParams.min_m(n, u, k)
        for m in range(low, low + bounds.m_extra + 1):
            yield QueryParams(m, n, u, k)


def _check_group(job: tuple[SweepBounds, int, int]) -> tuple[int, int, list[Mismatch]]:
    bounds, u, k = job
    instances = checks = 0
    mismatches: list[Mismatch] = []
    for p in iter_params(bounds, u, k):
        ran, found = check_instance(p, bounds.brute_cap)
        instances += 1
        checks += ran
        mismatches.extend(found)
    logger.debug(f"Checked u={u}, k={k}: {instances} instances, {len(mismatches)} mismatches")
    return instances, checks, mismatches


def iter_above_queries(total_max: int, k_max: int):
    """Every valid above-line query with m + n ≤ total_max and k ≤ k_max."""
    for k in range(1, k_max + 1):
        for m in range(total_max + 1):
            for n in range(k * m, total_max - m + 1):
                for a in range(m + 1):
                    for b in range(k * a, n + 1):
                        yield AboveLineQuery(a, b, m, n, k)


def check_reflection(q: AboveLineQuery) -> tuple[int, list[Mismatch]]:
    """Compare enumeration, the above-line sum, and both on the reflected side."""
    checker = _Checker(asdict(q))
    above = BoundaryLine(BoundaryForm.ABOVE_ORIGIN, q.k)
    below = BoundaryLine(BoundaryForm.BELOW_ORIGIN, q.k)
    cap = q.m + q.n
    paths = enumerate_paths(PathQuery((q.a, q.b), (q.m, q.n), above), cap=cap)
    reflected = enumerate_paths(PathQuery((q.b, q.a), (q.n, q.m), below), cap=cap)

    values = {"enumerated": len(paths), "reflected_enumerated": len(reflected)}
    try:
        values["above_sum"] = count_above_line(q)
        if q.m >= 1:
            values["below_sum"] = count_below_line(q.reflected())
    except IntegralityError as e:
        checker.checks += 1
        checker.fail("integrality", {"error": e})
    checker.agree("reflection", values)
    checker.expect(
        "reflected_paths",
        lambda: all(path_satisfies(reflect_path(path), below) for path in paths),
    )
    return checker.checks, checker.mismatches


def run_reflection_sweep(total_max: int, k_max: int) -> tuple[int, int, list[Mismatch]]:
    instances = checks = 0
    mismatches: list[Mismatch] = []
    for q in iter_above_queries(total_max, k_max):
        ran, found = check_reflection(q)
        instances += 1
        checks += ran
        mismatches.extend(found)
    return instances, checks, mismatches


def run_sweep(bounds: SweepBounds, workers: Optional[int] = 1) -> SweepReport:
    """
    Check every valid quadruple within ``bounds``.

    Work is split by (u, k); results are merged in parameter order, so the
    report does not depend on ``workers``.

    Args:
        bounds: Parameter box and brute-force caps
        workers: Process count; 1 (or None) runs in-process

    Returns:
        The merged report
    """
    logger.info(f"Starting sweep: {bounds}")
    jobs = [(bounds, u, k) for u in range(bounds.u_max + 1) for k in range(2, bounds.k_max + 1)]

    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_check_group, jobs))
    else:
        results = [_check_group(job) for job in jobs]

    report = SweepReport(bounds)
    for instances, checks, mismatches in results:
        report.instances_checked += instances
        report.checks_run += checks
        report.mismatches.extend(mismatches)

    instances, checks, mismatches = run_reflection_sweep(bounds.reflect_cap, bounds.k_max)
    report.reflection_instances = instances
    report.checks_run += checks
    report.mismatches.extend(mismatches)

    if report.ok:
        logger.success(
            f"Sweep passed: {report.instances_checked} quadruples, "
            f"{report.reflection_instances} reflection queries, {report.checks_run} checks"
        )
    else:
        logger.warning(f"Sweep found {len(report.mismatches)} mismatches")
    return report


__all__ = [
    "Mismatch",
    "SweepReport",
    "check_instance",
    "check_reflection",
    "iter_params",
    "iter_above_queries",
    "run_reflection_sweep",
    "run_sweep",
]
