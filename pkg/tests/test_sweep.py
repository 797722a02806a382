"""Tests for the cross-validation sweep."""

from fractions import Fraction
from unittest.mock import patch

from ballotdet.closedform import AboveLineQuery
from ballotdet.config import SweepBounds, get_profile
from ballotdet.detkernel import QueryParams
from ballotdet.exact import as_integer, binomial
from ballotdet.sweep import (
    Mismatch,
    check_instance,
    check_reflection,
    iter_above_queries,
    iter_params,
    run_sweep,
)

FAULT_TARGET = "ballotdet.methods.closed_form_method.closed_form_D"


def unsigned_closed_form(p: QueryParams) -> int:
    """The alternating sum with every sign taken positive."""
    total = Fraction(0)
    for i in range(p.u // p.k + 1):
        top = p.m + p.n - 1 - p.k * i
        total += (
            Fraction(p.m - (p.k - 1) * (p.n - 1), top)
            * binomial(top, p.n - 1 - i)
            * binomial(p.u - (p.k - 1) * i, i)
        )
    return as_integer(total, "unsigned sum")


def test_check_instance_example():
    """Test every check passes on the worked example."""
    checks, mismatches = check_instance(QueryParams(11, 5, 1, 3), brute_cap=16)
    assert mismatches == []
    assert checks >= 8


def test_check_instance_boundary_cases():
    """Test the smallest admissible corner and the zero line."""
    for p in (QueryParams(1, 2, 0, 2), QueryParams(6, 4, 0, 3), QueryParams(7, 4, 6, 3)):
        checks, mismatches = check_instance(p, brute_cap=16)
        assert mismatches == []
        assert checks > 0


def test_iter_params_covers_box():
    """Test the parameter generator starts at the admissible minimum."""
    bounds = SweepBounds(u_max=1, k_max=3, n_max=4, m_extra=2)
    params = list(iter_params(bounds, 1, 3))
    assert params[0] == QueryParams(2, 2, 1, 3)
    assert QueryParams(8, 4, 1, 3) in params
    assert len(params) == 3 * 3


def test_iter_above_queries_smallest():
    """Test the reflection generator on the smallest box."""
    assert list(iter_above_queries(0, 1)) == [AboveLineQuery(0, 0, 0, 0, 1)]
    assert all(q.m + q.n <= 6 for q in iter_above_queries(6, 3))


def test_check_reflection_passes():
    """Test the reflection checks on a handful of queries."""
    for q in (AboveLineQuery(0, 0, 2, 4, 2), AboveLineQuery(0, 0, 0, 5, 1), AboveLineQuery(1, 2, 1, 2, 2)):
        checks, mismatches = check_reflection(q)
        assert mismatches == []
        assert checks == 2


def test_smoke_profile_sweep():
    """Test the minimal sweep sees the single corner D(1,2,0,2) = 0."""
    report = run_sweep(get_profile("smoke"))
    assert report.ok
    assert report.instances_checked == 1
    assert report.reflection_instances > 0
    assert report.to_dict()["mismatches"] == []


def test_default_profile_sweep():
    """Test the full default sweep finds no mismatches."""
    report = run_sweep(get_profile("default"))
    assert report.ok, [str(mismatch) for mismatch in report.mismatches[:5]]
    assert report.instances_checked > 1000
    assert report.checks_run > report.instances_checked


def test_sweep_detects_sign_error():
    """Test a sign error injected into the closed form is caught and blamed on it."""
    bounds = SweepBounds(u_max=3, k_max=2, n_max=4, m_extra=2, reflect_cap=4)
    with patch(FAULT_TARGET, side_effect=unsigned_closed_form):
        report = run_sweep(bounds, workers=1)

    assert not report.ok
    assert all("sum" in mismatch.dissenting for mismatch in report.mismatches)
    assert {mismatch.check for mismatch in report.mismatches} <= {"four_way", "integrality"}


def test_sweep_is_independent_of_workers():
    """Test parallel and serial sweeps produce the same report."""
    bounds = SweepBounds(u_max=2, k_max=3, n_max=4, m_extra=2, brute_cap=14, reflect_cap=5)
    assert run_sweep(bounds, workers=2).to_dict() == run_sweep(bounds, workers=1).to_dict()


def test_mismatch_rendering():
    """Test a mismatch renders its location, values and dissenters."""
    mismatch = Mismatch({"m": 5, "n": 3, "u": 3, "k": 2}, "four_way", {"det": "3", "sum": "4"}, ("sum",))
    assert str(mismatch) == "four_way failed at (m=5, n=3, u=3, k=2): det=3, sum=4 (dissenting: sum)"
    assert mismatch.to_dict()["dissenting"] == ["sum"]
