from fractions import Fraction

import pytest

from whittaker_paths.cartan import WeightParam, build_cartan
from whittaker_paths.errors import UnsupportedType
from whittaker_paths import quantum as qm
from whittaker_paths.verify import Job, SuiteResult, available_suites, run_suites


def job(name, degree=3, **kw):
    cd = build_cartan(name)
    mode = "affine" if cd.affine else "finite"
    return Job(cd, WeightParam.symbolic(cd.rank, affine=cd.affine), degree, mode=mode, **kw)


def test_suite_result_counts():
    r = SuiteResult("x")
    r.run("a", lambda: True)
    r.run("b", lambda: 1 / 0)
    r.run("c", lambda: False)
    assert (r.instances, r.singular, r.failures) == (2, 1, ["c"])
    assert r.summary() == "x: FAIL, 2 instances, 1 singular; first counterexample c"


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_all_finite_suites_pass(name):
    results = run_suites(job(name))
    assert results and all(r.passed for r in results), [r.summary() for r in results if not r.passed]


def test_a2_only_suites():
    assert "bump" in available_suites(job("A2"))
    assert "bump" not in available_suites(job("B2"))
    with pytest.raises(UnsupportedType):
        run_suites(job("B2"), "third")


def test_affine_suites():
    results = run_suites(job("A2~", degree=3, j_max=1))
    assert all(r.passed for r in results)
    assert {r.name for r in results} >= {"oracle", "deformed", "exponent", "critical[limit]"}


def test_quantum_suites():
    ctx = qm.QContext.of((Fraction(5, 3), Fraction(11, 2)))
    results = run_suites(Job(None, None, 3, mode="quantum", qctx=ctx))
    assert all(r.passed for r in results)


def test_unknown_suite():
    with pytest.raises(UnsupportedType):
        run_suites(job("A2"), ["nope"])
