"""Acceptance suite: one group of cases per criterion, exact at the stated budgets.

Run ``pytest tests/test_acceptance.py`` for the summary lines; add ``--runslow``
for the best-effort n = 4 reducedness cases.
"""

import time

import pytest

from nilred.harness import CheckSpec, run_check
from nilred.orbits import partitions


def _run(name, budget_secs, **params):
    start = time.perf_counter()
    report = run_check(CheckSpec(name, params))
    elapsed = time.perf_counter() - start
    assert elapsed < budget_secs, f"{name} took {elapsed:.1f} s, budget {budget_secs} s"
    return report


def _passes(report):
    assert report.status == "pass", f"{report.status}: {report.witness}"


REDUCED = pytest.mark.criterion(1, "reducedness of N_{n,e}")


@REDUCED
@pytest.mark.parametrize("field", ["Q", "Fp:2", "Fp:3"])
@pytest.mark.parametrize("n,e", [(2, 2), (3, 2), (3, 3)])
def test_reducedness(n, e, field):
    _passes(_run("nilpotent_reduced", 600, n=n, e=e, field=field, timeout_secs=600))


@REDUCED
@pytest.mark.slow
@pytest.mark.parametrize("field", ["Q", "Fp:2", "Fp:3"])
@pytest.mark.parametrize("n,e", [(4, 2), (4, 3)])
def test_reducedness_best_effort(n, e, field):
    report = _run("nilpotent_reduced", 660, n=n, e=e, field=field, timeout_secs=600)
    print(f"status={report.status} after {report.elapsed_ms / 1000:.0f} s")
    assert report.status in ("pass", "timeout"), report.witness


@pytest.mark.criterion(2, "wedge/shuffle identity, N <= 6")
@pytest.mark.parametrize("N", range(1, 7))
def test_wedge_identity(N):
    report = _run("shuffle_identity", 120, N=N)
    _passes(report)
    # every Jordan type of size N, every wedge degree 1..N
    assert report.witness.startswith(f"{len(list(partitions(N))) * N} ")


@pytest.mark.criterion(3, "invariant chart ideal = shuffle chart ideal")
@pytest.mark.parametrize("field", ["Q", "Fp:2"])
@pytest.mark.parametrize("T,n", [((2,), 1), ((2, 2), 2), ((3, 1), 2), ((2, 2, 2), 3)])
def test_chart_equality(T, n, field):
    _passes(_run("chart_equality", 600, type=list(T), n=n, field=field))


@pytest.mark.criterion(4, "surjectivity of phi, n <= 6")
def test_surjectivity():
    start = time.perf_counter()
    for n in range(1, 7):
        _passes(_run("surjectivity", 60, n=n))
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(5, "relative dimension n*blocks over F_5")
@pytest.mark.parametrize("n,e", [(n, e) for n in range(1, 5) for e in range(1, n + 1)])
def test_relative_dimension(n, e):
    _passes(_run("relative_dimension", 300, n=n, e=e, prime=5, seed=0, trials=100))


IDENTITIES = pytest.mark.criterion(6, "ch_inverse, omega involution, omega bijection X -> Z_1")


@IDENTITIES
def test_ch_inverse_products():
    _passes(_run("ch_inverse", 300, n=5, prime=5, seed=0, trials=200))


@IDENTITIES
def test_omega_involution():
    _passes(_run("omega_involution", 300, n=4, prime=7, seed=0, trials=200, order=6, degree=3))


@IDENTITIES
@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [2, 3])
def test_omega_bijection(n, q):
    _passes(_run("omega_bijection", 300, n=n, prime=q))


@pytest.mark.criterion(7, "companion char poly = lam^(pn) det A(lam^-1)")
def test_companion():
    _passes(_run("companion", 60, n=3, prime=5, seed=0, trials=100, degree=2))


@pytest.mark.criterion(8, "non-reducedness contrast (x^2) vs (x)")
@pytest.mark.parametrize("field", ["Q", "Fp:2"])
def test_nonreduced_contrast(field):
    _passes(_run("nonreduced_contrast", 10, field=field))
