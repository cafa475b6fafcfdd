import pytest

from yamacone.errors import DomainError
from yamacone.verify.suites import (
    SUITES,
    dynamics,
    figures,
    fowler,
    identities,
    modes,
    run_suite,
    series,
    sobolev,
)


def _all_pass(results) -> None:
    failed = [(r.name, r.max_residual, r.tolerance) for r in results if not r.passed]
    assert not failed, failed


def test_identities() -> None:
    results = identities(draws=500)
    assert len(results) == 7
    assert all(r.name.startswith("identity.") for r in results)
    _all_pass(results)


def test_series_slopes() -> None:
    _all_pass(series(instances=4))


def test_figures() -> None:
    _all_pass(figures())


def test_dynamics_cases() -> None:
    results = dynamics()
    assert [r.name for r in results] == [f"dynamics.C{k}" for k in range(1, 5)]
    _all_pass(results)


def test_fowler_suite() -> None:
    results = fowler(dims=(5,))
    assert results[0].diagnostics["periods"] >= 10
    _all_pass(results)


def test_sobolev_and_modes() -> None:
    _all_pass(sobolev(samples=200))
    _all_pass(modes(samples=50))


def test_run_suite_dispatch() -> None:
    assert set(SUITES) == {
        "identities",
        "series",
        "figures",
        "dynamics",
        "fowler",
        "sobolev",
        "modes",
    }
    results = run_suite("identities", draws=10)
    assert results[0].diagnostics["draws"] == 10
    with pytest.raises(DomainError):
        run_suite("bogus")


def test_suites_are_reproducible() -> None:
    first = identities(draws=50, seed=7)
    second = identities(draws=50, seed=7)
    assert [r.max_residual for r in first] == [r.max_residual for r in second]
