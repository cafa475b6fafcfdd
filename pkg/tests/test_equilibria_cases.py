import math

import numpy as np
import pytest

from yamacone.dynamics.asymptotics import sigma_exponent
from yamacone.dynamics.cases import CaseId, FamilyKind, classify_case, solution_families
from yamacone.dynamics.equilibria import (
    EquilibriumKind,
    equilibria,
    find_equilibrium,
    jacobian,
    w2_location,
)
from yamacone.dynamics.params import DynParams, critical_alpha, dyn_params
from yamacone.engine.integrator import vector_field
from yamacone.errors import DomainError
from yamacone.geometry.cone import ConeParams
from yamacone.scenarios.registry import FIGURES, find_by_name


def _raw(a_bar: float, b_bar: float, Q: float, alpha: float, n: int = 7) -> DynParams:
    return DynParams.from_raw(a_bar, b_bar, Q, alpha, n)


def test_vector_field() -> None:
    dp = _raw(-50.0, -15.0, -10.0, 1.2)
    assert vector_field(dp, 0.0, 0.0) == (0.0, 0.0)
    assert vector_field(dp, 1.0, 0.0) == pytest.approx((0.0, -40.0))
    with pytest.raises(DomainError):
        vector_field(dp, -0.1, 0.0)


def test_w2_location_and_residual() -> None:
    dp = _raw(5.5, -5 / 3, 5.0, 1.6)
    x2 = w2_location(dp)
    assert x2 == pytest.approx(1.1 ** (1 / 0.6))
    assert x2 == pytest.approx(1.1721, abs=1e-4)
    fx, fy = vector_field(dp, x2, 0.0)
    assert abs(fx) < 1e-12 and abs(fy) < 1e-12


def test_w2_exists_only_for_positive_ratio() -> None:
    assert [eq.name for eq in equilibria(_raw(-50.0, -15.0, 10.0, 1.2))] == ["w1"]
    assert [eq.name for eq in equilibria(_raw(5.5, -5 / 3, -5.0, 1.6))] == ["w1"]
    assert [eq.name for eq in equilibria(_raw(-50.0, -15.0, 0.0, 1.2))] == ["w1"]
    assert [eq.name for eq in equilibria(_raw(-50.0, -15.0, -10.0, 1.2))] == ["w1", "w2"]


def test_equilibrium_kinds() -> None:
    c1 = _raw(-50.0, -15.0, -10.0, 1.2)
    assert find_equilibrium(c1, "w1").kind is EquilibriumKind.STABLE_NODE
    assert find_equilibrium(c1, "w2").kind is EquilibriumKind.SADDLE
    w1 = find_equilibrium(c1, "w1")
    assert [ev.real for ev in w1.eigvals] == pytest.approx([-10.0, -5.0])

    c3 = _raw(5.5, -5 / 3, 5.0, 1.6)
    assert find_equilibrium(c3, "w1").kind is EquilibriumKind.SADDLE
    assert find_equilibrium(c3, "w2").kind is EquilibriumKind.STABLE_FOCUS

    c3p = find_by_name("fig7_3p").dyn_params()
    assert find_equilibrium(c3p, "w2").kind is EquilibriumKind.STABLE_NODE

    c7 = _raw(1.0, 0.0, 1.0, critical_alpha(7))
    assert find_equilibrium(c7, "w2").kind is EquilibriumKind.CENTER

    assert find_equilibrium(_raw(0.0, -5.0, 5.0, 1.4), "w1").kind is (
        EquilibriumKind.DEGENERATE_NODE
    )
    assert find_equilibrium(_raw(0.0, -5.0, -5.0, 1.4), "w1").kind is (
        EquilibriumKind.WEAK_SADDLE
    )
    assert find_equilibrium(c1, "w3") is None


def test_eigenvalues_match_jacobian() -> None:
    dp = _raw(-50.0, -15.0, -10.0, 1.2)
    for eq in equilibria(dp):
        expected = np.sort(np.linalg.eigvals(jacobian(dp, eq.location[0])).real)
        assert np.sort([ev.real for ev in eq.eigvals]) == pytest.approx(expected, rel=1e-9)


def test_direction_is_unit_eigenvector() -> None:
    dp = _raw(-50.0, -15.0, -10.0, 1.2)
    w1 = find_equilibrium(dp, "w1")
    for index in (0, 1):
        v = w1.direction(index)
        assert np.linalg.norm(v) == pytest.approx(1.0)
        assert v[0] > 0
        assert jacobian(dp, 0.0) @ v == pytest.approx(w1.eigvals[index].real * v)

    focus = find_equilibrium(_raw(5.5, -5 / 3, 5.0, 1.6), "w2")
    assert not focus.has_real_pair
    with pytest.raises(DomainError):
        focus.direction(0)


def test_figures_classify_to_captions() -> None:
    for scenario in FIGURES:
        assert classify_case(scenario.dyn_params()).id.value == scenario.caption_case


def test_classification_examples() -> None:
    assert classify_case(_raw(-50.0, -15.0, -10.0, 1.2)).id is CaseId.C1
    assert classify_case(_raw(-50.0, -15.0, 10.0, 1.2)).id is CaseId.C2
    # The printed coefficients of the C3' figure have a negative w2 discriminant.
    assert classify_case(_raw(5.5, -2.15, 5.0, 1.56)).id is CaseId.C3
    assert classify_case(_raw(5.5, -5 / 3, -5.0, 1.6)).id is CaseId.C4
    assert classify_case(_raw(1.0, 0.0, 1.0, 1.8)).id is CaseId.C7PLUS
    assert classify_case(_raw(1.0, 0.0, -1.0, 1.8)).id is CaseId.C7MINUS


def test_classification_precedence() -> None:
    # Q = 0 wins over alpha = alpha*
    assert classify_case(_raw(1.0, 0.0, 0.0, 1.8)).id is CaseId.C5PLUS
    assert classify_case(_raw(0.0, -5.0, 0.0, 1.4)).id is CaseId.C5MINUS
    assert classify_case(_raw(1e-12, -5.0, 5.0, 1.4)).id is CaseId.C6PLUS


def test_case_one_families() -> None:
    scenario = find_by_name("fig7_1")
    dp = scenario.dyn_params()
    label = classify_case(dp)
    families = solution_families(dp, label, scenario.cone)
    assert [f.family for f in families] == [
        FamilyKind.C_INFINITY,
        FamilyKind.C_ZERO,
        FamilyKind.SEPARATRIX_INCOMING,
        FamilyKind.SEPARATRIX_S,
    ]

    fast = families[-1]
    assert fast.w_exponent == pytest.approx(-10.0)
    assert fast.u_exponent == pytest.approx(sigma_exponent(scenario.cone), abs=1e-9)
    assert fast.verdict.in_H1

    incoming = families[2]
    assert incoming.u_exponent == pytest.approx(-10.0)

    # alpha = 1.2 <= (n+4)/n: faster-than-basic growth is outside L2
    growth = families[0]
    assert growth.verdict is not None and not growth.verdict.in_L2


def test_separatrix_exponent_is_sigma_on_cones() -> None:
    for cone in (ConeParams(3, 3, 1.0, 1.0), ConeParams(2, 4, 0.7, 1.6)):
        for alpha, Q in ((1.3, -2.0), (1.6, 3.0)):
            dp = dyn_params(cone, alpha, Q)
            families = solution_families(dp, classify_case(dp), cone)
            fast = next(f for f in families if f.family is FamilyKind.SEPARATRIX_S)
            assert fast.u_exponent == pytest.approx(sigma_exponent(cone), abs=1e-9)


def test_fowler_family_at_critical_exponent() -> None:
    dp = DynParams.from_lambda(7, 0.0, critical_alpha(7), 1.0)
    families = solution_families(dp, classify_case(dp))
    fowler = next(f for f in families if f.family is FamilyKind.FOWLER)
    assert fowler.u_exponent == pytest.approx(-2.5)
    assert fowler.verdict.in_L2
    assert not fowler.verdict.in_H1


def test_slow_family_at_alpha_zero() -> None:
    dp = _raw(0.0, -5.0, 5.0, 1.4)
    families = solution_families(dp, classify_case(dp))
    slow = next(f for f in families if f.family is FamilyKind.C_ZERO)
    assert slow.w_exponent == pytest.approx(0.0, abs=1e-12)
    assert "slowly" in slow.notes
    assert math.isfinite(slow.u_exponent)
