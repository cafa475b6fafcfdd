import math

import numpy as np
import pytest

from yamacone.errors import DomainError
from yamacone.geometry.cone import ConeParams
from yamacone.spectral.modes import (
    PositivityVerdict,
    coupling_constant,
    coupling_constant_rewritten,
    indicial_exponents,
    neg_conditions,
    negative_modes,
    odd_indicial_exponents,
    positivity_report,
    scan_window,
    spectral_table,
)

UNIT_S3XS3 = ConeParams(3, 3, 1.0, 1.0)
FLAT5 = ConeParams(1, 3, 1.0, 1.0)


def test_coupling_constant_base_mode() -> None:
    assert coupling_constant(UNIT_S3XS3, 0, 0) == pytest.approx(-1.25)
    assert coupling_constant(UNIT_S3XS3, 1, 0) == pytest.approx(4.75)
    assert coupling_constant(FLAT5, 0, 0) == pytest.approx(0.0, abs=1e-12)


def test_coupling_constant_forms_agree() -> None:
    rng = np.random.default_rng(11)
    for _ in range(200):
        p, q = (int(v) for v in rng.integers(1, 8, size=2))
        cone = ConeParams(p, q, *(float(v) for v in rng.uniform(0.3, 3.0, size=2)))
        i, j = (int(v) for v in rng.integers(0, 5, size=2))
        assert coupling_constant(cone, i, j) == pytest.approx(
            coupling_constant_rewritten(cone, i, j), rel=1e-12, abs=1e-10
        )


def test_indicial_exponents_flat_cone() -> None:
    nu_minus, nu_plus = indicial_exponents(FLAT5, 0, 0)
    assert nu_minus == pytest.approx(-3.0)
    assert nu_plus == pytest.approx(0.0, abs=1e-12)


def test_indicial_exponent_solves_radial_equation() -> None:
    _, nu_plus = indicial_exponents(UNIT_S3XS3, 0, 0)
    assert nu_plus == pytest.approx(2.5 * (math.sqrt(0.8) - 1))
    assert nu_plus == pytest.approx(-0.2639, abs=1e-4)
    # ℓ^ν solves the Q1 = 0 equation: ν(ν + n − 2) = K
    K = coupling_constant(UNIT_S3XS3, 0, 0)
    assert abs(nu_plus * (nu_plus + 5) - K) < 1e-12


def test_vieta_and_odd_exponents() -> None:
    cone = ConeParams(2, 5, 0.8, 1.7)
    for i in range(3):
        for j in range(3):
            nu_minus, nu_plus = indicial_exponents(cone, i, j)
            K = coupling_constant(cone, i, j)
            assert nu_plus + nu_minus == pytest.approx(-(cone.n - 2))
            assert nu_plus * nu_minus == pytest.approx(-K)
            assert nu_minus < nu_plus
            odd_minus, odd_plus = odd_indicial_exponents(cone, i, j)
            assert odd_minus == pytest.approx(nu_minus - 1)
            assert odd_plus == pytest.approx(nu_plus - 1)


def test_spectral_table_order_and_residuals() -> None:
    table = spectral_table(UNIT_S3XS3, 2, 3)
    assert [(m.i, m.j) for m in table] == [(i, j) for i in range(3) for j in range(4)]
    assert all(m.identity_residual < 1e-12 for m in table)
    assert table[0].lambda_p == 0.0
    assert table[-1].lambda_q == 15.0


def test_negative_modes_unit_s3xs3() -> None:
    found = negative_modes(UNIT_S3XS3, 3, 3)
    assert [(i, j) for i, j, _ in found] == [(0, 0)]
    assert found[0][2] == pytest.approx(-1.25)


def test_negative_modes_sign_of_lambda() -> None:
    positive = ConeParams(3, 3, 0.5, 0.5)
    assert negative_modes(positive, 4, 4) == []

    negative = ConeParams(3, 3, 3.0, 3.0)
    found = negative_modes(negative, 4, 4)
    assert (0, 0) in [(i, j) for i, j, _ in found]
    assert found == scan_window(negative, 4, 4)


def test_negative_modes_rejects_negative_window() -> None:
    with pytest.raises(DomainError):
        negative_modes(UNIT_S3XS3, -1, 2)
    with pytest.raises(DomainError):
        coupling_constant(UNIT_S3XS3, 0, -1)


def test_neg_conditions_match_coupling_signs() -> None:
    for cone in (UNIT_S3XS3, ConeParams(3, 3, 3.0, 3.0), ConeParams(1, 5, 2.0, 0.9)):
        k10, k01 = neg_conditions(cone)
        assert k10 == (coupling_constant(cone, 1, 0) > 0)
        assert k01 == (coupling_constant(cone, 0, 1) > 0)


def test_positivity_report() -> None:
    assert positivity_report(ConeParams(3, 3, 0.5, 0.5), False) is (
        PositivityVerdict.POSITIVE_DEFINITE
    )
    assert positivity_report(UNIT_S3XS3, True) is PositivityVerdict.CONDITIONALLY_POSITIVE
    assert positivity_report(UNIT_S3XS3, False) is PositivityVerdict.INDEFINITE
    assert positivity_report(ConeParams(3, 3, 3.0, 3.0), True) is PositivityVerdict.UNKNOWN
