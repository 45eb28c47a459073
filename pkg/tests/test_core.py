import math

import pytest
from hypothesis import given, strategies as st

from sqzlab.core import (
    DomainError,
    MethodPoint,
    QuadratureStats,
    SqueezedAxis,
    squeeze_metrics,
    uncertainty,
)

variances = st.floats(min_value=0.01, max_value=100.0)


def test_uncertainty_vacuum():
    assert uncertainty(QuadratureStats(1.0, 1.0)) == 1.0


def test_uncertainty_pure_squeezed():
    assert uncertainty(QuadratureStats(math.exp(-2), math.exp(2))) == pytest.approx(
        1.0, abs=1e-12
    )


def test_uncertainty_mixed_value():
    # sqrt(0.56767 * 4.19453), frozen from a 40-digit evaluation
    got = uncertainty(QuadratureStats(0.56767, 4.19453))
    assert got == pytest.approx(1.5430841989664725, abs=1e-12)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_uncertainty_rejects_bad_input(bad):
    with pytest.raises(DomainError):
        QuadratureStats(bad, 1.0)
    with pytest.raises(DomainError):
        QuadratureStats(1.0, bad)


def test_metrics_vacuum():
    m = squeeze_metrics(QuadratureStats(1.0, 1.0))
    assert m.squeeze_db == 0.0
    assert m.uncertainty == 1.0


def test_metrics_squeezed_vacuum():
    m = squeeze_metrics(QuadratureStats(math.exp(-2), math.exp(2)))
    assert m.squeeze_db == pytest.approx(8.685889638065035, abs=1e-12)
    assert m.squeezed_axis is SqueezedAxis.AMPLITUDE


def test_metrics_phase_squeezed():
    m = squeeze_metrics(QuadratureStats(4.0, 0.25))
    assert m.squeezed_axis is SqueezedAxis.PHASE
    assert m.squeeze_db == pytest.approx(6.020599913279624, abs=1e-12)


def test_metrics_sign_convention():
    # squeeze_db >= 0 exactly when the smaller variance is at or below vacuum
    assert squeeze_metrics(QuadratureStats(0.9, 2.0)).squeeze_db > 0.0
    assert squeeze_metrics(QuadratureStats(1.1, 2.0)).squeeze_db < 0.0


@given(var_x=variances, var_p=variances)
def test_uncertainty_symmetric(var_x, var_p):
    a = uncertainty(QuadratureStats(var_x, var_p))
    b = uncertainty(QuadratureStats(var_p, var_x))
    assert a == b


@given(var_x=variances, var_p=variances)
def test_db_mismatch_identity(var_x, var_p):
    # for product >= 1: |antisqueeze_db| - squeeze_db = 10 log10(U^2)
    stats = QuadratureStats(var_x, var_p)
    if var_x * var_p < 1.0:
        return
    m = squeeze_metrics(stats)
    mismatch = abs(m.antisqueeze_db) - m.squeeze_db
    assert mismatch == pytest.approx(10.0 * math.log10(m.uncertainty**2), abs=1e-12)
    assert mismatch >= -1e-12


@given(var_x=variances, var_p=variances)
def test_axis_assignment(var_x, var_p):
    m = squeeze_metrics(QuadratureStats(var_x, var_p))
    if var_x <= var_p:
        assert m.squeezed_axis is SqueezedAxis.AMPLITUDE
    else:
        assert m.squeezed_axis is SqueezedAxis.PHASE


def test_method_point_rejects_negative_alpha_sq():
    with pytest.raises(DomainError):
        MethodPoint(alpha_sq=-0.1, stats=QuadratureStats(1.0, 1.0))
