import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from opuc.errors import UnsupportedWeightError
from opuc.weights import (
    WeightSpec,
    eval_nu,
    eval_weight,
    log_derivative,
    log_derivative2,
    pearson_data,
    weight_values,
)


def test_lebesgue_is_one():
    w = WeightSpec.lebesgue()
    theta = np.linspace(0.1, 6.0, 7)
    assert np.allclose(weight_values(w, theta), 1.0)


def test_bessel_circle_values():
    w = WeightSpec.bessel(2.0)
    # e^{l cos theta} at theta = 0 is e^l
    assert eval_weight(w, 0.0).real == pytest.approx(math.exp(2.0))
    assert eval_weight(w, math.pi).real == pytest.approx(math.exp(-2.0))


def test_bessel_nu_matches_weight_on_circle():
    w = WeightSpec.bessel(1.5)
    for theta in (0.3, 2.0, 4.5):
        z = cmath.exp(1j * theta)
        assert eval_nu(w, z) == pytest.approx(eval_weight(w, theta))


def test_jacobi_circle_form_real_positive():
    w = WeightSpec.jacobi(1.0 + 0.5j)
    theta = np.linspace(0.2, 6.0, 9)
    vals = weight_values(w, theta)
    assert np.all(np.abs(vals.imag) < 1e-14)
    assert np.all(vals.real > 0)


def test_jacobi_nu_continuation_matches_circle():
    w = WeightSpec.jacobi(1.0 + 0.5j)
    for theta in (0.5, 2.5, 5.0):
        z = cmath.exp(1j * theta)
        assert eval_nu(w, z) == pytest.approx(complex(eval_weight(w, theta)),
                                              rel=1e-10)


def test_jacobi_real_parameter_symmetric_weight():
    # for real b the weight is (2 sin(theta/2))^{2 lambda}
    w = WeightSpec.jacobi(1.0)
    for theta in (0.7, 2.0):
        expected = (2.0 * math.sin(theta / 2.0)) ** 2
        assert eval_weight(w, theta).real == pytest.approx(expected)


@given(st.floats(0.1, 5.0), st.floats(-0.9, 0.9), st.floats(0.1, 6.0))
def test_bessel_log_derivative_is_fd_limit(ell, r, theta):
    w = WeightSpec.bessel(ell)
    z = (1.5 + r) * cmath.exp(1j * theta)
    h = 1e-6
    fd = (cmath.log(eval_nu(w, z + h)) - cmath.log(eval_nu(w, z - h))) / (2 * h)
    assert abs(log_derivative(w, z) - fd) < 1e-6 * max(1.0, abs(fd))


def test_jacobi_log_derivative_fd():
    w = WeightSpec.jacobi(1.0 + 0.5j)
    z = 0.4 * cmath.exp(0.9j)
    h = 1e-6
    fd = (cmath.log(eval_nu(w, z + h)) - cmath.log(eval_nu(w, z - h))) / (2 * h)
    assert abs(log_derivative(w, z) - fd) < 1e-7


def test_log_derivative2_fd():
    for w in (WeightSpec.bessel(2.0), WeightSpec.jacobi(1.0)):
        z = 2.5 * cmath.exp(0.6j)
        h = 1e-5
        fd = (log_derivative(w, z + h) - log_derivative(w, z - h)) / (2 * h)
        assert abs(log_derivative2(w, z) - fd) < 1e-7


def test_pearson_data_bessel():
    A, q = pearson_data(WeightSpec.bessel(2.0))
    # A = z, q = (z^2 - 1)
    assert np.allclose(A, [0.0, 1.0])
    assert np.allclose(q, [-1.0, 0.0, 1.0])


def test_pearson_data_jacobi():
    A, q = pearson_data(WeightSpec.jacobi(1.0 + 0.5j))
    assert np.allclose(A, [1.0, -1.0])
    assert np.allclose(q, [-(1.0 - 0.5j), -(1.0 + 0.5j)])


def test_singular_points():
    assert WeightSpec.bessel(1.0).singular_points() == (0.0,)
    assert set(WeightSpec.jacobi(1.0).singular_points()) == {0.0, 1.0}
    assert WeightSpec.lebesgue().singular_points() == ()


def test_invalid_parameters_rejected():
    with pytest.raises(ValueError):
        WeightSpec.bessel(-1.0)
    with pytest.raises(ValueError):
        WeightSpec.jacobi(-0.6)


def test_nontrivial_h_refused_for_pearson():
    w = WeightSpec.bessel(2.0, h_series=(1.0, 0.5))
    with pytest.raises(UnsupportedWeightError):
        pearson_data(w)
