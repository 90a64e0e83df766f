import cmath

import numpy as np
import pytest

from opuc.cauchy import (
    cauchy_G,
    cauchy_Gstar,
    cauchy_derivatives,
    cauchy_eval,
    cauchy_second_derivatives,
    classify_region,
    g_recurrence_residuals,
    laurent_tail,
)
from opuc.errors import NearBoundaryError

INSIDE = 0.4 * cmath.exp(1j * 0.7)
OUTSIDE = 2.5 * cmath.exp(1j * 2.1)


def test_lebesgue_closed_forms(lebesgue):
    # with unit weight the transform is 1 inside, 0 outside, and the
    # reciprocal transform is -z^{-n} outside
    _, _, v = lebesgue
    w = lebesgue[0]
    for n in (1, 4, 9):
        assert abs(cauchy_G(v, w, n, INSIDE) - 1.0) < 1e-12
        assert abs(cauchy_G(v, w, n, OUTSIDE)) < 1e-12
        assert abs(cauchy_Gstar(v, w, n, OUTSIDE) + OUTSIDE ** -n) < 1e-12


def test_origin_values(bessel2):
    w, _, v = bessel2
    for n in range(1, 11):
        assert abs(cauchy_G(v, w, n, 0.0) - 1.0 / v.b[n]) < 1e-12
        assert abs(cauchy_Gstar(v, w, n, 0.0) - v.alphas[n - 1] / v.b[n - 1]) < 1e-12


def test_recurrences(bessel2, jacobi_complex):
    for w, _, v in (bessel2, jacobi_complex):
        for z in (INSIDE, OUTSIDE):
            for n in (1, 3, 6):
                r1, r2 = g_recurrence_residuals(v, w, n, z)
                assert r1 < 1e-12
                assert r2 < 1e-12


def test_derivatives_against_finite_differences(bessel2):
    w, _, v = bessel2
    n, z, h = 4, OUTSIDE, 1e-5
    dG, dGs = cauchy_derivatives(v, w, n, z)
    fd_G = (cauchy_G(v, w, n, z + h) - cauchy_G(v, w, n, z - h)) / (2 * h)
    fd_Gs = (cauchy_Gstar(v, w, n, z + h) - cauchy_Gstar(v, w, n, z - h)) / (2 * h)
    assert abs(dG - fd_G) < 1e-8
    assert abs(dGs - fd_Gs) < 1e-8


def test_second_derivatives_against_finite_differences(jacobi1):
    w, _, v = jacobi1
    n, z, h = 3, INSIDE, 1e-4
    d2G, d2Gs = cauchy_second_derivatives(v, w, n, z)
    fd = (cauchy_G(v, w, n, z + h) - 2 * cauchy_G(v, w, n, z)
          + cauchy_G(v, w, n, z - h)) / h ** 2
    fds = (cauchy_Gstar(v, w, n, z + h) - 2 * cauchy_Gstar(v, w, n, z)
           + cauchy_Gstar(v, w, n, z - h)) / h ** 2
    assert abs(d2G - fd) < 1e-6
    assert abs(d2Gs - fds) < 1e-6


def test_laurent_tail_lebesgue(lebesgue):
    w, _, v = lebesgue
    g, gs = laurent_tail(v, w, 3)
    assert np.allclose(g, 0.0, atol=1e-12)           # alphas vanish
    assert abs(gs[0] + 1.0) < 1e-12                  # -z^{-n} leading term
    assert np.allclose(gs[1:], 0.0, atol=1e-12)


def test_laurent_tail_bessel(bessel2):
    w, _, v = bessel2
    n = 3
    g, gs = laurent_tail(v, w, n)
    an = v.alphas[n].conjugate()
    an1 = v.alphas[n + 1].conjugate()
    assert abs(g[0] + an / v.b[n]) < 1e-9
    assert abs(g[1] - (an / v.b[n] * v.phi1[n + 1] - an1 / v.b[n + 1])) < 1e-9
    assert abs(gs[0] + 1.0 / v.b[n - 1]) < 1e-9
    assert abs(gs[1] - v.phi1[n] / v.b[n - 1]) < 1e-9
    # third term of the reciprocal tail, sign as displayed
    phi2 = complex(0)
    from opuc.szego import phi_pair
    p = phi_pair(v, n + 1)
    phi2 = p.phi[n - 1]  # second subleading coefficient
    expected = -(v.phi1[n] * v.phi1[n + 1] - phi2) / v.b[n - 1]
    assert abs(gs[2] - expected) < 1e-9


def test_region_classification_and_refusal(bessel2):
    w, _, v = bessel2
    assert classify_region(0.5) == "inside"
    assert classify_region(2.0) == "outside"
    assert classify_region(cmath.exp(0.3j)) == "boundary"
    with pytest.raises(NearBoundaryError):
        cauchy_G(v, w, 2, 1.001)
    # boundary mode admits the same point
    cauchy_G(v, w, 2, 1.001, boundary=True)


def test_cauchy_eval_record(bessel2):
    w, _, v = bessel2
    rec = cauchy_eval(v, w, 3, OUTSIDE)
    assert rec.region == "outside"
    assert rec.G == pytest.approx(cauchy_G(v, w, 3, OUTSIDE))
    assert rec.quad_nodes >= 256
