"""Closed-form structure matrices and the differential identity residuals.

For the Bessel-type and Jacobi-type weights (with trivial entire factor)
the structure matrix times the pole-clearing factor is polynomial in z with
coefficients built from the recurrence data.  This module provides those
closed forms, the zero-curvature residuals, and the first- and second-order
differential relations for the polynomials and second-kind functions.

Polynomial identities are checked coefficientwise (exact coefficient
algebra, no quadrature); identities involving the second-kind functions are
checked pointwise off the circle.
"""

from __future__ import annotations

import numpy as np

from .cauchy import (
    DEFAULT_RTOL,
    cauchy_G,
    cauchy_Gstar,
    cauchy_derivatives,
    cauchy_second_derivatives,
)
from .matrix2 import Matrix2C
from .rh import (
    assemble_Y,
    assemble_Y_deriv,
    assemble_Y_second_deriv,
    log_diag_factor,
    log_diag_factor_deriv,
    structure_matrix_numeric,
    transfer_matrix,
    transfer_matrix_deriv,
)
from .szego import VerblunskyTable, phi_pair
from .weights import WeightSpec

_P = np.polynomial.polynomial

_REAL_ALPHA_TOL = 1e-10


def _real_alphas(v: VerblunskyTable, upto: int) -> list[float]:
    """Bessel closed forms presume real alphas; enforce and strip."""
    for k in range(upto + 1):
        if abs(v.alphas[k].imag) > _REAL_ALPHA_TOL:
            raise ValueError(
                f"closed form requires real recurrence coefficients; "
                f"Im(alpha_{k}) = {v.alphas[k].imag:g}"
            )
    return [v.alphas[k].real for k in range(upto + 1)]


def _max_coeff(p: np.ndarray) -> float:
    return float(np.max(np.abs(p))) if len(p) else 0.0


def _shift(p: np.ndarray, k: int) -> np.ndarray:
    """Multiply a coefficient vector by z^k."""
    return np.concatenate((np.zeros(k, dtype=complex), p))


# ---------------------------------------------------------------------------
# closed-form structure matrices


def mtilde_bessel(v: VerblunskyTable, ell: float, n: int, z: complex) -> Matrix2C:
    """z^2 M_n for the Bessel-type weight, H == 1; entire in z, trace-free."""
    if n < 2:
        raise ValueError("bessel closed form needs n >= 2")
    if v.nmax < n + 1:
        raise ValueError("recurrence table too short (needs alpha_n)")
    a = _real_alphas(v, n)
    b = v.b
    z = complex(z)
    d = ell / 4.0 * z ** 2 + n / 2.0 * z + ell / 4.0 * (b[n - 1] / b[n] - a[n - 1] ** 2)
    m12 = -(ell / 2.0) / b[n] * (a[n - 1] - a[n] * z)
    m21 = -(ell / 2.0) * b[n - 1] * (a[n - 1] - a[n - 2] * z)
    return Matrix2C(d, m12, m21, -d)


def mtilde_bessel_pre_liouville(v: VerblunskyTable, ell: float, n: int,
                                z: complex) -> Matrix2C:
    """The alternative display of the same matrix, kept as a cross-check.

    Its constant terms are written through the subleading polynomial
    coefficients instead of the value at the origin; agreement of the two
    displays is a nontrivial identity of the recurrence data (see
    compare_bessel_mtilde_forms).
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    if v.nmax < n + 1:
        raise ValueError("recurrence table too short (needs alpha_n)")
    a = _real_alphas(v, n)
    b = v.b
    z = complex(z)
    phi1n = complex(v.phi1[n])
    # coefficient of z^1 in Phi_{n-1} (subleading-but-one), conjugated
    pm1 = phi_pair(v, n - 1).phi
    low1 = complex(pm1[1]).conjugate() if len(pm1) > 1 else 0.0 + 0.0j
    d = (ell / 4.0 * z ** 2 + n / 2.0 * z
         - 0.25 * (b[n - 1] / b[n] * a[n] * a[n - 2] + ell + 4.0 * phi1n))
    m12 = ((ell / 2.0) * a[n] * z / b[n]
           + a[n] * (n + 1 + (ell / 2.0) * (phi1n - 1.0)) / b[n]
           + (ell / 2.0) * a[n - 1] / b[n + 1])
    m21 = b[n - 1] * ((ell / 2.0) * a[n - 2] * z
                      + b[n - 1] * (n - 1 - (ell / 2.0) * phi1n) * a[n - 2]
                      + low1)
    d22 = (-ell / 4.0 * z ** 2 - n / 2.0 * z
           - 0.25 * (b[n - 1] / b[n] * a[n] * a[n - 2] - ell - 4.0 * phi1n))
    return Matrix2C(d, m12, m21, d22)


def compare_bessel_mtilde_forms(v: VerblunskyTable, ell: float, n: int,
                                z: complex) -> float:
    """Entrywise max deviation between the two displayed Bessel forms."""
    return max(
        abs(x - y)
        for x, y in zip(
            mtilde_bessel(v, ell, n, z).entries(),
            mtilde_bessel_pre_liouville(v, ell, n, z).entries(),
        )
    )


def mtilde_jacobi(v: VerblunskyTable, b: complex, n: int, z: complex) -> Matrix2C:
    """z(1-z) M_n for the Jacobi-type weight, H == 1; linear in z, trace-free."""
    if n < 1:
        raise ValueError("jacobi closed form needs n >= 1")
    b = complex(b)
    bb = b.conjugate()
    a = v.alphas[n - 1]
    z = complex(z)
    d = -((b + n) * z + (bb + n) * (2.0 * abs(a) ** 2 - 1.0)) / 2.0
    m12 = -(bb + n) * a.conjugate() / v.b[n]
    m21 = -v.b[n - 1] * (bb + n) * a
    return Matrix2C(d, m12, m21, -d)


def jacobi_residue_at_one(v: VerblunskyTable, b: complex, n: int) -> Matrix2C:
    """Residue matrix of M_n at z = 1: minus the closed form evaluated there."""
    return -mtilde_jacobi(v, b, n, 1.0)


# ---------------------------------------------------------------------------
# zero-curvature residuals


def curvature_residual_generic(v: VerblunskyTable, w: WeightSpec, n: int,
                               z: complex, rtol: float = DEFAULT_RTOL) -> float:
    """|| T_n' - T_n/(2z) - (M_{n+1} T_n - T_n M_n) || with numeric M."""
    z = complex(z)
    T = transfer_matrix(v, n, z)
    dT = transfer_matrix_deriv()
    Mn = structure_matrix_numeric(v, w, n, z, rtol)
    Mn1 = structure_matrix_numeric(v, w, n + 1, z, rtol)
    resid = dT - T.scale(1.0 / (2.0 * z)) - ((Mn1 @ T) - (T @ Mn))
    return resid.frobenius()


def curvature_residual_bessel(v: VerblunskyTable, ell: float, n: int,
                              z: complex) -> float:
    """Purely algebraic zero-curvature residual with the Bessel closed form."""
    if ell == 0.0:
        return 0.0
    if n < 2:
        raise ValueError("needs n >= 2")
    z = complex(z)
    T = transfer_matrix(v, n, z)
    dT = transfer_matrix_deriv()
    Mt_n = mtilde_bessel(v, ell, n, z)
    Mt_n1 = mtilde_bessel(v, ell, n + 1, z)
    resid = dT.scale(z ** 2) + (T @ Mt_n) - T.scale(z / 2.0) - (Mt_n1 @ T)
    return resid.frobenius()


def curvature_residual_jacobi(v: VerblunskyTable, b: complex, n: int,
                              z: complex) -> float:
    """Algebraic zero-curvature residual with the Jacobi closed form."""
    if complex(b) == 0:
        return 0.0
    z = complex(z)
    T = transfer_matrix(v, n, z)
    dT = transfer_matrix_deriv()
    Mt_n = mtilde_jacobi(v, b, n, z)
    Mt_n1 = mtilde_jacobi(v, b, n + 1, z)
    resid = dT.scale(z * (1.0 - z)) + (T @ Mt_n) - T.scale((1.0 - z) / 2.0) - (Mt_n1 @ T)
    return resid.frobenius()


def second_curvature_residual(v: VerblunskyTable, w: WeightSpec, n: int,
                              z: complex, rtol: float = DEFAULT_RTOL) -> float:
    """Residual of the quadratic compatibility relation (numeric M)."""
    z = complex(z)
    T = transfer_matrix(v, n, z)
    A = transfer_matrix_deriv() - T.scale(1.0 / (2.0 * z))
    Mn = structure_matrix_numeric(v, w, n, z, rtol)
    Mn1 = structure_matrix_numeric(v, w, n + 1, z, rtol)
    lhs = (Mn1 @ A) + (A @ Mn)
    rhs = (Mn1 @ Mn1 @ T) - (T @ Mn @ Mn)
    return (lhs - rhs).frobenius()


# ---------------------------------------------------------------------------
# first-order differential relations


def first_order_residuals_bessel(v: VerblunskyTable, w: WeightSpec, ell: float,
                                 n: int, z: complex, rtol: float = DEFAULT_RTOL
                                 ) -> tuple[float, float, float, float]:
    """Residuals of the four scalar first-order relations (Bessel, H == 1).

    Polynomial rows are checked coefficientwise; the second-kind rows are
    evaluated at z (which must be off circle and singularities).
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    a = _real_alphas(v, n)
    b = v.b
    ratio = b[n - 1] / b[n]
    pn = phi_pair(v, n)
    ps = phi_pair(v, n - 1)

    c_diag = np.array([ell / 2.0 - ell / 2.0 * a[n - 1] ** 2, float(n)], dtype=complex)
    c_mix = (ell / 2.0) * ratio * np.array([a[n - 1], -a[n]], dtype=complex)
    r_phi = _max_coeff(
        _P.polysub(_shift(_P.polyder(pn.phi), 2),
                   _P.polyadd(_P.polymul(c_diag, pn.phi),
                              _P.polymul(c_mix, ps.phistar)))
    )

    c_star_mix = (ell / 2.0) * np.array([a[n - 1], -a[n - 2]], dtype=complex)
    c_star_diag = np.array([ell / 2.0 * a[n - 1] ** 2, 0.0, -ell / 2.0], dtype=complex)
    r_star = _max_coeff(
        _P.polysub(_shift(_P.polyder(ps.phistar), 2),
                   _P.polyadd(_P.polymul(c_star_mix, pn.phi),
                              _P.polymul(c_star_diag, ps.phistar)))
    )

    z = complex(z)
    G = cauchy_G(v, w, n, z, rtol)
    Gs = cauchy_Gstar(v, w, n, z, rtol)
    dG, dGs = cauchy_derivatives(v, w, n, z, rtol)
    r_G = abs(z ** 2 * dG
              - (ell / 2.0 * z ** 2 - ell / 2.0 * a[n - 1] ** 2) * G
              - (ell / 2.0) * ratio * (a[n - 1] - a[n] * z) * Gs)
    r_Gs = abs(z ** 2 * dGs
               - (ell / 2.0) * (a[n - 1] - a[n - 2] * z) * G
               - (-n * z - ell / 2.0 + ell / 2.0 * a[n - 1] ** 2) * Gs)
    return r_phi, r_G, r_star, r_Gs


def first_order_residuals_jacobi(v: VerblunskyTable, w: WeightSpec, b: complex,
                                 n: int, z: complex, rtol: float = DEFAULT_RTOL
                                 ) -> tuple[float, float, float, float]:
    """Residuals of the four scalar first-order relations (Jacobi, H == 1)."""
    if n < 1:
        raise ValueError("needs n >= 1")
    b = complex(b)
    bb = b.conjugate()
    a = v.alphas[n - 1]
    asq = abs(a) ** 2
    pn = phi_pair(v, n)
    ps = phi_pair(v, n - 1)
    zz1 = np.array([0.0, 1.0, -1.0], dtype=complex)  # z(1-z)

    c_diag = np.array([(bb + n) * (1.0 - asq), -float(n)], dtype=complex)
    mix = (bb + n) * (1.0 - asq) * a.conjugate()
    r_phi = _max_coeff(
        _P.polysub(_P.polymul(zz1, _P.polyder(pn.phi)),
                   _P.polyadd(_P.polymul(c_diag, pn.phi), mix * ps.phistar))
    )

    c_star = np.array([(bb + n) * asq, b], dtype=complex)
    mix_star = (bb + n) * a
    r_star = _max_coeff(
        _P.polysub(_P.polymul(zz1, _P.polyder(ps.phistar)),
                   _P.polyadd(_P.polymul(c_star, ps.phistar), mix_star * pn.phi))
    )

    z = complex(z)
    G = cauchy_G(v, w, n, z, rtol)
    Gs = cauchy_Gstar(v, w, n, z, rtol)
    dG, dGs = cauchy_derivatives(v, w, n, z, rtol)
    r_G = abs(z * (1.0 - z) * dG
              - (-b * z - (bb + n) * asq) * G
              - (bb + n) * (1.0 - asq) * a.conjugate() * Gs)
    r_Gs = abs(z * (1.0 - z) * dGs
               - (n * z - (bb + n) * (1.0 - asq)) * Gs
               - (bb + n) * a * G)
    return r_phi, r_G, r_star, r_Gs


# ---------------------------------------------------------------------------
# structure relations (pure polynomial identities)


def structure_relations_bessel(v: VerblunskyTable, ell: float, n: int
                               ) -> tuple[float, float]:
    """Coefficientwise residuals of the two equivalent Bessel structure
    relations (three-term derivative form and its z-weighted variant)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    if ell == 0.0:
        return 0.0, 0.0
    a = _real_alphas(v, n)
    k2 = v.kappa2
    pn = phi_pair(v, n)
    pm1 = phi_pair(v, n - 1)
    pm2 = phi_pair(v, n - 2)

    r1 = _max_coeff(
        _P.polysub(_P.polyder(pn.phi),
                   _P.polyadd(n * pm1.phi,
                              (ell * k2[n - 2] / (2.0 * k2[n])) * pm2.phi))
    )
    inner = _P.polysub(pm1.phi, a[n] * pm1.phistar)
    r2 = _max_coeff(
        _P.polysub(_shift(_P.polyder(pn.phi), 1),
                   _P.polyadd(n * pn.phi,
                              (ell / 2.0) * (k2[n - 1] / k2[n]) * inner))
    )
    return r1, r2


def structure_relation_jacobi(v: VerblunskyTable, b: complex, n: int) -> float:
    """(z-1) Phi_n' = -(conj(b)+n)(1-|alpha_{n-1}|^2) Phi_{n-1} + n Phi_n."""
    if n < 1:
        raise ValueError("needs n >= 1")
    bb = complex(b).conjugate()
    a = v.alphas[n - 1]
    pn = phi_pair(v, n)
    pm1 = phi_pair(v, n - 1)
    zm1 = np.array([-1.0, 1.0], dtype=complex)
    lhs = _P.polymul(zm1, _P.polyder(pn.phi))
    rhs = _P.polyadd(-(bb + n) * (1.0 - abs(a) ** 2) * pm1.phi, n * pn.phi)
    return _max_coeff(_P.polysub(lhs, rhs))


# ---------------------------------------------------------------------------
# second-order differential relations


def second_order_residuals_bessel(v: VerblunskyTable, w: WeightSpec, ell: float,
                                  n: int, z: complex, rtol: float = DEFAULT_RTOL
                                  ) -> tuple[float, float, float, float]:
    """Residuals of the four scalar second-order equations (Bessel, H == 1)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    if ell == 0.0 and w.kind != "lebesgue" and w.kind != "bessel":
        raise ValueError("weight family mismatch")
    a = _real_alphas(v, n) if ell != 0.0 else [0.0] * (n + 1)
    K = (1.0 - a[n - 1] ** 2) * a[n] * a[n - 2] - a[n - 1] ** 2
    pn = phi_pair(v, n)
    ps = phi_pair(v, n - 1)

    # z^2 f'' + (ell/2 z^2 + (2-n) z - ell/2) f' + (...) f + coupling = 0
    c1 = np.array([-ell / 2.0, 2.0 - n, ell / 2.0], dtype=complex)
    c0_phi = np.array([-ell ** 2 / 4.0 - n - ell ** 2 / 4.0 * K, -ell * n / 2.0],
                      dtype=complex)
    r_phi = _max_coeff(
        _P.polyadd(
            _P.polyadd(_shift(_P.polyder(pn.phi, 2), 2),
                       _P.polymul(c1, _P.polyder(pn.phi))),
            _P.polyadd(_P.polymul(c0_phi, pn.phi),
                       (ell / 2.0) * (1.0 - a[n - 1] ** 2) * a[n] * ps.phistar),
        )
    )

    c0_star = np.array([-ell ** 2 / 4.0 - ell ** 2 / 4.0 * K,
                        -ell * (n / 2.0 - 1.0)], dtype=complex)
    r_star = _max_coeff(
        _P.polyadd(
            _P.polyadd(_shift(_P.polyder(ps.phistar, 2), 2),
                       _P.polymul(c1, _P.polyder(ps.phistar))),
            _P.polyadd(_P.polymul(c0_star, ps.phistar),
                       (ell / 2.0) * a[n - 2] * pn.phi),
        )
    )

    z = complex(z)
    G = cauchy_G(v, w, n, z, rtol)
    Gs = cauchy_Gstar(v, w, n, z, rtol)
    dG, dGs = cauchy_derivatives(v, w, n, z, rtol)
    d2G, d2Gs = cauchy_second_derivatives(v, w, n, z, rtol)
    pre_G = -ell / 2.0 * z ** 2 + (n + 2.0) * z + ell / 2.0
    r_G = abs(z ** 2 * d2G + pre_G * dG
              - (ell * (n / 2.0 + 1.0) * z + ell ** 2 / 4.0 + ell ** 2 / 4.0 * K) * G
              + (ell / 2.0) * (1.0 - a[n - 1] ** 2) * a[n] * Gs)
    r_Gs = abs(z ** 2 * d2Gs + pre_G * dGs
               - (ell * n / 2.0 * z + ell ** 2 / 4.0 - n + ell ** 2 / 4.0 * K) * Gs
               + (ell / 2.0) * a[n - 2] * G)
    return r_phi, r_G, r_star, r_Gs


def hypergeometric_residuals_jacobi(v: VerblunskyTable, w: WeightSpec, b: complex,
                                    n: int, z: complex,
                                    rtol: float = DEFAULT_RTOL
                                    ) -> tuple[float, float, float, float]:
    """Residuals of the four hypergeometric-type second-order equations."""
    if n < 1:
        raise ValueError("needs n >= 1")
    b = complex(b)
    bb = b.conjugate()
    pn = phi_pair(v, n)
    ps = phi_pair(v, n - 1)
    zz1 = np.array([0.0, 1.0, -1.0], dtype=complex)

    c1_phi = np.array([1.0 - n - bb, n - b - 2.0], dtype=complex)
    r_phi = _max_coeff(
        _P.polyadd(
            _P.polyadd(_P.polymul(zz1, _P.polyder(pn.phi, 2)),
                       _P.polymul(c1_phi, _P.polyder(pn.phi))),
            n * (1.0 + b) * pn.phi,
        )
    )
    r_star = _max_coeff(
        _P.polyadd(
            _P.polyadd(_P.polymul(zz1, _P.polyder(ps.phistar, 2)),
                       _P.polymul(c1_phi, _P.polyder(ps.phistar))),
            b * (n - 1.0) * ps.phistar,
        )
    )

    z = complex(z)
    G = cauchy_G(v, w, n, z, rtol)
    Gs = cauchy_Gstar(v, w, n, z, rtol)
    dG, dGs = cauchy_derivatives(v, w, n, z, rtol)
    d2G, d2Gs = cauchy_second_derivatives(v, w, n, z, rtol)
    pre = (b - n - 2.0) * z + (1.0 + n + bb)
    r_G = abs(z * (1.0 - z) * d2G + pre * dG + b * (1.0 + n) * G)
    r_Gs = abs(z * (1.0 - z) * d2Gs + pre * dGs + n * (b - 1.0) * Gs)
    return r_phi, r_G, r_star, r_Gs


# ---------------------------------------------------------------------------
# generic second-order operator and its first-order trace-back


def structure_matrix_deriv_fd(v: VerblunskyTable, w: WeightSpec, n: int,
                              z: complex, rtol: float = DEFAULT_RTOL,
                              h: float | None = None) -> Matrix2C:
    """dM_n/dz by central differences with one Richardson step."""
    z = complex(z)
    if h is None:
        h = 1e-4 * max(1.0, abs(z))

    def central(step: float) -> Matrix2C:
        plus = structure_matrix_numeric(v, w, n, z + step, rtol)
        minus = structure_matrix_numeric(v, w, n, z - step, rtol)
        return (plus - minus).scale(1.0 / (2.0 * step))

    d1 = central(h)
    d2 = central(h / 2.0)
    return d2.scale(4.0 / 3.0) - d1.scale(1.0 / 3.0)


def generic_second_order_residual(v: VerblunskyTable, w: WeightSpec, n: int,
                                  z: complex, rtol: float = DEFAULT_RTOL) -> float:
    """|| Y'' + 2 Y' D + Y (D' + D^2) - (M' + M^2) Y || with numeric M, FD M'."""
    z = complex(z)
    Y = assemble_Y(v, w, n, z, rtol)
    dY = assemble_Y_deriv(v, w, n, z, rtol)
    d2Y = assemble_Y_second_deriv(v, w, n, z, rtol)
    D = log_diag_factor(w, n, z)
    dD = log_diag_factor_deriv(w, n, z)
    M = structure_matrix_numeric(v, w, n, z, rtol)
    dM = structure_matrix_deriv_fd(v, w, n, z, rtol)
    lhs = d2Y + (dY @ D).scale(2.0) + (Y @ (dD + (D @ D)))
    rhs = (dM + (M @ M)) @ Y
    return (lhs - rhs).frobenius()


def traceback_residual(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                       rtol: float = DEFAULT_RTOL) -> float:
    """Residual of the first-order relation recovered from the second-order one.

    Checks M_n against -T_n(-z)^{-1} { z [(M_{n+1}' + M_{n+1}^2) T_n
    - T_n (M_n' + M_n^2)] + T_n' - 3/(4z) T_n }.
    """
    z = complex(z)
    T = transfer_matrix(v, n, z)
    Tm = transfer_matrix(v, n, -z)
    dT = transfer_matrix_deriv()
    Mn = structure_matrix_numeric(v, w, n, z, rtol)
    Mn1 = structure_matrix_numeric(v, w, n + 1, z, rtol)
    dMn = structure_matrix_deriv_fd(v, w, n, z, rtol)
    dMn1 = structure_matrix_deriv_fd(v, w, n + 1, z, rtol)
    An = dMn + (Mn @ Mn)
    An1 = dMn1 + (Mn1 @ Mn1)
    inner = ((An1 @ T) - (T @ An)).scale(z) + dT - T.scale(3.0 / (4.0 * z))
    rhs = -(Tm.inv() @ inner)
    return (Mn - rhs).frobenius()
