"""Fundamental 2x2 matrices: solution matrix, transfer matrix, jump and
structure-matrix checks.

The solution matrix packages the monic polynomial, its reciprocal, and the
two second-kind functions; the transfer matrix realizes the degree shift.
The structure matrix is computed without fractional powers, using only the
single-valued logarithmic derivative of the diagonal normalizing factor.
"""

from __future__ import annotations

import cmath

from .cauchy import (
    DEFAULT_RTOL,
    cauchy_G,
    cauchy_Gstar,
    cauchy_derivatives,
    cauchy_second_derivatives,
)
from .errors import PoleError
from .matrix2 import Matrix2C
from .szego import VerblunskyTable, phi_pair
from .weights import WeightSpec, eval_weight, log_derivative, log_derivative2


def assemble_Y(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
               rtol: float = DEFAULT_RTOL, boundary: bool = False) -> Matrix2C:
    """The unit-determinant solution matrix at z (off the circle)."""
    if n < 1:
        raise ValueError("solution matrix defined for n >= 1")
    z = complex(z)
    bm1 = v.b[n - 1]
    pn = phi_pair(v, n)
    ps = phi_pair(v, n - 1)
    G = cauchy_G(v, w, n, z, rtol, boundary)
    Gs = cauchy_Gstar(v, w, n, z, rtol, boundary)
    return Matrix2C(pn.eval_phi(z), G, -bm1 * ps.eval_phistar(z), -bm1 * Gs)


def assemble_Y_deriv(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                     rtol: float = DEFAULT_RTOL) -> Matrix2C:
    """z-derivative of the solution matrix (analytic, no finite differences)."""
    z = complex(z)
    bm1 = v.b[n - 1]
    pn = phi_pair(v, n)
    ps = phi_pair(v, n - 1)
    dG, dGs = cauchy_derivatives(v, w, n, z, rtol)
    return Matrix2C(pn.eval_phi_deriv(z), dG,
                    -bm1 * ps.eval_phistar_deriv(z), -bm1 * dGs)


def assemble_Y_second_deriv(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                            rtol: float = DEFAULT_RTOL) -> Matrix2C:
    z = complex(z)
    bm1 = v.b[n - 1]
    pn = phi_pair(v, n)
    ps = phi_pair(v, n - 1)
    d2G, d2Gs = cauchy_second_derivatives(v, w, n, z, rtol)
    return Matrix2C(pn.eval_phi_deriv(z, 2), d2G,
                    -bm1 * ps.eval_phistar_deriv(z, 2), -bm1 * d2Gs)


def transfer_matrix(v: VerblunskyTable, n: int, z: complex) -> Matrix2C:
    """Entire matrix relating consecutive solution matrices."""
    if n < 1:
        raise ValueError("transfer matrix defined for n >= 1")
    z = complex(z)
    an = v.alphas[n]
    am1 = v.alphas[n - 1]
    bn = v.b[n]
    return Matrix2C(z + an.conjugate() * am1, an.conjugate() / bn, am1 * bn, 1.0)


def transfer_matrix_deriv() -> Matrix2C:
    return Matrix2C(1.0, 0.0, 0.0, 0.0)


def transfer_residual(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                      rtol: float = DEFAULT_RTOL) -> float:
    """Frobenius norm of Y_{n+1} diag(1, z) - T_n Y_n."""
    z = complex(z)
    Yn = assemble_Y(v, w, n, z, rtol)
    Yn1 = assemble_Y(v, w, n + 1, z, rtol)
    lhs = Yn1 @ Matrix2C.diag(1.0, z)
    rhs = transfer_matrix(v, n, z) @ Yn
    return (lhs - rhs).frobenius()


def transfer_recurrence_residuals(v: VerblunskyTable, w: WeightSpec, n: int,
                                   z: complex, rtol: float = DEFAULT_RTOL
                                   ) -> tuple[float, float, float, float]:
    """Entrywise residuals of the four scalar recurrences behind the transfer
    relation (polynomial row, reciprocal row, and the two second-kind rows)."""
    z = complex(z)
    an = v.alphas[n]
    am1 = v.alphas[n - 1]
    bn, bm1 = v.b[n], v.b[n - 1]
    pn = phi_pair(v, n)
    pn1 = phi_pair(v, n + 1)
    psm1 = phi_pair(v, n - 1)
    psn = phi_pair(v, n)
    G_n = cauchy_G(v, w, n, z, rtol)
    G_n1 = cauchy_G(v, w, n + 1, z, rtol)
    Gs_nm1 = cauchy_Gstar(v, w, n, z, rtol)     # G*_{n-1}
    Gs_n = cauchy_Gstar(v, w, n + 1, z, rtol)   # G*_n
    r1 = abs(pn1.eval_phi(z)
             - (z + an.conjugate() * am1) * pn.eval_phi(z)
             + (bm1 / bn) * an.conjugate() * psm1.eval_phistar(z))
    r2 = abs(-bn * psn.eval_phistar(z)
             - am1 * bn * pn.eval_phi(z)
             + bm1 * psm1.eval_phistar(z))
    r3 = abs(z * G_n1
             - (z + an.conjugate() * am1) * G_n
             + (bm1 / bn) * an.conjugate() * Gs_nm1)
    r4 = abs(-bn * z * Gs_n - am1 * bn * G_n + bm1 * Gs_nm1)
    return r1, r2, r3, r4


def jump_matrix(w: WeightSpec, n: int, t: complex) -> Matrix2C:
    """Upper triangular jump [[1, nu(t)/t^n], [0, 1]] at a circle point."""
    theta = cmath.phase(t) % (2.0 * cmath.pi)
    nu = eval_weight(w, theta)
    return Matrix2C(1.0, nu / t ** n, 0.0, 1.0)


def jump_residual(v: VerblunskyTable, w: WeightSpec, n: int, t: complex,
                  delta: float = 5e-5, rtol: float = DEFAULT_RTOL) -> float:
    """Richardson-extrapolated boundary-jump defect at circle point t.

    Compares the inside limit against the outside limit times the jump,
    approaching along the radius at offsets delta and delta/2; the raw
    defect is O(delta), the extrapolated one O(delta^2).
    """
    if not 1e-5 <= delta <= 1e-2:
        raise ValueError("delta must lie in [1e-5, 1e-2]")
    if abs(abs(t) - 1.0) > 1e-12:
        raise ValueError("jump check requires |t| = 1")
    for s in w.singular_points():
        if abs(t - s) < 1e-6:
            raise PoleError(f"jump point coincides with weight singularity {s}")
    J = jump_matrix(w, n, t)

    def defect(d: float) -> Matrix2C:
        inner = assemble_Y(v, w, n, (1.0 - d) * t, rtol, boundary=True)
        outer = assemble_Y(v, w, n, (1.0 + d) * t, rtol, boundary=True)
        return inner - (outer @ J)

    e1 = defect(delta)
    e2 = defect(delta / 2.0)
    extrapolated = e2.scale(2.0) - e1
    return extrapolated.frobenius()


def log_diag_factor(w: WeightSpec, n: int, z: complex) -> Matrix2C:
    """Logarithmic derivative of the diagonal normalizing factor.

    diag(-n/(2z) + nu'/(2 nu), n/(2z) - nu'/(2 nu)); single-valued, so no
    fractional powers are ever formed.
    """
    z = complex(z)
    ld = log_derivative(w, z)
    d = -n / (2.0 * z) + ld / 2.0
    return Matrix2C.diag(d, -d)


def log_diag_factor_deriv(w: WeightSpec, n: int, z: complex) -> Matrix2C:
    z = complex(z)
    ld2 = log_derivative2(w, z)
    d = n / (2.0 * z ** 2) + ld2 / 2.0
    return Matrix2C.diag(d, -d)


def structure_matrix_numeric(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                             rtol: float = DEFAULT_RTOL) -> Matrix2C:
    """Structure matrix M_n(z) = Y' Y^{-1} + Y D Y^{-1}, trace-free."""
    z = complex(z)
    if abs(z) < 1e-12:
        raise PoleError("structure matrix is singular at z = 0")
    for s in w.singular_points():
        if abs(z - s) < 1e-9:
            raise PoleError(f"structure matrix is singular at z = {s}")
    Y = assemble_Y(v, w, n, z, rtol)
    dY = assemble_Y_deriv(v, w, n, z, rtol)
    Yinv = Y.inv()
    D = log_diag_factor(w, n, z)
    return (dY @ Yinv) + (Y @ D @ Yinv)
