"""Second-kind (associated) functions by contour quadrature.

G_n is the Cauchy transform of Phi_n nu / t^n over the unit circle, and
G*_{n-1} the analogue for the reciprocal polynomial.  All integrals use the
periodic midpoint rule with node doubling; near the circle a singularity
subtraction keeps the rule spectrally accurate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AccuracyError, NearBoundaryError
from .szego import VerblunskyTable, phi_pair
from .weights import WeightSpec, eval_nu, weight_values

_P = np.polynomial.polynomial

N0 = 256
NMAX = 1 << 17
DEFAULT_RTOL = 1e-12
NEAR_BOUNDARY = 0.02        # refusal band around |z| = 1
SUBTRACT_BAND = (0.8, 1.25)  # |z| range where subtraction is used automatically


@lru_cache(maxsize=128)
def _circle_nodes(w: WeightSpec, N: int):
    """Midpoint nodes t_k = e^{i theta_k} and weight values nu(t_k)."""
    theta = (np.arange(N) + 0.5) * (2.0 * math.pi / N)
    t = np.exp(1j * theta)
    nu = weight_values(w, theta)
    return t, nu


@dataclass(frozen=True)
class CauchyEval:
    """Converged values of the second-kind functions at one point."""

    n: int
    z: complex
    region: str
    G: complex
    Gstar: complex
    dG: complex
    dGstar: complex
    quad_nodes: int


def classify_region(z: complex) -> str:
    r = abs(z)
    if abs(r - 1.0) < 1e-14:
        return "boundary"
    return "inside" if r < 1.0 else "outside"


def _check_offcircle(z: complex, boundary: bool) -> None:
    r = abs(z)
    if abs(r - 1.0) < 1e-14:
        raise NearBoundaryError("evaluation exactly on the circle is not supported")
    if not boundary and abs(r - 1.0) < NEAR_BOUNDARY:
        raise NearBoundaryError(
            f"|z| = {r:.6f} is within {NEAR_BOUNDARY} of the circle; "
            "request boundary mode for jump checks"
        )


def _converged(eval_at, rtol: float, n0: int = N0, nmax: int = NMAX):
    """Double nodes until two successive values agree to rtol."""
    N = n0
    prev = eval_at(N)
    while N < nmax:
        N *= 2
        cur = eval_at(N)
        resid = abs(cur - prev)
        if resid <= rtol * max(1.0, abs(cur)):
            return cur, N, resid
        prev = cur
    raise AccuracyError(
        f"contour quadrature did not converge below rtol={rtol:g}",
        residual=abs(cur - prev),
        nodes=N,
    )


def _transform(w: WeightSpec, coeffs: np.ndarray, n: int, z: complex,
               rtol: float, order: int = 1, subtract: bool | None = None):
    """(1/2 pi i) * contour integral of p(t) nu(t) / (t^n (t-z)^order) dt.

    order 1 gives the value, 2 the derivative, 3 half the second derivative.
    With subtract=True (order 1 only) the integrand is regularized by
    removing g(z), restoring spectral accuracy next to the circle.
    """
    z = complex(z)
    if subtract is None:
        subtract = order == 1 and SUBTRACT_BAND[0] < abs(z) < SUBTRACT_BAND[1]
    gz = 0.0 + 0.0j
    if subtract:
        gz = complex(_P.polyval(z, coeffs)) * eval_nu(w, z) / z ** n

    def eval_at(N: int) -> complex:
        t, nu = _circle_nodes(w, N)
        g = _P.polyval(t, coeffs) * nu / t ** n
        if subtract:
            total = np.sum((g - gz) * t / (t - z)) / N
            if abs(z) < 1.0:
                total += gz
            return complex(total)
        kern = t / (t - z) ** order
        scale = 2.0 if order == 3 else 1.0
        return complex(scale * np.sum(g * kern) / N)

    return _converged(eval_at, rtol)


def cauchy_G(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
             rtol: float = DEFAULT_RTOL, boundary: bool = False) -> complex:
    """G_n(z) off the circle."""
    _check_offcircle(z, boundary)
    coeffs = phi_pair(v, n).phi
    value, _, _ = _transform(w, coeffs, n, z, rtol)
    return value


def cauchy_Gstar(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                 rtol: float = DEFAULT_RTOL, boundary: bool = False) -> complex:
    """G*_{n-1}(z): reciprocal-polynomial transform with kernel nu/t^n."""
    if n < 1:
        raise ValueError("G*_{n-1} needs n >= 1")
    _check_offcircle(z, boundary)
    coeffs = phi_pair(v, n - 1).phistar
    value, _, _ = _transform(w, coeffs, n, z, rtol)
    return value


def cauchy_derivatives(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                       rtol: float = DEFAULT_RTOL) -> tuple[complex, complex]:
    """(G_n'(z), (G*_{n-1})'(z)) by the squared-kernel integrals."""
    _check_offcircle(z, boundary=False)
    dG, _, _ = _transform(w, phi_pair(v, n).phi, n, z, rtol, order=2, subtract=False)
    dGs, _, _ = _transform(w, phi_pair(v, n - 1).phistar, n, z, rtol, order=2,
                           subtract=False)
    return dG, dGs


def cauchy_second_derivatives(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                              rtol: float = DEFAULT_RTOL) -> tuple[complex, complex]:
    """(G_n''(z), (G*_{n-1})''(z)) by the cubed-kernel integrals."""
    _check_offcircle(z, boundary=False)
    d2G, _, _ = _transform(w, phi_pair(v, n).phi, n, z, rtol, order=3, subtract=False)
    d2Gs, _, _ = _transform(w, phi_pair(v, n - 1).phistar, n, z, rtol, order=3,
                            subtract=False)
    return d2G, d2Gs


def cauchy_eval(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                rtol: float = DEFAULT_RTOL) -> CauchyEval:
    """Full converged record at one point (off the refusal band)."""
    _check_offcircle(z, boundary=False)
    g, nodes_g, _ = _transform(w, phi_pair(v, n).phi, n, z, rtol)
    gs, nodes_gs, _ = _transform(w, phi_pair(v, n - 1).phistar, n, z, rtol)
    dg, dgs = cauchy_derivatives(v, w, n, z, rtol)
    return CauchyEval(n, complex(z), classify_region(z), g, gs, dg, dgs,
                      max(nodes_g, nodes_gs))


def laurent_tail(v: VerblunskyTable, w: WeightSpec, n: int, R: float = 3.0,
                 kmax: int | None = None, samples: int = 128,
                 rtol: float = 1e-14) -> tuple[np.ndarray, np.ndarray]:
    """Laurent coefficients of G_n and G*_{n-1} from samples on |z| = R.

    Returns (g_coeffs, gstar_coeffs): g_coeffs[k] is the coefficient of
    z^{-(n+1+k)} in G_n and gstar_coeffs[k] the coefficient of z^{-(n+k)}
    in G*_{n-1}, for k = 0..kmax.
    """
    if R <= 1.0:
        raise ValueError("tail extraction needs R > 1 (R >= 2 recommended)")
    if kmax is None:
        kmax = 2
    phis = phi_pair(v, n).phi
    stars = phi_pair(v, n - 1).phistar if n >= 1 else None
    zs = R * np.exp(2j * math.pi * np.arange(samples) / samples)
    gv = np.array([_transform(w, phis, n, z, rtol)[0] for z in zs])
    # c_m := coefficient of z^{-m}; from samples, c_m = R^m * mean(G * e^{i m theta})
    def coeff(values: np.ndarray, m: int) -> complex:
        phase = np.exp(2j * math.pi * m * np.arange(samples) / samples)
        return complex(R ** m * np.mean(values * phase))

    g_coeffs = np.array([coeff(gv, n + 1 + k) for k in range(kmax + 1)])
    if stars is None:
        return g_coeffs, np.array([])
    gsv = np.array([_transform(w, stars, n, z, rtol)[0] for z in zs])
    gstar_coeffs = np.array([coeff(gsv, n + k) for k in range(kmax + 1)])
    return g_coeffs, gstar_coeffs


def g_recurrence_residuals(v: VerblunskyTable, w: WeightSpec, n: int, z: complex,
                           rtol: float = DEFAULT_RTOL) -> tuple[float, float]:
    """Residuals of the two one-step recurrences of the second-kind functions.

    r1 = |G_n - G_{n-1} + conj(alpha_{n-1}) G*_{n-1}|
    r2 = |z G*_n - G*_{n-1} + alpha_{n-1} G_{n-1}|
    """
    if n < 1:
        raise ValueError("recurrences need n >= 1")
    a = v.alphas[n - 1]
    Gn = cauchy_G(v, w, n, z, rtol)
    Gn1 = cauchy_G(v, w, n - 1, z, rtol)
    Gs_n1 = cauchy_Gstar(v, w, n, z, rtol)       # G*_{n-1}
    Gs_n = cauchy_Gstar(v, w, n + 1, z, rtol)    # G*_n
    r1 = abs(Gn - Gn1 + a.conjugate() * Gs_n1)
    r2 = abs(z * Gs_n - Gs_n1 + a * Gn1)
    return r1, r2
