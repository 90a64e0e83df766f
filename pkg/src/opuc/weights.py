"""Weight functions on the unit circle and their logarithmic derivatives.

Supported families: the Lebesgue weight, the exponential-of-cosine family
(modified Bessel), the circle Jacobi family with complex exponent, and
moment-only custom weights.  All weights may carry an entire factor H given
by truncated Taylor coefficients and a positive scaling constant.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from .errors import PoleError, UnsupportedWeightError

if TYPE_CHECKING:  # pragma: no cover
    from .moments import MomentTable

LEBESGUE = "lebesgue"
BESSEL = "bessel"
JACOBI = "jacobi"
CUSTOM = "custom"

# Jacobi singular set is {0, 1}; Bessel only {0}.
_SINGULAR_RADIUS = 1e-13


def _as_complex_tuple(seq) -> tuple[complex, ...]:
    return tuple(complex(c) for c in seq)


@dataclass(frozen=True)
class WeightSpec:
    """A weight on the unit circle.

    kind is one of "lebesgue", "bessel", "jacobi", "custom".  Bessel carries
    ell > 0, Jacobi carries b = lambda + i*eta with lambda > -1/2.  Custom
    weights are defined by their moment table only and support no pointwise
    evaluation.
    """

    kind: str
    ell: float = 0.0
    b: complex = 0.0
    h_series: tuple[complex, ...] = (1.0 + 0.0j,)
    scale: float = 1.0
    moments: "MomentTable | None" = field(default=None, compare=True)

    def __post_init__(self):
        if self.kind not in (LEBESGUE, BESSEL, JACOBI, CUSTOM):
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.kind == BESSEL and self.ell < 0:
            raise ValueError("bessel parameter must be >= 0")
        if self.kind == JACOBI and complex(self.b).real <= -0.5:
            raise ValueError("jacobi parameter requires Re(b) > -1/2")
        object.__setattr__(self, "h_series", _as_complex_tuple(self.h_series))
        if len(self.h_series) == 0 or self.h_series[0] == 0:
            raise ValueError("h_series must start with a nonzero constant term")
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "ell", float(self.ell))

    # -- constructors ------------------------------------------------------

    @classmethod
    def lebesgue(cls, scale: float = 1.0, h_series=(1.0,)) -> "WeightSpec":
        return cls(LEBESGUE, scale=scale, h_series=h_series)

    @classmethod
    def bessel(cls, ell: float, scale: float = 1.0, h_series=(1.0,)) -> "WeightSpec":
        return cls(BESSEL, ell=ell, scale=scale, h_series=h_series)

    @classmethod
    def jacobi(cls, b: complex, scale: float = 1.0, h_series=(1.0,)) -> "WeightSpec":
        return cls(JACOBI, b=complex(b), scale=scale, h_series=h_series)

    @classmethod
    def custom(cls, moments: "MomentTable") -> "WeightSpec":
        return cls(CUSTOM, moments=moments)

    # -- helpers -----------------------------------------------------------

    @property
    def lam(self) -> float:
        return self.b.real

    @property
    def eta(self) -> float:
        return self.b.imag

    @property
    def has_trivial_h(self) -> bool:
        return self.h_series == ((1 + 0j),)

    def singular_points(self) -> tuple[complex, ...]:
        if self.kind == BESSEL:
            return (0.0 + 0.0j,)
        if self.kind == JACOBI:
            return (0.0 + 0.0j, 1.0 + 0.0j)
        return ()

    def label(self) -> str:
        if self.kind == BESSEL:
            return f"bessel(ell={self.ell:g})"
        if self.kind == JACOBI:
            return f"jacobi(lambda={self.lam:g}, eta={self.eta:g})"
        return self.kind


def _h_values(w: WeightSpec, z):
    return np.polynomial.polynomial.polyval(z, np.asarray(w.h_series))


def weight_values(w: WeightSpec, theta) -> np.ndarray:
    """Vectorized w(theta) = nu(e^{i theta}) including scale and H factor."""
    theta = np.asarray(theta, dtype=float)
    z = np.exp(1j * theta)
    if w.kind == CUSTOM:
        raise UnsupportedWeightError("custom weights are moment-only")
    if w.kind == LEBESGUE:
        base = np.ones_like(theta, dtype=complex)
    elif w.kind == BESSEL:
        base = np.exp(w.ell * np.cos(theta)).astype(complex)
    else:
        # real positive form of (-z)^{-conj(b)} (1-z)^{b+conj(b)} on the circle,
        # continuous on (0, 2pi)
        s = 2.0 * np.sin(theta / 2.0)
        lam, eta = w.lam, w.eta
        with np.errstate(divide="raise", invalid="raise"):
            try:
                radial = np.power(np.abs(s), 2.0 * lam)
            except FloatingPointError as exc:
                raise PoleError("jacobi weight is singular at theta = 0") from exc
        base = (radial * np.exp(-eta * (theta - math.pi))).astype(complex)
    return w.scale * base * _h_values(w, z)


def eval_weight(w: WeightSpec, theta: float) -> complex:
    """Scalar weight value at angle theta in [0, 2pi)."""
    return complex(weight_values(w, np.array([theta]))[0])


def eval_nu(w: WeightSpec, z: complex) -> complex:
    """Analytic continuation of nu off the circle (principal branches).

    For the Jacobi family the branch cuts sit on [0, +inf); values on the
    circle minus {1} agree with eval_weight.
    """
    z = complex(z)
    if w.kind == CUSTOM:
        raise UnsupportedWeightError("custom weights are moment-only")
    if w.kind == LEBESGUE:
        base = 1.0 + 0.0j
    elif w.kind == BESSEL:
        if abs(z) < _SINGULAR_RADIUS:
            raise PoleError("bessel weight has an essential singularity at z = 0")
        base = cmath.exp(w.ell * (z + 1.0 / z) / 2.0)
    else:
        if abs(z) < _SINGULAR_RADIUS:
            raise PoleError("jacobi weight is singular at z = 0")
        if abs(z - 1.0) < _SINGULAR_RADIUS:
            raise PoleError("jacobi weight is singular at z = 1")
        bb = w.b + w.b.conjugate()
        base = cmath.exp(-w.b.conjugate() * cmath.log(-z) + bb * cmath.log(1.0 - z))
    return w.scale * base * complex(_h_values(w, z))


def _h_log_derivative(w: WeightSpec, z: complex) -> complex:
    if w.has_trivial_h:
        return 0.0 + 0.0j
    coeffs = np.asarray(w.h_series)
    h = complex(np.polynomial.polynomial.polyval(z, coeffs))
    dh = complex(np.polynomial.polynomial.polyval(z, np.polynomial.polynomial.polyder(coeffs)))
    if h == 0:
        raise PoleError("H factor vanishes at the evaluation point")
    return dh / h


def _h_log_derivative2(w: WeightSpec, z: complex) -> complex:
    """Derivative of H'/H at z."""
    if w.has_trivial_h:
        return 0.0 + 0.0j
    coeffs = np.asarray(w.h_series)
    pv = np.polynomial.polynomial.polyval
    h = complex(pv(z, coeffs))
    dh = complex(pv(z, np.polynomial.polynomial.polyder(coeffs)))
    d2h = complex(pv(z, np.polynomial.polynomial.polyder(coeffs, 2)))
    return d2h / h - (dh / h) ** 2


def log_derivative(w: WeightSpec, z: complex) -> complex:
    """nu'(z)/nu(z); single-valued off the singular set, scale-independent."""
    z = complex(z)
    if w.kind == CUSTOM:
        raise UnsupportedWeightError("custom weights are moment-only")
    if w.kind == LEBESGUE:
        return _h_log_derivative(w, z)
    if w.kind == BESSEL:
        if abs(z) < _SINGULAR_RADIUS:
            raise PoleError("log-derivative pole at z = 0")
        return (w.ell / 2.0) * (1.0 - z ** -2) + _h_log_derivative(w, z)
    if abs(z) < _SINGULAR_RADIUS:
        raise PoleError("log-derivative pole at z = 0")
    if abs(z - 1.0) < _SINGULAR_RADIUS:
        raise PoleError("log-derivative pole at z = 1")
    bb = w.b + w.b.conjugate()
    return -w.b.conjugate() / z - bb / (1.0 - z) + _h_log_derivative(w, z)


def log_derivative2(w: WeightSpec, z: complex) -> complex:
    """d/dz of nu'/nu, analytic off the singular set."""
    z = complex(z)
    if w.kind == CUSTOM:
        raise UnsupportedWeightError("custom weights are moment-only")
    if w.kind == LEBESGUE:
        return _h_log_derivative2(w, z)
    if w.kind == BESSEL:
        if abs(z) < _SINGULAR_RADIUS:
            raise PoleError("log-derivative pole at z = 0")
        return w.ell * z ** -3 + _h_log_derivative2(w, z)
    if abs(z) < _SINGULAR_RADIUS or abs(z - 1.0) < _SINGULAR_RADIUS:
        raise PoleError("log-derivative pole at a singular point")
    bb = w.b + w.b.conjugate()
    return w.b.conjugate() / z ** 2 - bb / (1.0 - z) ** 2 + _h_log_derivative2(w, z)


def pearson_data(w: WeightSpec):
    """Polynomial pair (A, q) with z*A(z)*nu'(z) = q(z)*nu(z) off the zeros of zA.

    Coefficients in ascending order.  Requires the trivial entire factor; the
    closed forms below assume H == 1.
    """
    if w.kind == CUSTOM:
        raise UnsupportedWeightError("custom weights are moment-only")
    if not w.has_trivial_h:
        raise UnsupportedWeightError("pearson data is only provided for H == 1")
    if w.kind == LEBESGUE:
        return np.array([1.0 + 0j]), np.array([0.0 + 0j])
    if w.kind == BESSEL:
        A = np.array([0.0, 1.0], dtype=complex)                      # z
        q = np.array([-w.ell / 2.0, 0.0, w.ell / 2.0], dtype=complex)  # (ell/2)(z^2-1)
        return A, q
    A = np.array([1.0, -1.0], dtype=complex)                          # 1 - z
    q = np.array([-w.b.conjugate(), -w.b], dtype=complex)             # -(conj(b) + b z)
    return A, q
