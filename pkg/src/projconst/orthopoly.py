"""Jacobi, Gegenbauer and sphere-adapted Legendre polynomials.

Jacobi polynomials are evaluated by the three-term recurrence in the degree
(stable, O(d) per point) with the normalization P_d^{(a,b)}(1) = binom(d+a, d).
The degree-d axially invariant harmonic profile in n variables is generated
from its coefficient ratio recurrence, which avoids the catastrophic
cancellation of the closed gamma-quotient form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .errors import ConvergenceError, DomainError
from .gammafn import log_gamma

__all__ = [
    "JacobiParams",
    "CoeffList",
    "jacobi_eval",
    "jacobi_deriv",
    "jacobi_symmetry_check",
    "gegenbauer_eval",
    "gegenbauer_norm_sq",
    "legendre_nd_coeffs",
    "legendre_nd_eval",
    "legendre_harmonic_eval",
    "jacobi_roots",
]

# quadrature node jitter tolerance: |t| up to 1 + this is clamped to [-1, 1]
_CLAMP_SLACK = 1e-12


@dataclass(frozen=True)
class JacobiParams:
    """Parameters (alpha, beta, degree) of a Jacobi polynomial P_d^{(a,b)}."""

    alpha: float
    beta: float
    degree: int

    def __post_init__(self):
        if self.alpha <= -1 or self.beta <= -1:
            raise DomainError(
                f"Jacobi parameters must exceed -1, got ({self.alpha}, {self.beta})"
            )
        if self.degree < 0:
            raise DomainError(f"degree must be >= 0, got {self.degree}")


def _clamp(t):
    """Validate |t| <= 1 (up to node jitter) and clamp into [-1, 1]."""
    arr = np.asarray(t, dtype=float)
    if np.any(np.abs(arr) > 1.0 + _CLAMP_SLACK):
        raise DomainError("argument outside [-1, 1]; extrapolation refused")
    return np.clip(arr, -1.0, 1.0)


def _jacobi_recurrence(alpha: float, beta: float, degree: int, t: np.ndarray) -> np.ndarray:
    """Three-term recurrence in the degree, vectorized over t."""
    if degree == 0:
        return np.ones_like(t)
    p_prev = np.ones_like(t)
    p = 0.5 * (alpha + beta + 2.0) * t + 0.5 * (alpha - beta)
    ab = alpha + beta
    for k in range(2, degree + 1):
        c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0)
        c2 = (2.0 * k + ab - 1.0) * (alpha * alpha - beta * beta)
        c3 = (2.0 * k + ab - 1.0) * (2.0 * k + ab) * (2.0 * k + ab - 2.0)
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab)
        p, p_prev = ((c2 + c3 * t) * p - c4 * p_prev) / c1, p
    return p


def jacobi_eval(params: JacobiParams, t):
    """P_d^{(a,b)}(t) for t in [-1, 1]; scalar in, scalar out."""
    arr = _clamp(t)
    out = _jacobi_recurrence(params.alpha, params.beta, params.degree, arr)
    return float(out) if np.isscalar(t) or np.ndim(t) == 0 else out


def jacobi_deriv(params: JacobiParams, t):
    """d/dt P_d^{(a,b)}(t) = ((d+a+b+1)/2) P_{d-1}^{(a+1,b+1)}(t)."""
    if params.degree == 0:
        return 0.0 if np.ndim(t) == 0 else np.zeros_like(np.asarray(t, dtype=float))
    shifted = JacobiParams(params.alpha + 1.0, params.beta + 1.0, params.degree - 1)
    factor = 0.5 * (params.degree + params.alpha + params.beta + 1.0)
    out = jacobi_eval(shifted, t)
    return factor * out


def jacobi_symmetry_check(params: JacobiParams, t: float) -> float:
    """Residual of the reflection identity P_d^{(a,b)}(t) = (-1)^d P_d^{(b,a)}(-t)."""
    mirrored = JacobiParams(params.beta, params.alpha, params.degree)
    sign = -1.0 if params.degree % 2 else 1.0
    return jacobi_eval(params, t) - sign * jacobi_eval(mirrored, -t)


def gegenbauer_eval(lam: float, d: int, t):
    """Gegenbauer polynomial C_d^{(lam)}(t), lam > -1/2 and lam != 0."""
    if lam <= -0.5 or lam == 0.0:
        raise DomainError(f"gegenbauer_eval requires lam > -1/2 and lam != 0, got {lam}")
    if d < 0:
        raise DomainError(f"degree must be >= 0, got {d}")
    scale = math.exp(
        log_gamma(2.0 * lam + d)
        + log_gamma(lam + 0.5)
        - log_gamma(2.0 * lam)
        - log_gamma(lam + 0.5 + d)
    )
    return scale * jacobi_eval(JacobiParams(lam - 0.5, lam - 0.5, d), t)


def gegenbauer_norm_sq(lam: float, d: int) -> float:
    """L2 norm-square of C_d^{(lam)} against the weight (1-t^2)^(lam-1/2)."""
    if lam <= -0.5 or lam == 0.0:
        raise DomainError(f"gegenbauer_norm_sq requires lam > -1/2 and lam != 0, got {lam}")
    log_val = (
        math.log(math.pi)
        + (1.0 - 2.0 * lam) * math.log(2.0)
        + log_gamma(d + 2.0 * lam)
        - log_gamma(d + 1.0)
        - math.log(d + lam)
        - 2.0 * log_gamma(lam)
    )
    return math.exp(log_val)


@dataclass(frozen=True)
class CoeffList:
    """Coefficients b_0..b_{floor(d/2)} of the degree-d axial harmonic in R^n.

    b_0 = 1 and consecutive coefficients obey
    b_j = -((d-2j+2)(d-2j+1)) / (2j (2j+n-3)) * b_{j-1}.
    """

    n: int
    d: int
    coeffs: tuple[float, ...] = field(default=())


@lru_cache(maxsize=4096)
def legendre_nd_coeffs(n: int, d: int) -> CoeffList:
    """Generate the coefficient list by the ratio recurrence from b_0 = 1."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if d < 0:
        raise DomainError(f"need d >= 0, got {d}")
    coeffs = [1.0]
    for j in range(1, d // 2 + 1):
        ratio = -((d - 2 * j + 2) * (d - 2 * j + 1)) / (2.0 * j * (2 * j + n - 3))
        coeffs.append(ratio * coeffs[-1])
    return CoeffList(n=n, d=d, coeffs=tuple(coeffs))


def legendre_nd_eval(n: int, d: int, t):
    """Axial profile: sum_j b_j t^(d-2j) (1-t^2)^j; equals 1 at t = 1."""
    arr = _clamp(t)
    coeffs = legendre_nd_coeffs(n, d).coeffs
    one_minus = 1.0 - arr * arr
    out = np.zeros_like(arr)
    for j, b in enumerate(coeffs):
        out += b * arr ** (d - 2 * j) * one_minus**j
    return float(out) if np.ndim(t) == 0 else out


def legendre_harmonic_eval(n: int, d: int, x) -> float:
    """The degree-d axially invariant harmonic polynomial on R^n at x."""
    vec = np.asarray(x, dtype=float)
    if vec.shape != (n,):
        raise DomainError(f"expected a point in R^{n}, got shape {vec.shape}")
    coeffs = legendre_nd_coeffs(n, d).coeffs
    tail_sq = float(np.dot(vec[1:], vec[1:]))
    return math.fsum(
        b * vec[0] ** (d - 2 * j) * tail_sq**j for j, b in enumerate(coeffs)
    )


def _recurrence_tridiagonal(alpha: float, beta: float, degree: int):
    """Diagonal and off-diagonal of the symmetric Jacobi recurrence matrix."""
    ab = alpha + beta
    diag = np.empty(degree)
    diag[0] = (beta - alpha) / (ab + 2.0)
    k = np.arange(1, degree, dtype=float)
    with np.errstate(invalid="ignore"):
        diag[1:] = (beta * beta - alpha * alpha) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0))
    if degree > 1:
        off = np.empty(degree - 1)
        # k = 1 written with the (1+a+b) factor cancelled so a+b = -1 stays finite
        off[0] = math.sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) ** 2 * (3.0 + ab)))
        k = np.arange(2, degree, dtype=float)
        off[1:] = np.sqrt(
            4.0 * k * (k + alpha) * (k + beta) * (k + ab)
            / ((2.0 * k + ab) ** 2 * ((2.0 * k + ab) ** 2 - 1.0))
        )
    else:
        off = np.empty(0)
    return diag, off


def jacobi_roots(params: JacobiParams) -> list[float]:
    """All roots of P_d^{(a,b)}, strictly increasing, in (-1, 1).

    Eigenvalues of the symmetric tridiagonal recurrence matrix followed by one
    Newton polish per root.
    """
    d = params.degree
    if d < 1:
        raise DomainError("jacobi_roots requires degree >= 1")
    diag, off = _recurrence_tridiagonal(params.alpha, params.beta, d)
    nodes = eigvalsh_tridiagonal(diag, off)

    values = _jacobi_recurrence(params.alpha, params.beta, d, nodes)
    derivs = jacobi_deriv(params, nodes)
    polished = nodes - values / derivs
    bad = ~np.isfinite(polished) | (np.abs(polished - nodes) > 1e-6)
    if np.any(bad):
        raise ConvergenceError(
            f"Newton polish diverged at root indices {np.nonzero(bad)[0].tolist()}"
        )
    polished = np.clip(polished, -1.0, 1.0)
    return [float(r) for r in polished]
