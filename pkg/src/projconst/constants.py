"""Projection constants of harmonic and polynomial spaces on real spheres.

Each lambda reduces to a gamma-ratio prefactor times a weighted L1 norm of a
single Jacobi polynomial; n = 2 is always served by trigonometric closed
forms or Dirichlet-kernel integrals (the Jacobi route would hit the gamma =
-1/2 endpoint singularity for no benefit).
"""

from __future__ import annotations

import math

from .errors import DomainError
from .gammafn import GammaRatioSpec, gamma_ratio, log_gamma
from .orthopoly import JacobiParams
from .quadrature import DEFAULT_TOL, dirichlet_lebesgue, integrate_abs_jacobi
from .result import ComputationResult

__all__ = [
    "lambda_harmonic",
    "lambda_homogeneous",
    "lambda_poly_leq",
    "lambda_complex_homogeneous",
    "lambda_hilbert",
]

# verification hook: set by the CLI fault-injection flag to scale one
# prefactor, proving the check harness actually detects a wrong constant
_FAULT_SCALE = 1.0


def lambda_harmonic(n: int, d: int, tol: float = DEFAULT_TOL) -> ComputationResult:
    """Projection constant of degree-d spherical harmonics on S^{n-1}."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if d < 0:
        raise DomainError(f"need d >= 0, got {d}")
    if d == 0:
        # constants: kernel identically 1
        return ComputationResult(1.0, 0.0, "ClosedForm", {"family": "harmonic", "n": n, "d": d})
    if n == 2:
        return ComputationResult(
            4.0 / math.pi, 0.0, "ClosedForm", {"family": "harmonic", "n": n, "d": d}
        )
    alpha = (n - 3) / 2.0
    prefactor = _FAULT_SCALE * (2 * d + n - 2) / 2.0 ** (n - 2) * math.exp(
        log_gamma(d + n - 2.0) - log_gamma((n - 1) / 2.0) - log_gamma(d + (n - 1) / 2.0)
    )
    integral = integrate_abs_jacobi(JacobiParams(alpha, alpha, d), alpha, tol)
    return ComputationResult(
        value=prefactor * integral.value,
        abs_err=prefactor * integral.abs_err,
        method="JacobiQuadrature",
        inputs={"family": "harmonic", "n": n, "d": d, "tol": tol},
    )


def lambda_homogeneous(n: int, d: int, tol: float = DEFAULT_TOL) -> ComputationResult:
    """Projection constant of degree-d homogeneous polynomials on S^{n-1}."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if d < 1:
        raise DomainError(f"need d >= 1, got {d}")
    if n == 2:
        res = dirichlet_lebesgue(d, "half", tol)
        return ComputationResult(
            res.value, res.abs_err, res.method,
            {"family": "homogeneous", "n": n, "d": d, "tol": tol},
        )
    alpha = (n - 1) / 2.0
    prefactor = _FAULT_SCALE / (2.0 * math.sqrt(math.pi)) * math.exp(
        log_gamma(n / 2.0)
        + log_gamma(d + float(n))
        - log_gamma(n - 1.0)
        - log_gamma(d + (n + 1) / 2.0)
    )
    integral = integrate_abs_jacobi(JacobiParams(alpha, alpha, d), (n - 3) / 2.0, tol)
    return ComputationResult(
        value=prefactor * integral.value,
        abs_err=prefactor * integral.abs_err,
        method="JacobiQuadrature",
        inputs={"family": "homogeneous", "n": n, "d": d, "tol": tol},
    )


def lambda_poly_leq(n: int, d: int, tol: float = DEFAULT_TOL) -> ComputationResult:
    """Projection constant of all polynomials of degree <= d on S^{n-1}."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if d < 0:
        raise DomainError(f"need d >= 0, got {d}")
    if d == 0:
        return ComputationResult(1.0, 0.0, "ClosedForm", {"family": "polyleq", "n": n, "d": d})
    if n == 2:
        res = dirichlet_lebesgue(d, "full", tol)
        return ComputationResult(
            res.value, res.abs_err, res.method,
            {"family": "polyleq", "n": n, "d": d, "tol": tol},
        )
    prefactor = _FAULT_SCALE * math.exp(
        log_gamma(n / 2.0)
        - log_gamma(n - 1.0)
        + log_gamma(d + n - 1.0)
        - log_gamma(d + (n - 1) / 2.0)
    ) / math.sqrt(math.pi)
    params = JacobiParams((n - 1) / 2.0, (n - 3) / 2.0, d)
    integral = integrate_abs_jacobi(params, (n - 3) / 2.0, tol)
    return ComputationResult(
        value=prefactor * integral.value,
        abs_err=prefactor * integral.abs_err,
        method="JacobiQuadrature",
        inputs={"family": "polyleq", "n": n, "d": d, "tol": tol},
    )


def lambda_complex_homogeneous(n: int, d: int) -> ComputationResult:
    """Ryll-Wojtaszczyk constant for d-homogeneous polynomials on complex l2^n."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if d < 0:
        raise DomainError(f"need d >= 0, got {d}")
    value = gamma_ratio(
        GammaRatioSpec(
            numerator_args=(float(n + d), 1.0 + d / 2.0),
            denominator_args=(1.0 + d, n + d / 2.0),
        )
    )
    return ComputationResult(
        value=value,
        abs_err=value * 1e-13,
        method="ClosedForm",
        inputs={"family": "complex-homogeneous", "n": n, "d": d},
    )


def lambda_hilbert(n: int, field: str = "real") -> ComputationResult:
    """Rutovitz constant for l2^n, real or complex scalars."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if field == "real":
        value = 2.0 / math.sqrt(math.pi) * math.exp(
            log_gamma((n + 2) / 2.0) - log_gamma((n + 1) / 2.0)
        )
    elif field == "complex":
        value = math.sqrt(math.pi) / 2.0 * math.exp(
            log_gamma(n + 1.0) - log_gamma(n + 0.5)
        )
    else:
        raise DomainError(f"field must be 'real' or 'complex', got {field!r}")
    return ComputationResult(
        value=value,
        abs_err=value * 1e-15,
        method="ClosedForm",
        inputs={"family": f"hilbert-{field}", "n": n},
    )
