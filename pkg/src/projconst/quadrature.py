"""Weighted integration on [-1, 1] and Dirichlet-type periodic integrals.

The central operation integrates |P(t)| (1-t^2)^gamma for a Jacobi polynomial
P. The absolute value has kinks exactly at the roots of P, so the interval is
split there and each smooth arch is integrated to spectral accuracy. Endpoint
weight singularities (gamma < 0) stay inside a Gauss-Jacobi rule on the two
outermost subintervals; interior subintervals fold the weight into the
integrand under plain Gauss-Legendre.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi

from .errors import DomainError, ToleranceError
from .gammafn import beta as beta_fn
from .orthopoly import JacobiParams, _jacobi_recurrence, jacobi_roots
from .result import ComputationResult

__all__ = [
    "QuadratureRule",
    "gauss_jacobi_rule",
    "integrate_abs_jacobi",
    "dirichlet_lebesgue",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-10

_leggauss_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _leggauss(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _leggauss_cache:
        _leggauss_cache[order] = np.polynomial.legendre.leggauss(order)
    return _leggauss_cache[order]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for the weight (1-t)^alpha (1+t)^beta on a subinterval.

    The weight always refers to the global variable on [-1, 1]; on interior
    subintervals it is folded into the weights of a Gauss-Legendre rule.
    """

    alpha: float
    beta: float
    order: int
    nodes: tuple[float, ...]
    weights: tuple[float, ...]
    interval: tuple[float, float]

    def integrate(self, f) -> float:
        x = np.asarray(self.nodes)
        w = np.asarray(self.weights)
        return float(np.dot(w, f(x)))


def gauss_jacobi_rule(
    alpha: float, beta: float, order: int, interval: tuple[float, float] = (-1.0, 1.0)
) -> QuadratureRule:
    """Gauss rule for the weight (1-t)^alpha (1+t)^beta restricted to interval."""
    if alpha <= -1 or beta <= -1:
        raise DomainError(f"weight exponents must exceed -1, got ({alpha}, {beta})")
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    lo, hi = interval
    if not (-1.0 <= lo < hi <= 1.0):
        raise DomainError(f"invalid subinterval {interval}")

    touches_hi = hi == 1.0 and alpha != 0.0
    touches_lo = lo == -1.0 and beta != 0.0

    if touches_hi and touches_lo:
        x, w = roots_jacobi(order, alpha, beta)
        if (lo, hi) != (-1.0, 1.0):  # pragma: no cover - excluded by touching both ends
            raise DomainError("a proper subinterval cannot touch both endpoints")
    elif touches_hi:
        # substitute so the (1-t)^alpha factor becomes the rule's weight
        s, ws = roots_jacobi(order, alpha, 0.0)
        half = 0.5 * (hi - lo)
        x = lo + half * (s + 1.0)
        w = ws * half ** (alpha + 1.0) * (1.0 + x) ** beta
    elif touches_lo:
        s, ws = roots_jacobi(order, 0.0, beta)
        half = 0.5 * (hi - lo)
        x = lo + half * (s + 1.0)
        w = ws * half ** (beta + 1.0) * (1.0 - x) ** alpha
    else:
        s, ws = _leggauss(order)
        half = 0.5 * (hi - lo)
        x = lo + half * (s + 1.0)
        w = ws * half * (1.0 - x) ** alpha * (1.0 + x) ** beta

    return QuadratureRule(
        alpha=alpha,
        beta=beta,
        order=order,
        nodes=tuple(float(v) for v in x),
        weights=tuple(float(v) for v in w),
        interval=(lo, hi),
    )


def weight_mass(alpha: float, beta: float) -> float:
    """Total mass of (1-t)^alpha (1+t)^beta over [-1, 1]."""
    return 2.0 ** (alpha + beta + 1.0) * beta_fn(alpha + 1.0, beta + 1.0)


def _abs_jacobi_pass(
    params: JacobiParams, gamma: float, breakpoints: np.ndarray, order: int
) -> float:
    """Sum of |signed integral| over each arch, all arches at the given order."""
    alpha, bta, d = params.alpha, params.beta, params.degree
    lo = breakpoints[:-1]
    hi = breakpoints[1:]
    half = 0.5 * (hi - lo)

    contributions = []

    # interior arches: Gauss-Legendre, full weight folded into the integrand
    s, ws = _leggauss(order)
    inner_lo, inner_hi = lo[1:-1], hi[1:-1]
    if inner_lo.size:
        x = inner_lo[:, None] + (inner_hi - inner_lo)[:, None] * 0.5 * (s[None, :] + 1.0)
        vals = _jacobi_recurrence(alpha, bta, d, x.ravel()).reshape(x.shape)
        integrand = vals * (1.0 - x * x) ** gamma
        signed = (integrand * ws[None, :]).sum(axis=1) * half[1:-1]
        contributions.extend(np.abs(signed).tolist())

    # left arch touching -1: weight (1+t)^gamma inside a Gauss-Jacobi rule
    if gamma != 0.0:
        sl, wl = roots_jacobi(order, 0.0, gamma)
        hl = half[0]
        xl = lo[0] + hl * (sl + 1.0)
        vl = _jacobi_recurrence(alpha, bta, d, xl) * (1.0 - xl) ** gamma
        contributions.append(abs(float(np.dot(wl, vl)) * hl ** (gamma + 1.0)))

        sr, wr = roots_jacobi(order, gamma, 0.0)
        hr = half[-1]
        xr = lo[-1] + hr * (sr + 1.0)
        vr = _jacobi_recurrence(alpha, bta, d, xr) * (1.0 + xr) ** gamma
        contributions.append(abs(float(np.dot(wr, vr)) * hr ** (gamma + 1.0)))
    else:
        for a, b, h in ((lo[0], hi[0], half[0]), (lo[-1], hi[-1], half[-1])):
            x = a + h * (s + 1.0)
            v = _jacobi_recurrence(alpha, bta, d, x)
            contributions.append(abs(float(np.dot(ws, v)) * h))

    return math.fsum(contributions)


def integrate_abs_jacobi(
    params: JacobiParams, weight_exponent: float, tol: float = DEFAULT_TOL
) -> ComputationResult:
    """Integral of |P_d^{(a,b)}(t)| (1-t^2)^gamma over [-1, 1].

    Splits at the roots of P (where |P| has kinks), integrates the signed
    polynomial on each arch, and sums absolute arch integrals with compensated
    summation. The error estimate comes from doubling the arch rule order.
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if weight_exponent <= -1:
        raise DomainError(f"weight exponent must exceed -1, got {weight_exponent}")

    d = params.degree
    if d == 0:
        value = weight_mass(weight_exponent, weight_exponent)
        return ComputationResult(
            value=value,
            abs_err=abs(value) * 1e-15,
            method="JacobiQuadrature",
            inputs={"params": params, "gamma": weight_exponent, "tol": tol},
        )

    roots = jacobi_roots(params)
    breakpoints = np.concatenate(([-1.0], roots, [1.0]))

    order = 24
    value = _abs_jacobi_pass(params, weight_exponent, breakpoints, order)
    err = math.inf
    for _ in range(4):
        refined = _abs_jacobi_pass(params, weight_exponent, breakpoints, 2 * order)
        err = abs(refined - value)
        value = refined
        order *= 2
        if err <= tol:
            break
    result = ComputationResult(
        value=value,
        abs_err=max(err, abs(value) * 1e-15),
        method="JacobiQuadrature",
        inputs={"params": params, "gamma": weight_exponent, "tol": tol},
    )
    if err > tol:
        raise ToleranceError(
            f"abs-Jacobi integral reached {err:.3e}, requested {tol:.3e}",
            value=value,
            achieved=err,
        )
    return result


def _dirichlet_pass(freq: float, n_arches: int, order: int) -> float:
    """(1/2pi) sum over arches of |sin(freq t)/sin(t/2)| via per-arch Gauss."""
    s, ws = _leggauss(order)
    edges = np.arange(n_arches + 1) * (math.pi / freq)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    x = lo[:, None] + half[:, None] * (s[None, :] + 1.0)
    integrand = np.abs(np.sin(freq * x) / np.sin(0.5 * x))
    arch_vals = (integrand * ws[None, :]).sum(axis=1) * half
    return math.fsum(arch_vals.tolist()) / (2.0 * math.pi)


def dirichlet_lebesgue(d: int, kind: str, tol: float = DEFAULT_TOL) -> ComputationResult:
    """Lebesgue-type integral of the Dirichlet kernel over a full period.

    kind="full": (1/2pi) Int_0^{2pi} |sin((d+1/2)t)/sin(t/2)| dt
    kind="half": (1/2pi) Int_0^{2pi} |sin(((d+1)/2)t)/sin(t/2)| dt

    The numerator zeros are explicit, so the integral is a finite sum of
    smooth arches, each handled by Gauss-Legendre.
    """
    if d < 0:
        raise DomainError(f"need d >= 0, got {d}")
    if kind not in ("full", "half"):
        raise DomainError(f"kind must be 'full' or 'half', got {kind!r}")

    if kind == "full":
        freq, n_arches = d + 0.5, 2 * d + 1
    else:
        freq, n_arches = (d + 1) / 2.0, d + 1

    order = 16
    value = _dirichlet_pass(freq, n_arches, order)
    err = math.inf
    for _ in range(4):
        refined = _dirichlet_pass(freq, n_arches, 2 * order)
        err = abs(refined - value)
        value = refined
        order *= 2
        if err <= tol:
            break
    result = ComputationResult(
        value=value,
        abs_err=max(err, abs(value) * 1e-15),
        method="DirichletQuadrature",
        inputs={"d": d, "kind": kind, "tol": tol},
    )
    if err > tol:
        raise ToleranceError(
            f"Dirichlet integral reached {err:.3e}, requested {tol:.3e}",
            value=value,
            achieved=err,
        )
    return result
