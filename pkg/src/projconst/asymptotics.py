"""Closed-form limit constants and finite-degree convergence diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import lambda_harmonic, lambda_homogeneous, lambda_poly_leq
from .errors import UnsupportedCombinationError
from .gammafn import log_gamma
from .geometry import Family, SpaceId, dim_space
from .quadrature import DEFAULT_TOL

__all__ = ["LimitSpec", "ConvergenceRow", "limit_constant", "convergence_report"]


@dataclass(frozen=True)
class LimitSpec:
    """A (family, n, normalization) triple naming one of the limit theorems.

    Valid combinations: any family with "d_power" (n >= 3), harmonic with
    "dim_sqrt" (n >= 3), homogeneous/polyleq with "log_d" (n = 2).
    """

    family: Family
    n: int
    normalization: str  # dim_sqrt | d_power | log_d

    def __post_init__(self):
        ok = (
            (self.normalization == "d_power" and self.n >= 3)
            or (
                self.normalization == "dim_sqrt"
                and self.family is Family.HARMONIC
                and self.n >= 3
            )
            or (
                self.normalization == "log_d"
                and self.n == 2
                and self.family in (Family.HOMOGENEOUS, Family.POLY_LEQ)
            )
        )
        if not ok:
            raise UnsupportedCombinationError(
                f"no limit theorem for {self.family.value}, n={self.n}, "
                f"normalization={self.normalization}"
            )


def limit_constant(spec: LimitSpec) -> float:
    """The closed-form value of the corresponding limit."""
    n = spec.n
    if spec.normalization == "log_d":
        return 4.0 / math.pi**2

    log_quarter_sq = 2.0 * log_gamma(n / 4.0)
    if spec.family is Family.HARMONIC:
        if spec.normalization == "dim_sqrt":
            return math.exp(
                (n - 0.5) * math.log(2.0) - 0.5 * log_gamma(n - 1.0) + log_quarter_sq
            ) / math.pi**2
        return math.exp(
            n * math.log(2.0) - log_gamma(n - 1.0) + log_quarter_sq
        ) / math.pi**2
    if spec.family is Family.HOMOGENEOUS:
        return math.exp(
            (n + 1) * math.log(2.0)
            + 2.0 * log_gamma(n / 4.0 + 0.5)
            - log_gamma(n - 1.0)
        ) / (math.pi**2 * (n - 2))
    # polyleq
    return math.exp(
        log_gamma(n / 2.0 - 1.0)
        - (n / 2.0 - 3.0) * math.log(2.0)
        - 2.0 * log_gamma(n / 2.0 - 0.5)
    ) / math.pi


@dataclass(frozen=True)
class ConvergenceRow:
    d: int
    finite_ratio: float
    limit: float
    deviation: float


def _lambda_value(family: Family, n: int, d: int, tol: float) -> float:
    if family is Family.HARMONIC:
        return lambda_harmonic(n, d, tol).value
    if family is Family.HOMOGENEOUS:
        return lambda_homogeneous(n, d, tol).value
    return lambda_poly_leq(n, d, tol).value


def _normalizer(spec: LimitSpec, n: int, d: int) -> float:
    if spec.normalization == "dim_sqrt":
        return math.sqrt(dim_space(SpaceId(spec.family, n, d)))
    if spec.normalization == "d_power":
        return d ** ((n - 2) / 2.0)
    return math.log(d)


def convergence_report(
    spec: LimitSpec, d_values: list[int], tol: float = DEFAULT_TOL
) -> tuple[list[ConvergenceRow], bool]:
    """Per-d ratio lambda/normalization against the limit constant.

    Returns the table and a flag that is True when |deviation| fails to
    decrease monotonically along d_values.
    """
    if any(b <= a for a, b in zip(d_values, d_values[1:])):
        raise ValueError("d_values must be strictly increasing")
    limit = limit_constant(spec)
    rows = []
    for d in d_values:
        ratio = _lambda_value(spec.family, spec.n, d, tol) / _normalizer(spec, spec.n, d)
        rows.append(ConvergenceRow(d=d, finite_ratio=ratio, limit=limit, deviation=ratio - limit))
    devs = [abs(r.deviation) for r in rows]
    non_monotone = any(b >= a for a, b in zip(devs, devs[1:]))
    return rows, non_monotone
