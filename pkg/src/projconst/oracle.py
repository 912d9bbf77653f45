"""First-principles ground truth for small spaces.

Reproducing kernels are rebuilt from an orthonormal basis produced by
Gram-Schmidt over restricted monomials, with every inner product an exact
rational sphere moment; floats appear only in the final normalization.
Sphere integrals are also estimated by Monte Carlo for cross-checks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .geometry import Family, SpaceId, dim_space, monomial_moment_exact

__all__ = ["GramBasis", "gram_basis", "kernel_bruteforce", "montecarlo_sphere"]

ORACLE_MAX_N = 4
ORACLE_MAX_D = 6

MonomialKey = tuple[int, ...]


def _monomials(n: int, degree: int) -> list[MonomialKey]:
    """All multi-indices in n variables of the given total degree."""
    if degree < 0:
        return []
    out = []
    for comp in itertools.combinations_with_replacement(range(n), degree):
        alpha = [0] * n
        for i in comp:
            alpha[i] += 1
        out.append(tuple(alpha))
    return sorted(set(out), reverse=True)


@dataclass(frozen=True)
class GramBasis:
    """Orthonormal basis coefficients over a fixed spanning monomial list."""

    space: SpaceId
    monomials: tuple[MonomialKey, ...]
    coefficients: np.ndarray  # (dim, len(monomials))

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Values of every basis function at a point x in R^n."""
        mono_vals = np.array(
            [math.prod(float(xi) ** a for xi, a in zip(x, alpha)) for alpha in self.monomials]
        )
        return self.coefficients @ mono_vals


def _spanning_monomials(space: SpaceId) -> tuple[list[MonomialKey], int]:
    """Spanning monomials and the index where the target block starts.

    For harmonics the degree-(d-2) monomials come first: their span is
    projected out and the basis is read off the remaining degree-d block.
    """
    n, d = space.n, space.d
    if space.family is Family.HOMOGENEOUS:
        return _monomials(n, d), 0
    if space.family is Family.POLY_LEQ:
        lower = _monomials(n, d - 1)
        return lower + _monomials(n, d), 0
    lower = _monomials(n, d - 2)
    return lower + _monomials(n, d), len(lower)


def gram_basis(space: SpaceId) -> GramBasis:
    """Exact-rational Gram-Schmidt orthonormalization of the spanning set."""
    n, d = space.n, space.d
    if n > ORACLE_MAX_N or d > ORACLE_MAX_D:
        raise DomainError(
            f"oracle scale is n <= {ORACLE_MAX_N}, d <= {ORACLE_MAX_D}, got ({n}, {d})"
        )
    span, block_start = _spanning_monomials(space)
    m = len(span)

    gram = [
        [
            monomial_moment_exact(n, tuple(a + b for a, b in zip(span[i], span[j])))
            for j in range(m)
        ]
        for i in range(m)
    ]

    def inner(u: list[Fraction], v: list[Fraction]) -> Fraction:
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = gram[i]
                total += ui * sum(vj * row[j] for j, vj in enumerate(v) if vj)
        return total

    ortho: list[list[Fraction]] = []
    norms_sq: list[Fraction] = []
    from_target_block: list[bool] = []
    for k in range(m):
        u = [Fraction(0)] * m
        u[k] = Fraction(1)
        # <v_k, u_j> is just row k of the Gram matrix dotted with u_j
        row_k = gram[k]
        for u_j, nsq in zip(ortho, norms_sq):
            proj = sum(c * row_k[j] for j, c in enumerate(u_j) if c) / nsq
            if proj:
                u = [a - proj * b for a, b in zip(u, u_j)]
        nsq = inner(u, u)
        if nsq == 0:
            continue  # restriction-induced linear dependence on the sphere
        ortho.append(u)
        norms_sq.append(nsq)
        from_target_block.append(k >= block_start)

    rows = [
        np.array([float(c) for c in u]) / math.sqrt(float(nsq))
        for u, nsq, keep in zip(ortho, norms_sq, from_target_block)
        if keep
    ]
    coeff = np.array(rows) if rows else np.zeros((0, m))

    expected = dim_space(space)
    if coeff.shape[0] != expected:
        raise DomainError(
            f"rank deficiency: got {coeff.shape[0]} basis functions for {space}, "
            f"expected {expected}"
        )
    return GramBasis(space=space, monomials=tuple(span), coefficients=coeff)


def kernel_bruteforce(space: SpaceId, t: float, basis: GramBasis | None = None) -> float:
    """Kernel slice sum_j f_j(e1) f_j(y) with y = (t, sqrt(1-t^2), 0, ...)."""
    if abs(t) > 1:
        raise DomainError(f"need |t| <= 1, got {t}")
    if basis is None:
        basis = gram_basis(space)
    n = space.n
    e1 = np.zeros(n)
    e1[0] = 1.0
    y = np.zeros(n)
    y[0] = t
    if n > 1:
        y[1] = math.sqrt(max(0.0, 1.0 - t * t))
    return float(np.dot(basis.evaluate(e1), basis.evaluate(y)))


def montecarlo_sphere(
    n: int, f, samples: int, seed: int = 20240, chunk: int = 200_000
) -> tuple[float, float]:
    """Monte Carlo estimate of Int f dsigma_n with its standard error.

    Uniform points come from normalized standard Gaussian vectors; the stream
    is fully determined by the seed (fixed chunking, fixed reduction order).
    f takes an (m, n) array of sphere points and returns m values.
    """
    if samples < 1000:
        raise DomainError(f"need samples >= 1000, got {samples}")
    rng = np.random.default_rng(seed)
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        g = rng.standard_normal((m, n))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        vals = np.asarray(f(g), dtype=float)
        total += float(vals.sum())
        total_sq += float(np.square(vals).sum())
        done += m
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    std_err = math.sqrt(var / samples)
    return mean, std_err
