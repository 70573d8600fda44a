"""Maxwell-scheme estimate of the effective shear modulus of an
isotropic composite with spherical inhomogeneities carrying membrane or
shell interfaces.

Two-stage route: (i) the single-inhomogeneity shear problem is solved
with the interface model and the surface-tension-only residual field is
subtracted, leaving the dipole coefficient D4; (ii) a perfectly bonded
inhomogeneity with shear modulus mu_eq is chosen to reproduce the same
D4, and mu_eq is fed into the classical Maxwell formula.

Both routes to mu_ef/mu -- the Maxwell formula in terms of mu_eq and the
compact expression in terms of Lambda = 1 - mu_eq/mu -- are algebraically
identical; ``effective_shear`` evaluates the compact one and asserts the
equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .materials import BulkMaterial, Geometry, SurfaceParams, derive_bulk
from .sphere_so import residual_subtraction


@dataclass(frozen=True)
class EffectiveEstimate:
    """Effective-shear result: the equivalent-inhomogeneity modulus ratio
    ``mu_eq_ratio`` = mu_eq/mu, the dipole ratio ``d4_ratio`` = D4/(sigma_d R^3),
    ``Lambda`` = 1 - mu_eq/mu, and ``mu_ef_ratio`` = mu_ef/mu."""

    mu_eq_ratio: float
    d4_ratio: float
    Lambda: float
    mu_ef_ratio: float


def mu_star(matrix: BulkMaterial) -> float:
    """Maxwell auxiliary modulus mu* = mu(9K + 8mu)/(6(K + 2mu))."""
    mu = matrix.mu
    d = derive_bulk(matrix)
    via_K = mu * (9.0 * d.K3 + 8.0 * mu) / (6.0 * (d.K3 + 2.0 * mu))
    via_lam = 0.5 * mu * (9.0 * d.lam + 14.0 * mu) / (3.0 * d.lam + 8.0 * mu)
    assert abs(via_K - via_lam) <= 1e-12 * max(abs(via_K), 1.0)
    return via_K


def d4_equivalent(matrix: BulkMaterial, mu_eq_ratio: float, sigma_d: float, R: float) -> float:
    """Dipole coefficient of a perfectly bonded inhomogeneity with shear
    modulus mu_eq = mu * mu_eq_ratio under simple shear sigma_d."""
    mu = matrix.mu
    lam = derive_bulk(matrix).lam
    return (
        -2.5
        * (mu_eq_ratio - 1.0)
        * sigma_d
        * R**3
        / ((9.0 * lam + 14.0 * mu) + 2.0 * mu_eq_ratio * (8.0 * lam + 3.0 * mu))
    )


def mu_eq_from_d4(matrix: BulkMaterial, d4_ratio: float) -> float:
    """Invert the dipole match: mu_eq/mu from t = D4/(sigma_d R^3)."""
    mu = matrix.mu
    lam = derive_bulk(matrix).lam
    t = d4_ratio
    return 1.0 - 2.0 * (4.0 * mu + 5.0 * lam) * t / (
        1.0 + 0.8 * t * (3.0 * mu + 8.0 * lam)
    )


def maxwell_mu_ef(matrix: BulkMaterial, mu_eq_ratio: float, c: float) -> float:
    """Classical Maxwell estimate for a perfectly bonded inhomogeneity of
    volume fraction c with shear modulus ratio mu_eq/mu."""
    mu = matrix.mu
    mu_eq = mu_eq_ratio * mu
    ms = mu_star(matrix)
    return (mu_eq + ms + c * ms * (mu_eq_ratio - 1.0)) / (
        mu_eq + ms - c * (mu_eq - mu)
    )


def effective_shear(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    c: float,
) -> EffectiveEstimate:
    """mu_ef/mu for volume fraction ``c`` of spherical inhomogeneities."""
    if not 0.0 <= c < 1.0:
        raise ValueError(f"volume fraction must lie in [0, 1), got c={c}")
    mu = matrix.mu
    lam = derive_bulk(matrix).lam

    # The ratio D4/(sigma_d R^3) is load- and scale-invariant.
    coeff = residual_subtraction(matrix, inhom, surf, g, sigma_d=2.0 * mu)
    t = coeff.D4 / (2.0 * mu * g.R**3)

    mu_eq_ratio = mu_eq_from_d4(matrix, t)
    Lambda = 1.0 - mu_eq_ratio
    mu_ef_ratio = 1.0 - 15.0 * c * (lam + 2.0 * mu) * Lambda / (
        2.0 * (3.0 * lam + 8.0 * mu) * (1.0 - (1.0 - c) * Lambda)
        + (9.0 * lam + 14.0 * mu)
    )

    via_maxwell = maxwell_mu_ef(matrix, mu_eq_ratio, c)
    assert abs(mu_ef_ratio - via_maxwell) <= 1e-12 * max(abs(mu_ef_ratio), 1.0)

    return EffectiveEstimate(
        mu_eq_ratio=mu_eq_ratio,
        d4_ratio=t,
        Lambda=Lambda,
        mu_ef_ratio=mu_ef_ratio,
    )
