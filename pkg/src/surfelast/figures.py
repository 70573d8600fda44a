"""Data series behind the reference plots and the effective-modulus
table: surface-stress profiles along the cavity surface and Maxwell
effective shear modulus versus volume fraction.

All series are returned as (header, rows); CSV writing lives in the CLI.
The cavity benchmark parameter set (normalized by the matrix shear
modulus mu and the radius R):

    sigma_d / mu = 0.000028818
    sigma_0 / (mu R) in {0, 0.0067435, 0.0097983}
    nu = 0.3, mu_0/(mu R) = 0.030156, lambda_0/(mu R) = 0.060312,
    gamma / mu = 0.00028382   (bending carried entirely by chi0)

and the dimensional variant (alumina matrix): mu = 34.7 GPa, nu = 0.3,
sigma_0 = 1.7 N/m, sigma_d = 100 MPa, mu_0 = 5.2321 N/m,
lambda_0 = 10.4641 N/m with the same R-independent gamma.
"""

from __future__ import annotations

import numpy as np

from .homogenize import effective_shear
from .materials import BulkMaterial, Geometry, SurfaceParams, cavity
from .sphere_gm import spherical_to_cartesian_stress, stress_3d
from .sphere_so import solve_so_shear

SIGMA_D_RATIO = 0.000028818
SIGMA0_RATIOS = (0.0, 0.0067435, 0.0097983)
NU_MATRIX = 0.3
MU0_RATIO = 0.030156
LAMBDA0_RATIO = 0.060312
GAMMA_RATIO = 0.00028382

ALUMINA_MU_GPA = 34.7
ALUMINA_SIGMA0 = 1.7      # N/m = GPa*nm
ALUMINA_SIGMA_D = 0.1     # GPa
ALUMINA_MU0 = 5.2321      # N/m
ALUMINA_LAMBDA0 = 10.4641  # N/m
FIG4_RADII_NM = (5.0, 10.0, 20.0)

TABLE1_FRACTIONS = (0.1, 0.3, 0.5)


def benchmark_surface(mu: float, R: float, sigma0_ratio: float) -> SurfaceParams:
    """Cavity-benchmark surface constants for a matrix of shear modulus
    ``mu`` and radius ``R`` (bending from gamma, carried by chi0)."""
    return SurfaceParams(
        mu0=MU0_RATIO * mu * R,
        lambda0=LAMBDA0_RATIO * mu * R,
        sigma0=sigma0_ratio * mu * R,
        chi0=GAMMA_RATIO * mu * R**3 / 3.0,
    )


def _surface_stress(matrix, surf, g, sigma_d, theta, phi):
    """Matrix-side spherical stress components on the cavity surface."""
    c = solve_so_shear(matrix, cavity(), surf, g, sigma_d)
    r = np.full_like(theta, g.R)
    return stress_3d(c, matrix, cavity(), g, r, theta, phi, side="matrix"), theta, phi


def _theta_grid(n: int = 91):
    return np.linspace(0.0, np.pi / 2.0, n)


def fig2_data(n: int = 91):
    """Hoop stress sigma_tt/mu along the cavity surface at phi = 0 for
    the three benchmark surface tensions."""
    matrix = BulkMaterial(1.0, NU_MATRIX)
    g = Geometry(1.0)
    theta = _theta_grid(n)
    phi = np.zeros_like(theta)
    header = ["theta (rad)"] + [
        f"sigma_tt_over_mu (sigma0/(mu R) = {s0:g})" for s0 in SIGMA0_RATIOS
    ]
    cols = [theta]
    for s0 in SIGMA0_RATIOS:
        surf = benchmark_surface(1.0, 1.0, s0)
        comps, _, _ = _surface_stress(matrix, surf, g, SIGMA_D_RATIO, theta, phi)
        cols.append(comps[1])  # sigma_tt, already /mu since mu = 1
    return header, list(zip(*cols))


def fig3_data(n: int = 91):
    """Axial stress sigma_zz/mu along the cavity surface at phi = 0."""
    matrix = BulkMaterial(1.0, NU_MATRIX)
    g = Geometry(1.0)
    theta = _theta_grid(n)
    phi = np.zeros_like(theta)
    header = ["theta (rad)"] + [
        f"sigma_zz_over_mu (sigma0/(mu R) = {s0:g})" for s0 in SIGMA0_RATIOS
    ]
    cols = [theta]
    for s0 in SIGMA0_RATIOS:
        surf = benchmark_surface(1.0, 1.0, s0)
        comps, _, _ = _surface_stress(matrix, surf, g, SIGMA_D_RATIO, theta, phi)
        cart = spherical_to_cartesian_stress(comps, theta, phi)
        cols.append(cart[2])  # sigma_zz
    return header, list(zip(*cols))


def fig4_data(n: int = 91):
    """Size effect: hoop stress sigma_tt/sigma_d along the cavity surface
    at phi = pi/2 for several radii, plus the size-independent classical
    curve."""
    matrix = BulkMaterial(ALUMINA_MU_GPA, NU_MATRIX)
    theta = _theta_grid(n)
    phi = np.full_like(theta, np.pi / 2.0)
    header = ["theta (rad)", "sigma_tt_over_sigma_d (classical)"] + [
        f"sigma_tt_over_sigma_d (R = {R:g} nm)" for R in FIG4_RADII_NM
    ]
    cols = [theta]
    comps, _, _ = _surface_stress(
        matrix, SurfaceParams(), Geometry(1.0), ALUMINA_SIGMA_D, theta, phi
    )
    cols.append(comps[1] / ALUMINA_SIGMA_D)
    gamma = GAMMA_RATIO * ALUMINA_MU_GPA
    for R in FIG4_RADII_NM:
        surf = SurfaceParams(
            mu0=ALUMINA_MU0,
            lambda0=ALUMINA_LAMBDA0,
            sigma0=ALUMINA_SIGMA0,
            chi0=gamma * R**3 / 3.0,
        )
        comps, _, _ = _surface_stress(
            matrix, surf, Geometry(R), ALUMINA_SIGMA_D, theta, phi
        )
        cols.append(comps[1] / ALUMINA_SIGMA_D)
    return header, list(zip(*cols))


def _mu_ef(model: str, c: float, sigma0_ratio: float = 0.0) -> float:
    matrix = BulkMaterial(1.0, NU_MATRIX)
    if model == "classical":
        surf = SurfaceParams()
    elif model == "gm":
        surf = SurfaceParams(
            mu0=MU0_RATIO, lambda0=LAMBDA0_RATIO, sigma0=sigma0_ratio
        )
    elif model == "so":
        surf = SurfaceParams(
            mu0=MU0_RATIO,
            lambda0=LAMBDA0_RATIO,
            sigma0=sigma0_ratio,
            chi0=GAMMA_RATIO / 3.0,
        )
    else:
        raise ValueError(f"unknown model {model!r}")
    est = effective_shear(matrix, cavity(), surf, Geometry(1.0), c)
    return est.mu_ef_ratio


def fig5_data(fractions=None):
    """Effective shear modulus versus volume fraction for the cavity
    benchmark, one column per interface model."""
    if fractions is None:
        fractions = np.linspace(0.0, 0.6, 31)
    header = [
        "c (volume fraction)",
        "mu_ef_over_mu (classical)",
        "mu_ef_over_mu (gm)",
        "mu_ef_over_mu (so)",
    ]
    rows = [
        (c, _mu_ef("classical", c), _mu_ef("gm", c), _mu_ef("so", c))
        for c in np.asarray(fractions, dtype=float)
    ]
    return header, rows


def table1_data():
    """Effective shear modulus at c in {0.1, 0.3, 0.5} for the three
    interface models of the cavity benchmark."""
    header = [
        "c (volume fraction)",
        "mu_ef_over_mu (classical)",
        "mu_ef_over_mu (gm)",
        "mu_ef_over_mu (so)",
    ]
    rows = [
        (c, _mu_ef("classical", c), _mu_ef("gm", c), _mu_ef("so", c))
        for c in TABLE1_FRACTIONS
    ]
    return header, rows


FIGURES = {
    "fig2": fig2_data,
    "fig3": fig3_data,
    "fig4": fig4_data,
    "fig5": fig5_data,
    "table1": table1_data,
}
