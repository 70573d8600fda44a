"""Spherical inhomogeneity with the complete shell (Steigmann-Ogden)
interface under simple shear with surface tension.

The shear-mode coefficients (A1, A2, D3, D4) have closed forms built from
the interface-condition constants C31, C32, C41, C42 and the auxiliary
scalars E11, E12, E21, E22, F. Every lambda_I/mu_I ratio is rewritten as
2*nu_I/(1 - 2*nu_I) so that a cavity (mu_I = 0) is a regular input.

The spherically symmetric part is bending-inert: a uniform radial
displacement produces zero change of curvature, so (A0, D0) coincide with
the membrane closed form (sphere_gm.symmetric_mode).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParametersError
from .materials import (
    BulkMaterial,
    Geometry,
    SurfaceParams,
    derive_bulk,
    derive_surface,
    lame_ratio,
)
from .sphere_gm import Coeff3D, symmetric_mode


@dataclass(frozen=True)
class SOCoefficientMatrix:
    C31: float
    C32: float
    C41: float
    C42: float


@dataclass(frozen=True)
class SOAuxiliary:
    E11: float
    E12: float
    E21: float
    E22: float
    F: float


@dataclass(frozen=True)
class CurvatureChange:
    """Change-of-curvature components on the sphere (1/length)."""

    k_tt: object
    k_tp: object
    k_pp: object


@dataclass(frozen=True)
class SurfaceCoupleStress:
    """Surface couple-stress components (force)."""

    M_tt: object
    M_tp: object
    M_pp: object


def so_matrix(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
) -> SOCoefficientMatrix:
    """Interface-condition constants of the shear-mode traction equations."""
    R = g.R
    mu_i = inhom.mu
    li = lame_ratio(inhom.nu)  # lambda_I / mu_I
    lam_i = mu_i * li
    gamma = derive_surface(surf, g).gamma
    mu0, lam0, sig0 = surf.mu0, surf.lambda0, surf.sigma0

    C31 = -2.0 * mu_i + (2.0 / R) * (lam0 + mu0 - sig0) - 6.0 * gamma
    C32 = (
        -3.0 * lam_i
        - (6.0 / R) * (lam0 + mu0) * (3.0 * li + 7.0)
        - (6.0 / R) * sig0 * (li + 7.0)
        + 6.0 * gamma * (li - 7.0)
    )
    C41 = -mu_i - (1.0 / R) * (3.0 * mu0 + lam0 - sig0) + gamma
    C42 = (
        8.0 * lam_i
        + 7.0 * mu_i
        + (mu0 / R) * (19.0 * li + 35.0)
        + 3.0 * (lam0 / R) * (3.0 * li + 7.0)
        - (sig0 / R) * (li - 7.0)
        - gamma * (li - 7.0)
    )
    return SOCoefficientMatrix(C31=C31, C32=C32, C41=C41, C42=C42)


def so_auxiliary(
    matrix: BulkMaterial, inhom: BulkMaterial, cm: SOCoefficientMatrix
) -> SOAuxiliary:
    mu = matrix.mu
    lam = derive_bulk(matrix).lam
    li = lame_ratio(inhom.nu)
    d = (9.0 * lam + 14.0 * mu)
    E11 = 1.0 - ((3.0 * lam + 10.0 * mu) * cm.C31 + (18.0 * lam + 44.0 * mu) * cm.C41) / (
        4.0 * mu * d
    )
    E12 = (
        -((3.0 * lam + 10.0 * mu) * cm.C32 + (18.0 * lam + 44.0 * mu) * cm.C42)
        / (4.0 * mu * d)
        - (5.0 * li + 7.0)
    )
    E21 = 1.0 - (
        (15.0 * lam + 34.0 * mu) * cm.C31 + 6.0 * (3.0 * lam + 10.0 * mu) * cm.C41
    ) / (8.0 * mu * d)
    E22 = -3.0 * li - (
        (15.0 * lam + 34.0 * mu) * cm.C32 + 6.0 * (3.0 * lam + 10.0 * mu) * cm.C42
    ) / (8.0 * mu * d)
    F = 15.0 * (lam + 2.0 * mu) / d
    return SOAuxiliary(E11=E11, E12=E12, E21=E21, E22=E22, F=F)


def solve_so_shear(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
) -> Coeff3D:
    """Closed-form coefficient set for simple shear with the shell
    interface (membrane recovered at chi0 = zeta0 = 0)."""
    mu = matrix.mu
    lam = derive_bulk(matrix).lam
    R = g.R
    D1 = sigma_d / (2.0 * mu)
    cm = so_matrix(matrix, inhom, surf, g)
    aux = so_auxiliary(matrix, inhom, cm)

    det = aux.E11 * aux.E22 - aux.E12 * aux.E21
    if det == 0.0:
        raise DegenerateParametersError("E11*E22 - E12*E21 = 0")

    a1 = aux.F * (aux.E22 - aux.E12) / det          # A1 / D1
    a2 = aux.F * (aux.E11 - aux.E21) / det / R**2   # A2 / D1
    d = 9.0 * lam + 14.0 * mu
    d3 = -(
        a1 * ((3.0 * lam + 2.0 * mu) * cm.C31 + (18.0 * lam + 20.0 * mu) * cm.C41) * R**5
        + a2 * ((3.0 * lam + 2.0 * mu) * cm.C32 + (18.0 * lam + 20.0 * mu) * cm.C42) * R**7
        + 24.0 * mu * (mu + lam) * R**5
    ) / (8.0 * mu * d)
    d4 = (
        a1 * (cm.C31 + 3.0 * cm.C41) * R**3
        + a2 * (cm.C32 + 3.0 * cm.C42) * R**5
        + 5.0 * mu * R**3
    ) / d

    A0, D0 = symmetric_mode(matrix, inhom, surf, g)
    return Coeff3D(
        A0=A0,
        A1=a1 * D1,
        A2=a2 * D1,
        D0=D0,
        D1=D1,
        D3=d3 * D1,
        D4=d4 * D1,
    )


def residual_subtraction(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
) -> Coeff3D:
    """Shear solution minus the tension-only solution: the deviatoric
    coefficients are unchanged (surface tension enters them only through
    the material-like interface constants) and the uniform residual field
    cancels, leaving A0 = D0 = 0."""
    c = solve_so_shear(matrix, inhom, surf, g, sigma_d)
    return Coeff3D(
        A0=0.0, A1=c.A1, A2=c.A2, D0=0.0, D1=c.D1, D3=c.D3, D4=c.D4
    )


def curvature_change(u_r, u_t, u_p, du, d2u, r, theta):
    """Change-of-curvature components from surface displacement samples.

    kappa is the symmetrized surface gradient of the linearized rotation
    of the normal, theta_s = (u_s - grad_s u_r)/r, so it vanishes for a
    uniform radial displacement. ``du``/``d2u`` are dicts of first/second
    angular derivatives keyed by e.g. 'r_t' (du_r/dtheta), 'r_pp',
    'r_tp', 'p_t', ... evaluated on the sphere of radius r.
    """
    s, co = np.sin(theta), np.cos(theta)
    k_tt = (-d2u["r_tt"] + du["t_t"]) / r**2
    k_pp = (
        (-d2u["r_pp"] / s + du["p_p"]) / s + (-du["r_t"] + u_t) * co / s
    ) / r**2
    k_tp = (
        -2.0 * d2u["r_tp"] / s
        + 2.0 * du["r_p"] * co / s**2
        + du["p_t"]
        + du["t_p"] / s
        - u_p * co / s
    ) / (2.0 * r**2)
    return CurvatureChange(k_tt=k_tt, k_tp=k_tp, k_pp=k_pp)


def couple_stress(k: CurvatureChange, surf: SurfaceParams) -> SurfaceCoupleStress:
    """Linear constitutive map from curvature change to couple stress:
    M = chi0 tr(kappa) I + 2 zeta0 kappa. This pairing of the two bending
    moduli is the one consistent with the effective bending parameter
    gamma = (3 chi0 + 5 zeta0)/R^3 used by the coefficient solver."""
    tr = k.k_tt + k.k_pp
    return SurfaceCoupleStress(
        M_pp=surf.chi0 * tr + 2.0 * surf.zeta0 * k.k_pp,
        M_tp=2.0 * surf.zeta0 * k.k_tp,
        M_tt=surf.chi0 * tr + 2.0 * surf.zeta0 * k.k_tt,
    )


def jump_closed_form(
    ur_R,
    ut_R,
    surf: SurfaceParams,
    g: Geometry,
    theta,
    phi,
    ur0: float = 0.0,
):
    """Closed-form traction jumps (inh minus mat) on r = R:
    (d_rr, d_rt, d_rp) as fields over (theta, phi).

    ``ur_R``/``ut_R`` are the shear-mode radial profiles at the interface;
    ``ur0`` is the uniform radial surface displacement (the symmetric
    mode), which adds -2*eta0*ur0/R to the normal jump on top of the
    Laplace term -2*sigma0/R.
    """
    R = g.R
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    gamma = derive_surface(surf, g).gamma
    eta0 = derive_surface(surf, g).eta0
    mu0, lam0, sig0 = surf.mu0, surf.lambda0, surf.sigma0

    s = np.sin(theta)
    c2p, s2p = np.cos(2.0 * phi), np.sin(2.0 * phi)
    bend = gamma * (2.0 * ur_R - ut_R) / R  # gamma * R^3/r^4 * (...) at r=R

    d_rr = (
        -2.0 * sig0 / R
        - 2.0 * eta0 * ur0 / R
        + (
            (6.0 * (lam0 + mu0 + sig0) * ut_R - 4.0 * (mu0 + lam0 + 2.0 * sig0) * ur_R)
            / R**2
            - 6.0 * bend
        )
        * s**2
        * c2p
    )
    d_rt = (
        (
            -(3.0 * lam0 + 5.0 * mu0 + sig0) * ut_R
            + 2.0 * (mu0 + lam0 + sig0) * ur_R
        )
        / R**2
        + bend
    ) * np.sin(2.0 * theta) * c2p
    d_rp = (
        (
            2.0
            * ((3.0 * lam0 + 5.0 * mu0 + sig0) * ut_R - 2.0 * (mu0 + lam0 + sig0) * ur_R)
        )
        / R**2
        - 2.0 * bend
    ) * s * s2p
    return d_rr, d_rt, d_rp
