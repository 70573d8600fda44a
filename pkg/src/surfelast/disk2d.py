"""Circular inhomogeneity with a membrane or shell interface under a
uniform 2D far-field load.

The solution is carried by three series coefficients (ReA1, A_{-1}, A_3)
of the Kolosov-Muskhelishvili potentials

    inside   phi = a z/R + b (z/R)**3,          psi = c z/R
    outside  phi = p R/z + phi_inf,             psi = q R/z + s (R/z)**3 + psi_inf

with the far-field parts phi_inf = (s11+s22) z/4, psi_inf = (s22-s11+2i s12) z/2.
Displacements are evaluated from the closed power-law forms directly (so a
cavity, mu_I = 0, is a regular input); stresses come from the analytic
derivatives of the potentials.

Bending stiffness enters the deviatoric 2D mode exactly like an extra
surface tension 4*(2*chi0 + zeta0)/R**2, i.e. through
gamma_2d = (2*chi0 + zeta0)/R**3 in eta1/eta2 and in Delta2.
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
)


@dataclass(frozen=True)
class FarField2D:
    """Uniform far-field stress (s11, s22, s12)."""

    s11: float
    s22: float
    s12: float = 0.0

    @classmethod
    def shear(cls, sigma_d: float) -> "FarField2D":
        """Simple shear: s11 = -s22 = sigma_d."""
        return cls(sigma_d, -sigma_d, 0.0)

    @classmethod
    def hydrostatic(cls, sigma_h: float) -> "FarField2D":
        return cls(sigma_h, sigma_h, 0.0)

    @property
    def sigma_h(self) -> float:
        return 0.5 * (self.s11 + self.s22)


@dataclass(frozen=True)
class Coeff2D:
    """Solved potential coefficients plus the auxiliary moduli they came
    from (kept for downstream field evaluation)."""

    reA1: float
    Am1: complex
    A3: complex
    delta1: float
    delta2: float
    omega0: float
    omega1: float
    omega2: float
    eta2: float


@dataclass(frozen=True)
class ChristensenLoCoeff2D:
    d1: float
    a1: float
    a3: float
    c3: float


@dataclass(frozen=True)
class HydroCoeff:
    """Radial-profile coefficients: u_r = F1*r inside,
    u_r = F2*r + F3/r**(d-1) in the matrix."""

    F1: float
    F2: float
    F3: float
    d: int


def gamma_2d(surf: SurfaceParams, g: Geometry) -> float:
    """Effective bending parameter of the circular interface."""
    return (2.0 * surf.chi0 + surf.zeta0) / g.R**3


def _aux(matrix, inhom, surf, g):
    """eta-type and omega-type moduli of the 2D solution."""
    db = derive_bulk(matrix)
    dbi = derive_bulk(inhom)
    R = g.R
    eta = (2.0 * surf.mu0 + surf.lambda0) / (4.0 * R)
    shift = gamma_2d(surf, g) + surf.sigma0 / (4.0 * R)
    eta1 = eta + shift
    eta2 = eta - shift
    omega0 = dbi.K2 - db.K2 + 2.0 * eta
    omega1 = inhom.mu - matrix.mu + eta1
    omega2 = (
        inhom.mu * db.kappa / dbi.kappa
        - matrix.mu
        + 3.0 * db.kappa * eta1
        + 3.0 * eta2
    )
    return db, dbi, eta, eta1, eta2, omega0, omega1, omega2


def _delta2(matrix, inhom, surf, g, kappa, kappa_i, eta, eta1):
    shift = gamma_2d(surf, g) + surf.sigma0 / (4.0 * g.R)
    mu, mu_i = matrix.mu, inhom.mu
    return (
        (mu + kappa * mu_i) * (mu * kappa_i + mu_i)
        + eta1
        * (3.0 * kappa_i * (mu + kappa * mu_i) + kappa * (mu * kappa_i + mu_i))
        + 12.0 * kappa * kappa_i * eta * shift
    )


def solve_general_2d(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    load: FarField2D,
) -> Coeff2D:
    """Coefficients for an arbitrary uniform far-field load."""
    db, dbi, eta, eta1, eta2, om0, om1, om2 = _aux(matrix, inhom, surf, g)
    kappa, kappa_i = db.kappa, dbi.kappa
    mu, mu_i = matrix.mu, inhom.mu
    R = g.R

    delta1 = mu_i / (kappa_i - 1.0) + mu / 2.0 + eta
    delta2 = _delta2(matrix, inhom, surf, g, kappa, kappa_i, eta, eta1)
    if delta1 <= 0.0:
        raise DegenerateParametersError(f"Delta1 = {delta1} <= 0")
    if delta2 == 0.0:
        raise DegenerateParametersError("Delta2 = 0")

    denom = 2.0 * (dbi.K2 + mu + 2.0 * eta)  # = 4*Delta1
    reA1 = (R / denom) * (
        0.5 * (kappa + 1.0) * load.sigma_h - surf.sigma0 / R
    )
    dev_m = complex(load.s22 - load.s11, -2.0 * load.s12)
    dev_p = complex(load.s22 - load.s11, 2.0 * load.s12)
    pref = -0.25 * (kappa + 1.0) * R / delta2
    Am1 = pref * (mu * kappa_i + mu_i + 3.0 * kappa_i * eta1) * dev_m
    A3 = pref * kappa_i * eta2 * dev_p
    return Coeff2D(
        reA1=reA1,
        Am1=Am1,
        A3=A3,
        delta1=delta1,
        delta2=delta2,
        omega0=om0,
        omega1=om1,
        omega2=om2,
        eta2=eta2,
    )


def solve_shear_2d(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
) -> Coeff2D:
    """Fast path for simple shear (s11 = -s22 = sigma_d): the coefficients
    reduce to real closed forms."""
    db, dbi, eta, eta1, eta2, om0, om1, om2 = _aux(matrix, inhom, surf, g)
    kappa, kappa_i = db.kappa, dbi.kappa
    mu, mu_i = matrix.mu, inhom.mu
    R = g.R

    delta1 = mu_i / (kappa_i - 1.0) + mu / 2.0 + eta
    delta2 = _delta2(matrix, inhom, surf, g, kappa, kappa_i, eta, eta1)
    if delta1 <= 0.0:
        raise DegenerateParametersError(f"Delta1 = {delta1} <= 0")
    if delta2 == 0.0:
        raise DegenerateParametersError("Delta2 = 0")

    reA1 = -surf.sigma0 / (2.0 * (dbi.K2 + mu + 2.0 * eta))
    pref = 0.5 * (kappa + 1.0) * R * sigma_d / delta2
    Am1 = pref * (mu * kappa_i + mu_i + 3.0 * kappa_i * eta1)
    A3 = pref * kappa_i * eta2
    return Coeff2D(
        reA1=reA1,
        Am1=complex(Am1),
        A3=complex(A3),
        delta1=delta1,
        delta2=delta2,
        omega0=om0,
        omega1=om1,
        omega2=om2,
        eta2=eta2,
    )


def solve_hydro_2d(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_h: float,
) -> HydroCoeff:
    """Radial coefficients for hydrostatic far-field load (d = 2)."""
    db = derive_bulk(matrix)
    dbi = derive_bulk(inhom)
    eta = (2.0 * surf.mu0 + surf.lambda0) / (4.0 * g.R)
    R = g.R
    denom = 2.0 * (dbi.K2 + matrix.mu + 2.0 * eta)
    F1 = (0.5 * (db.kappa + 1.0) * sigma_h - surf.sigma0 / R) / denom
    F2 = sigma_h / (2.0 * db.K2)
    F3 = (
        -(R**2)
        / denom
        * (
            sigma_h * (dbi.K2 / db.K2 - 1.0 + 2.0 * eta / db.K2)
            + surf.sigma0 / R
        )
    )
    return HydroCoeff(F1=F1, F2=F2, F3=F3, d=2)


def cl_coefficients(
    c: Coeff2D,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
) -> ChristensenLoCoeff2D:
    """Christensen-Lo coefficients of the simple-shear representation.

    Only the real parts of A_{-1}, A_3 enter: the cos/sin(2*theta) ansatz
    assumes a real deviatoric load. c3 comes from the same displacement-
    continuity identity that fixes the outer z^{-3} potential coefficient.
    """
    db = derive_bulk(matrix)
    dbi = derive_bulk(inhom)
    kappa, kappa_i = db.kappa, dbi.kappa
    mu = matrix.mu
    Am1 = c.Am1.real
    A3 = c.A3.real
    R = g.R
    d1 = (4.0 * inhom.mu / kappa_i) * (3.0 * A3 / R + kappa_i * Am1 / R)
    a1 = (4.0 * inhom.mu / kappa_i) * A3 / R
    a3 = (4.0 / (kappa + 1.0)) * (
        3.0 * c.eta2 * A3 / R - c.omega1 * Am1 / R
    )
    c3 = (4.0 / (kappa + 1.0)) * (
        c.omega1 * Am1 / R + (mu * (kappa + 1.0) - 3.0 * c.eta2) * A3 / R
    )
    return ChristensenLoCoeff2D(d1=d1, a1=a1, a3=a3, c3=c3)


def displacement_2d(
    c: Coeff2D,
    load: FarField2D,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    r,
    theta,
    side: str | None = None,
):
    """(u_r, u_theta) at polar points. ``side`` picks the branch at r = R;
    elsewhere the branch follows from r vs R. Accepts numpy arrays."""
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    db = derive_bulk(matrix)
    dbi = derive_bulk(inhom)
    R = g.R
    e2 = np.exp(2j * theta)

    if side is None:
        inside = r < R
    else:
        _check_side(side)
        inside = np.full(np.broadcast(r, theta).shape, side == "inhomogeneity")

    rho = r / R
    w_in = (
        c.reA1 * rho
        + c.A3 * rho**3 * e2
        + (
            (3.0 / dbi.kappa) * np.conj(c.A3) * (rho - rho**3)
            + c.Am1 * rho
        )
        / e2
    )

    mu, kappa = matrix.mu, db.kappa
    inv_rho = R / np.where(r == 0.0, np.nan, r)
    w_ff = (kappa - 1.0) * (load.s11 + load.s22) / (8.0 * mu) * r - complex(
        load.s22 - load.s11, -2.0 * load.s12
    ) / (4.0 * mu) * r / e2
    w_mat = (
        -(kappa - 1.0)
        * (c.omega0 * c.reA1 + surf.sigma0 / 2.0)
        * inv_rho
        + kappa
        * (-c.omega1 * c.Am1 + 3.0 * c.eta2 * np.conj(c.A3))
        * inv_rho
        / e2
        + (-c.omega1 * np.conj(c.Am1) + 3.0 * c.eta2 * c.A3) * inv_rho * e2
        + (
            c.omega1 * np.conj(c.Am1)
            + (mu * (kappa + 1.0) - 3.0 * c.eta2) * c.A3
        )
        * inv_rho**3
        * e2
    ) / (mu * (kappa + 1.0)) + w_ff

    w = np.where(inside, w_in, w_mat)
    return np.real(w), np.imag(w)


def _potential_coeffs(c, load, matrix, inhom, surf):
    """Laurent coefficients (a, b, cc) inside and (p, q, s) outside."""
    dbi = derive_bulk(inhom)
    db = derive_bulk(matrix)
    kappa, kappa_i = db.kappa, dbi.kappa
    a = dbi.K2 * c.reA1
    b = (2.0 * inhom.mu / kappa_i) * c.A3
    cc = -2.0 * inhom.mu * (3.0 * c.A3 / kappa_i + np.conj(c.Am1))
    p = (2.0 / (kappa + 1.0)) * (
        -c.omega1 * c.Am1 + 3.0 * c.eta2 * np.conj(c.A3)
    )
    q = (
        (2.0 / (kappa + 1.0))
        * (kappa - 1.0)
        * (c.omega0 * c.reA1 + surf.sigma0 / 2.0)
    )
    # displacement continuity in the e^{2i theta} channel fixes the
    # outer z^{-3} coefficient: kappa_I b / (2 mu_I) = (pbar - sbar)/(2 mu)
    s = p - 2.0 * matrix.mu * np.conj(c.A3)
    return a, b, cc, p, q, s


def km_potentials(
    c: Coeff2D,
    load: FarField2D,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    z,
    side: str | None = None,
):
    """Kolosov-Muskhelishvili potentials (phi, psi) at complex point(s) z."""
    z = np.asarray(z, dtype=complex)
    R = g.R
    a, b, cc, p, q, s = _potential_coeffs(c, load, matrix, inhom, surf)
    if side is None:
        inside = np.abs(z) < R
    else:
        _check_side(side)
        inside = np.full(z.shape, side == "inhomogeneity")

    phi_in = a * z / R + b * (z / R) ** 3
    psi_in = cc * z / R

    phi_inf = 0.25 * (load.s11 + load.s22) * z
    psi_inf = 0.5 * complex(load.s22 - load.s11, 2.0 * load.s12) * z
    zz = np.where(z == 0.0, np.nan, z)
    phi_mat = p * R / zz + phi_inf
    psi_mat = q * R / zz + s * (R / zz) ** 3 + psi_inf

    return (
        np.where(inside, phi_in, phi_mat),
        np.where(inside, psi_in, psi_mat),
    )


def stress_2d(
    c: Coeff2D,
    load: FarField2D,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    r,
    theta,
    side: str | None = None,
):
    """(sigma_rr, sigma_tt, sigma_rt) from the analytic potential
    derivatives:

        sigma_rr + sigma_tt = 4 Re phi'
        sigma_tt - sigma_rr + 2i sigma_rt = 2 (zbar phi'' + psi') e^{2i theta}
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    R = g.R
    z = r * np.exp(1j * theta)
    zbar = np.conj(z)
    a, b, cc, p, q, s = _potential_coeffs(c, load, matrix, inhom, surf)
    if side is None:
        inside = r < R
    else:
        _check_side(side)
        inside = np.full(np.broadcast(r, theta).shape, side == "inhomogeneity")

    # inside: phi' = a/R + 3b z^2/R^3, phi'' = 6b z/R^3, psi' = cc/R
    dphi_in = a / R + 3.0 * b * z**2 / R**3
    ddphi_in = 6.0 * b * z / R**3
    dpsi_in = cc / R + np.zeros_like(z)

    zz = np.where(z == 0.0, np.nan, z)
    dphi_mat = -p * R / zz**2 + 0.25 * (load.s11 + load.s22)
    ddphi_mat = 2.0 * p * R / zz**3
    dpsi_mat = (
        -q * R / zz**2
        - 3.0 * s * R**3 / zz**4
        + 0.5 * complex(load.s22 - load.s11, 2.0 * load.s12)
    )

    dphi = np.where(inside, dphi_in, dphi_mat)
    ddphi = np.where(inside, ddphi_in, ddphi_mat)
    dpsi = np.where(inside, dpsi_in, dpsi_mat)

    s1 = 4.0 * np.real(dphi)
    s2 = 2.0 * (zbar * ddphi + dpsi) * np.exp(2j * theta)
    srr = 0.5 * (s1 - np.real(s2))
    stt = 0.5 * (s1 + np.real(s2))
    srt = 0.5 * np.imag(s2)
    return srr, stt, srt


def _check_side(side: str):
    if side not in ("inhomogeneity", "matrix"):
        raise ValueError(f"side must be 'inhomogeneity' or 'matrix', got {side!r}")
