"""Spherical inhomogeneity with a membrane (Gurtin-Murdoch) interface.

Simple shear at infinity (s11 = -s22 = sigma_d) is handled through the
classical two-function radial profiles

    inside   U_r = A1*r - 6 nu_I/(1-2 nu_I) A2*r^3
             U_t = A1*r - (7-4 nu_I)/(1-2 nu_I) A2*r^3
    matrix   U_r = D1*r + 3*D3/r^4 + (5-4 nu)/(1-2 nu) D4/r^2
             U_t = D1*r - 2*D3/r^4 + 2*D4/r^2

plus a spherically symmetric surface-tension part u_r = -A0*r (inside) and
u_r = -D0/r^2 (matrix). D1 = sigma_d/(2*mu) is fixed by the far field;
(A0, D0) have the closed form A0 = D0/R^3 = (2*sigma0/R)/(4*mu + 3*K3_I +
2*eta0); the remaining four unknowns are solved numerically from the
displacement-continuity and traction-jump conditions, assembled in the
nondimensional unknowns (A1, A2*R^2, D3/R^5, D4/R^3) so conditioning does
not depend on the physical radius.

The shear-mode interface equations are assembled with the far-field
constant D1 = sigma_d/(2*mu) throughout; this is the only reading under
which the homogeneous limit returns the uniform far field, and it is
cross-checked against the independent closed-form route (see sphere_so).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParametersError
from .disk2d import HydroCoeff
from .materials import (
    BulkMaterial,
    Geometry,
    SurfaceParams,
    derive_bulk,
    derive_surface,
    lame_ratio,
)

_COND_LIMIT = 1e14


@dataclass(frozen=True)
class Coeff3D:
    A0: float
    A1: float
    A2: float
    D0: float
    D1: float
    D3: float
    D4: float


def symmetric_mode(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
) -> tuple[float, float]:
    """(A0, D0) of the uniform surface-tension response."""
    dbi = derive_bulk(inhom)
    ds = derive_surface(surf, g)
    A0 = (2.0 * surf.sigma0 / g.R) / (
        4.0 * matrix.mu + 3.0 * dbi.K3 + 2.0 * ds.eta0
    )
    return A0, A0 * g.R**3


def shear_system(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
):
    """Assemble the 4x4 shear-mode system M x = b for the nondimensional
    unknowns x = (A1, A2*R^2, D3/R^5, D4/R^3).

    Rows 1-2 are continuity of the U_t and U_r profiles at r = R. Rows
    3-4 equate the jump of the traction amplitudes (sigma_rr over
    sin^2(theta)cos(2 phi), sigma_rt over sin cos cos(2 phi)) to the
    surface-divergence amplitudes of the interface stress, which are
    linear in the interface values (u_t, u_r). Bending enters only
    through gamma, so the same system covers membrane and shell."""
    mu, nu = matrix.mu, matrix.nu
    mu_i = inhom.mu
    nu_i = inhom.nu
    lam = mu * lame_ratio(nu)
    lam_i = mu_i * lame_ratio(nu_i)
    R = g.R
    D1 = sigma_d / (2.0 * mu)
    gamma = derive_surface(surf, g).gamma
    mu0, lam0, sig0 = surf.mu0, surf.lambda0, surf.sigma0

    ci_r = 6.0 * nu_i / (1.0 - 2.0 * nu_i)
    ci_t = (7.0 - 4.0 * nu_i) / (1.0 - 2.0 * nu_i)
    cm_r = (5.0 - 4.0 * nu) / (1.0 - 2.0 * nu)

    # continuity of U_t and U_r
    row_a = [1.0, -ci_t, 2.0, -2.0]
    row_b = [1.0, -ci_r, -3.0, -cm_r]

    # interface values per unit x: u_t/R = x1 - ci_t x2, u_r/R = x1 - ci_r x2
    ut = np.array([1.0, -ci_t, 0.0, 0.0])
    ur = np.array([1.0, -ci_r, 0.0, 0.0])
    # sigma_rr amplitude = (lam + 2 mu) U_r' + lam (2 U_r - 3 U_t)/r
    srr_in = (lam_i + 2.0 * mu_i) * np.array([1.0, -3.0 * ci_r, 0.0, 0.0]) + lam_i * (
        2.0 * ur - 3.0 * ut
    )
    srr_mat = (lam + 2.0 * mu) * np.array([0.0, 0.0, -12.0, -2.0 * cm_r]) + lam * np.array(
        [0.0, 0.0, 12.0, 2.0 * cm_r - 6.0]
    )
    srr_mat_b = (lam + 2.0 * mu) * D1 - lam * D1
    # sigma_rt amplitude = mu (U_t' - U_t/r + 2 U_r/r)
    srt_in = mu_i * np.array([2.0, -2.0 * (ci_t + ci_r), 0.0, 0.0])
    srt_mat = mu * np.array([0.0, 0.0, 16.0, 2.0 * cm_r - 6.0])
    srt_mat_b = 2.0 * mu * D1

    # surface-divergence amplitudes, linear in (u_t, u_r)/R
    j_rr = (
        (6.0 * (lam0 + mu0 + sig0) * ut - 4.0 * (mu0 + lam0 + 2.0 * sig0) * ur) / R
        - 6.0 * gamma * (2.0 * ur - ut)
    )
    j_rt = 2.0 * (
        (-(3.0 * lam0 + 5.0 * mu0 + sig0) * ut + 2.0 * (mu0 + lam0 + sig0) * ur) / R
        + gamma * (2.0 * ur - ut)
    )

    # sigma_mat - sigma_inh = -(jump), jump being inhomogeneity minus matrix
    row_c = (srr_mat - srr_in + j_rr) / mu
    row_d = (srt_mat - srt_in + j_rt) / mu
    M = np.array([row_a, row_b, row_c, row_d], dtype=float)
    b = np.array([D1, D1, -srr_mat_b / mu, -srt_mat_b / mu], dtype=float)
    return M, b


def solve_gm_shear(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
) -> Coeff3D:
    """Full coefficient set for simple shear with a membrane interface."""
    if not surf.is_membrane:
        raise ValueError("membrane interface requires chi0 = zeta0 = 0")
    return solve_shear_numeric(matrix, inhom, surf, g, sigma_d)


def solve_shear_numeric(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
) -> Coeff3D:
    """Shear-mode coefficients from the numerically solved interface
    system (membrane or shell)."""
    M, b = shear_system(matrix, inhom, surf, g, sigma_d)
    if np.linalg.cond(M) > _COND_LIMIT:
        raise DegenerateParametersError(
            "shear-mode interface system is numerically singular"
        )
    x = np.linalg.solve(M, b)
    A0, D0 = symmetric_mode(matrix, inhom, surf, g)
    R = g.R
    return Coeff3D(
        A0=A0,
        A1=x[0],
        A2=x[1] / R**2,
        D0=D0,
        D1=sigma_d / (2.0 * matrix.mu),
        D3=x[2] * R**5,
        D4=x[3] * R**3,
    )


def solve_hydro_3d(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_h: float,
) -> HydroCoeff:
    """Radial coefficients for hydrostatic far-field load (d = 3)."""
    db = derive_bulk(matrix)
    dbi = derive_bulk(inhom)
    ds = derive_surface(surf, g)
    R = g.R
    mu = matrix.mu
    denom = 4.0 * mu + 3.0 * dbi.K3 + 2.0 * ds.eta0
    F1 = (
        (1.0 + 4.0 * mu / (3.0 * db.K3)) * sigma_h - 2.0 * surf.sigma0 / R
    ) / denom
    F2 = sigma_h / (3.0 * db.K3)
    F3 = (
        R**3
        * (
            sigma_h * ((1.0 - dbi.K3 / db.K3) - 2.0 * ds.eta0 / (3.0 * db.K3))
            - 2.0 * surf.sigma0 / R
        )
        / denom
    )
    return HydroCoeff(F1=F1, F2=F2, F3=F3, d=3)


def radial_profiles(c: Coeff3D, matrix: BulkMaterial, inhom: BulkMaterial, r, inside):
    """(U_r, U_t, U_r', U_t', g, g') of the shear mode plus the symmetric
    part g at radius r, branch chosen by the boolean mask ``inside``."""
    r = np.asarray(r, dtype=float)
    nu, nu_i = matrix.nu, inhom.nu
    ci_r = 6.0 * nu_i / (1.0 - 2.0 * nu_i)
    ci_t = (7.0 - 4.0 * nu_i) / (1.0 - 2.0 * nu_i)
    cm_r = (5.0 - 4.0 * nu) / (1.0 - 2.0 * nu)

    ur_in = c.A1 * r - ci_r * c.A2 * r**3
    ut_in = c.A1 * r - ci_t * c.A2 * r**3
    dur_in = c.A1 - 3.0 * ci_r * c.A2 * r**2
    dut_in = c.A1 - 3.0 * ci_t * c.A2 * r**2
    g_in = -c.A0 * r
    dg_in = -c.A0 + 0.0 * r

    ur_mat = c.D1 * r + 3.0 * c.D3 / r**4 + cm_r * c.D4 / r**2
    ut_mat = c.D1 * r - 2.0 * c.D3 / r**4 + 2.0 * c.D4 / r**2
    dur_mat = c.D1 - 12.0 * c.D3 / r**5 - 2.0 * cm_r * c.D4 / r**3
    dut_mat = c.D1 + 8.0 * c.D3 / r**5 - 4.0 * c.D4 / r**3
    g_mat = -c.D0 / r**2
    dg_mat = 2.0 * c.D0 / r**3

    pick = lambda a, b: np.where(inside, a, b)
    return (
        pick(ur_in, ur_mat),
        pick(ut_in, ut_mat),
        pick(dur_in, dur_mat),
        pick(dut_in, dut_mat),
        pick(g_in, g_mat),
        pick(dg_in, dg_mat),
    )


def _inside_mask(r, theta, phi, R, side):
    r = np.asarray(r, dtype=float)
    if side is None:
        return r < R
    if side not in ("inhomogeneity", "matrix"):
        raise ValueError(f"side must be 'inhomogeneity' or 'matrix', got {side!r}")
    shape = np.broadcast(r, np.asarray(theta), np.asarray(phi)).shape
    return np.full(shape, side == "inhomogeneity")


def displacement_3d(
    c: Coeff3D,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    g: Geometry,
    r,
    theta,
    phi,
    side: str | None = None,
):
    """(u_r, u_theta, u_phi) in spherical coordinates."""
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    inside = _inside_mask(r, theta, phi, g.R, side)
    ur_, ut_, _, _, g_, _ = radial_profiles(c, matrix, inhom, r, inside)
    s, co = np.sin(theta), np.cos(theta)
    c2p, s2p = np.cos(2.0 * phi), np.sin(2.0 * phi)
    u_r = g_ + ur_ * s**2 * c2p
    u_t = ut_ * s * co * c2p
    u_p = -ut_ * s * s2p
    return u_r, u_t, u_p


def stress_3d(
    c: Coeff3D,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    g: Geometry,
    r,
    theta,
    phi,
    side: str | None = None,
):
    """Spherical stress components (s_rr, s_tt, s_pp, s_rt, s_rp, s_tp)
    from the analytic strain of the closed-form displacement and isotropic
    Hooke's law of the owning phase."""
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    inside = _inside_mask(r, theta, phi, g.R, side)
    ur_, ut_, dur_, dut_, g_, dg_ = radial_profiles(c, matrix, inhom, r, inside)

    s, co = np.sin(theta), np.cos(theta)
    c2t = np.cos(2.0 * theta)
    c2p, s2p = np.cos(2.0 * phi), np.sin(2.0 * phi)

    e_rr = dg_ + dur_ * s**2 * c2p
    e_tt = (ut_ * c2t * c2p + g_ + ur_ * s**2 * c2p) / r
    e_pp = ((co**2 - 2.0) * ut_ * c2p + g_ + ur_ * s**2 * c2p) / r
    shear_amp = 0.5 * (dut_ - ut_ / r + 2.0 * ur_ / r)
    e_rt = shear_amp * s * co * c2p
    e_rp = -shear_amp * s * s2p
    e_tp = -(ut_ / r) * co * s2p

    lam_i = inhom.mu * lame_ratio(inhom.nu)
    lam_m = matrix.mu * lame_ratio(matrix.nu)
    lam = np.where(inside, lam_i, lam_m)
    mu2 = 2.0 * np.where(inside, inhom.mu, matrix.mu)

    tr = e_rr + e_tt + e_pp
    return (
        lam * tr + mu2 * e_rr,
        lam * tr + mu2 * e_tt,
        lam * tr + mu2 * e_pp,
        mu2 * e_rt,
        mu2 * e_rp,
        mu2 * e_tp,
    )


def spherical_to_cartesian_stress(components, theta, phi):
    """Rotate (s_rr, s_tt, s_pp, s_rt, s_rp, s_tp) at (theta, phi) into
    Cartesian (s_xx, s_yy, s_zz, s_xy, s_xz, s_yz)."""
    srr, stt, spp, srt, srp, stp = (np.asarray(x, dtype=float) for x in components)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    # basis vectors as rows: Q[i] = e_i in Cartesian, i in (r, theta, phi)
    e = np.array(
        [
            [st * cp, st * sp, ct + 0.0 * sp],
            [ct * cp, ct * sp, -st + 0.0 * sp],
            [-sp + 0.0 * st, cp + 0.0 * st, 0.0 * (st + sp)],
        ]
    )
    S = np.array(
        [
            [srr, srt, srp],
            [srt, stt, stp],
            [srp, stp, spp],
        ]
    )
    # sigma_cart[a,b] = sum_ij e[i,a] S[i,j] e[j,b]
    cart = np.einsum("ia...,ij...,jb...->ab...", e, S, e)
    return (
        cart[0, 0],
        cart[1, 1],
        cart[2, 2],
        cart[0, 1],
        cart[0, 2],
        cart[1, 2],
    )


_PARTIAL_LABELS = ("u00_3", "u22_1", "u22_3", "U00_1", "U22_1", "U22_3")


def eval_partial_solution(label: str, nu: float, r, theta, phi):
    """Real part of a vector partial solution of the Lame equation, as a
    (u_r, u_theta, u_phi) triple. Built on the t=2, s=2 surface harmonic
    chi = 3 sin^2(theta) e^{2i phi} and the monopole chi = 1."""
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    s, co = np.sin(theta), np.cos(theta)
    c2p, s2p = np.cos(2.0 * phi), np.sin(2.0 * phi)
    zero = 0.0 * (r + theta + phi)

    # Re S22^(1) = (0, 6 sc cos2p, -6 s sin2p); Re S22^(3) = (3 s^2 cos2p, 0, 0)
    s1 = (zero, 6.0 * s * co * c2p, -6.0 * s * s2p)
    s3 = (3.0 * s**2 * c2p, zero, zero)

    def combine(f1, f3):
        return tuple(f1 * a + f3 * b for a, b in zip(s1, s3))

    if label == "u00_3":
        return (-2.0 * (1.0 - 2.0 * nu) * r / 3.0 + zero, zero, zero)
    if label == "U00_1":
        return (-1.0 / r**2 + zero, zero, zero)
    if label == "u22_1":
        return combine(r / 24.0, 2.0 * r / 24.0)
    if label == "u22_3":
        return combine(
            (r**3 / 24.0) * (7.0 - 4.0 * nu) / 21.0,
            (r**3 / 24.0) * 4.0 * nu / 7.0,
        )
    if label == "U22_1":
        return combine(1.0 / r**4, -3.0 / r**4)
    if label == "U22_3":
        return combine(
            (1.0 - 2.0 * nu) / (3.0 * r**2), (5.0 - 4.0 * nu) / (3.0 * r**2)
        )
    raise ValueError(f"unknown partial solution {label!r}; use one of {_PARTIAL_LABELS}")


def displacement_from_partials(
    c: Coeff3D,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    r,
    theta,
    phi,
    side: str,
):
    """Displacement assembled directly from the vector partial solutions;
    the component formulas must reproduce this exactly."""
    if side == "inhomogeneity":
        nu_i = inhom.nu
        terms = (
            (3.0 / (2.0 * (1.0 - 2.0 * nu_i)) * c.A0, "u00_3", nu_i),
            (4.0 * c.A1, "u22_1", nu_i),
            (-84.0 / (1.0 - 2.0 * nu_i) * c.A2, "u22_3", nu_i),
        )
    elif side == "matrix":
        nu = matrix.nu
        terms = (
            (2.0 * c.D1 * 2.0, "u22_1", nu),  # 2 sigma_d/mu = 4 D1
            (c.D0, "U00_1", nu),
            (-c.D3 / 3.0, "U22_1", nu),
            (c.D4 / (1.0 - 2.0 * nu), "U22_3", nu),
        )
    else:
        raise ValueError(f"side must be 'inhomogeneity' or 'matrix', got {side!r}")
    out = None
    for coeff, label, nu_ in terms:
        vec = eval_partial_solution(label, nu_, r, theta, phi)
        if out is None:
            out = [coeff * v for v in vec]
        else:
            out = [o + coeff * v for o, v in zip(out, vec)]
    return tuple(out)
