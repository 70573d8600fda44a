"""Independent numerical oracles.

Everything here treats the governing interface/equilibrium equations as
the specification and a solver's output fields as candidates:

* surface stress tensor T and surface couple stress M assembled from
  displacement samples with central finite differences,
* traction-jump residuals on the interface (2D spectral, 3D FD with one
  Richardson extrapolation level),
* bulk equilibrium residuals (FD divergence of the stress field),
* direct numeric solves of the interface linear systems, used as oracles
  for the closed-form coefficient expressions.

None of the closed-form coefficient routines under test are called here;
the 3D systems are assembled from their own transcriptions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .materials import (
    BulkMaterial,
    Geometry,
    SurfaceParams,
    derive_bulk,
    derive_surface,
    lame_ratio,
)

#: default angular step; theta-grids exclude the poles by this margin
POLE_MARGIN = np.pi / 384.0


@dataclass(frozen=True)
class SurfaceStressTensor:
    T_tt: np.ndarray
    T_pp: np.ndarray
    T_pt: np.ndarray
    T_tp: np.ndarray
    T_tr: np.ndarray
    T_pr: np.ndarray


@dataclass(frozen=True)
class SurfaceCoupleStressTensor:
    M_tt: np.ndarray
    M_pp: np.ndarray
    M_tp: np.ndarray


@dataclass(frozen=True)
class JumpResidual:
    """Max relative jump residual per traction component, with the grid
    step used and whether one Richardson level was applied."""

    rr: float
    rt: float
    rp: float
    h: float
    richardson: bool

    @property
    def max(self) -> float:
        return max(self.rr, self.rt, self.rp)


def _d(u_fn, theta, phi, h, wrt, comp, order=1):
    """Central FD derivative of displacement component ``comp`` (0=r,
    1=theta, 2=phi) with respect to ``wrt`` ('t' or 'p')."""
    dt = h if wrt == "t" else 0.0
    dp = h if wrt == "p" else 0.0
    up = u_fn(theta + dt, phi + dp)[comp]
    um = u_fn(theta - dt, phi - dp)[comp]
    if order == 1:
        return (up - um) / (2.0 * h)
    u0 = u_fn(theta, phi)[comp]
    return (up - 2.0 * u0 + um) / h**2


def _d_mixed(u_fn, theta, phi, h, comp):
    """d^2/(dtheta dphi) by the four-point cross stencil."""
    return (
        u_fn(theta + h, phi + h)[comp]
        - u_fn(theta + h, phi - h)[comp]
        - u_fn(theta - h, phi + h)[comp]
        + u_fn(theta - h, phi - h)[comp]
    ) / (4.0 * h**2)


def surface_T(u_fn, surf: SurfaceParams, R: float, theta, phi, h) -> SurfaceStressTensor:
    """Membrane surface stress from displacement samples on r = R.

    ``u_fn(theta, phi) -> (u_r, u_theta, u_phi)`` must be evaluable at
    FD-shifted angles. At zero displacement T_tt = T_pp = sigma0 and all
    other components vanish.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    s, c = np.sin(theta), np.cos(theta)
    ur, ut, up = u_fn(theta, phi)
    ur_t = _d(u_fn, theta, phi, h, "t", 0)
    ur_p = _d(u_fn, theta, phi, h, "p", 0)
    ut_t = _d(u_fn, theta, phi, h, "t", 1)
    ut_p = _d(u_fn, theta, phi, h, "p", 1)
    up_t = _d(u_fn, theta, phi, h, "t", 2)
    up_p = _d(u_fn, theta, phi, h, "p", 2)

    mu0, lam0, sig0 = surf.mu0, surf.lambda0, surf.sigma0
    hoop = (up_p + ut * c + ur * s) / (R * s)
    merid = (ut_t + ur) / R
    T_tt = sig0 + (lam0 + sig0) * hoop + (lam0 + 2.0 * mu0) * merid
    T_pp = sig0 + (lam0 + 2.0 * mu0) * hoop + (lam0 + sig0) * merid
    T_pt = (mu0 * (ut_p - up * c) + (mu0 - sig0) * up_t * s) / (R * s)
    T_tp = ((mu0 - sig0) * (ut_p - up * c) + mu0 * up_t * s) / (R * s)
    T_tr = sig0 * (ur_t - ut) / R
    T_pr = sig0 * (ur_p - up * s) / (R * s)
    return SurfaceStressTensor(
        T_tt=T_tt, T_pp=T_pp, T_pt=T_pt, T_tp=T_tp, T_tr=T_tr, T_pr=T_pr
    )


def surface_kappa(u_fn, R: float, theta, phi, h):
    """Change-of-curvature components (k_tt, k_tp, k_pp) by FD.

    kappa is the symmetrized surface gradient of the linearized rotation
    theta_s = (u_s - grad_s u_r) / R of the interface normal; it vanishes
    for a uniform radial displacement (pure dilation of the sphere).
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    s, c = np.sin(theta), np.cos(theta)
    ur, ut, up = u_fn(theta, phi)
    ur_t = _d(u_fn, theta, phi, h, "t", 0)
    ur_p = _d(u_fn, theta, phi, h, "p", 0)
    ur_tt = _d(u_fn, theta, phi, h, "t", 0, order=2)
    ur_pp = _d(u_fn, theta, phi, h, "p", 0, order=2)
    ur_tp = _d_mixed(u_fn, theta, phi, h, 0)
    ut_t = _d(u_fn, theta, phi, h, "t", 1)
    ut_p = _d(u_fn, theta, phi, h, "p", 1)
    up_t = _d(u_fn, theta, phi, h, "t", 2)
    up_p = _d(u_fn, theta, phi, h, "p", 2)

    k_tt = (-ur_tt + ut_t) / R**2
    k_pp = ((-ur_pp / s + up_p) / s + (-ur_t + ut) * c / s) / R**2
    k_tp = (
        -2.0 * ur_tp / s
        + 2.0 * ur_p * c / s**2
        + up_t
        + ut_p / s
        - up * c / s
    ) / (2.0 * R**2)
    return k_tt, k_tp, k_pp


def surface_M(u_fn, surf: SurfaceParams, R: float, theta, phi, h) -> SurfaceCoupleStressTensor:
    """Surface couple stress from FD curvature change:
    M = chi0 tr(kappa) I + 2 zeta0 kappa."""
    k_tt, k_tp, k_pp = surface_kappa(u_fn, R, theta, phi, h)
    tr = k_tt + k_pp
    return SurfaceCoupleStressTensor(
        M_tt=surf.chi0 * tr + 2.0 * surf.zeta0 * k_tt,
        M_pp=surf.chi0 * tr + 2.0 * surf.zeta0 * k_pp,
        M_tp=2.0 * surf.zeta0 * k_tp,
    )


def jump_rhs_3d(u_fn, surf: SurfaceParams, R: float, theta, phi, h, model: str):
    """RHS of the traction-jump conditions (inh minus mat) by FD.

    ``model`` is 'gm' (membrane terms only) or 'so' (adds the couple-
    stress terms). All T/M angular derivatives are nested central FD.
    """
    if model not in ("gm", "so"):
        raise ValueError(f"model must be 'gm' or 'so', got {model!r}")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    s, c = np.sin(theta), np.cos(theta)

    def T_at(th, ph):
        return surface_T(u_fn, surf, R, th, ph, h)

    T = T_at(theta, phi)
    Tp = T_at(theta, phi + h)
    Tm = T_at(theta, phi - h)
    Ttp = T_at(theta + h, phi)
    Ttm = T_at(theta - h, phi)

    def dp(f):  # d/dphi
        return (f(Tp) - f(Tm)) / (2.0 * h)

    def dt(f):  # d/dtheta
        return (f(Ttp) - f(Ttm)) / (2.0 * h)

    rr = (
        dp(lambda x: x.T_pr)
        + T.T_tr * c
        + (dt(lambda x: x.T_tr) - T.T_pp - T.T_tt) * s
    ) / (R * s)
    rt = (
        dp(lambda x: x.T_pt)
        + (dt(lambda x: x.T_tt) + T.T_tr) * s
        + (T.T_tt - T.T_pp) * c
    ) / (R * s)
    rp = (
        dp(lambda x: x.T_pp)
        + (dt(lambda x: x.T_tp) + T.T_pr) * s
        + (T.T_pt + T.T_tp) * c
    ) / (R * s)

    if model == "so":
        # V = div_s M (a tangent vector); the couple stress adds V/r to
        # the tangential jumps and div_s V to the normal jump
        def V_at(th, ph):
            ss, cc = np.sin(th), np.cos(th)
            M = surface_M(u_fn, surf, R, th, ph, h)
            Mp = surface_M(u_fn, surf, R, th, ph + h, h)
            Mm = surface_M(u_fn, surf, R, th, ph - h, h)
            Mtp = surface_M(u_fn, surf, R, th + h, ph, h)
            Mtm = surface_M(u_fn, surf, R, th - h, ph, h)
            v_t = (
                (Mp.M_tp - Mm.M_tp) / (2.0 * h)
                + (M.M_tt - M.M_pp) * cc
                + (Mtp.M_tt - Mtm.M_tt) / (2.0 * h) * ss
            ) / (R * ss)
            v_p = (
                (Mp.M_pp - Mm.M_pp) / (2.0 * h)
                + 2.0 * M.M_tp * cc
                + (Mtp.M_tp - Mtm.M_tp) / (2.0 * h) * ss
            ) / (R * ss)
            return v_t, v_p

        v_t, v_p = V_at(theta, phi)
        vtp_t, _ = V_at(theta + h, phi)
        vtm_t, _ = V_at(theta - h, phi)
        _, vp_p = V_at(theta, phi + h)
        _, vm_p = V_at(theta, phi - h)
        rr = rr + (
            (vp_p - vm_p) / (2.0 * h)
            + v_t * c
            + (vtp_t - vtm_t) / (2.0 * h) * s
        ) / (R * s)
        rt = rt + v_t / R
        rp = rp + v_p / R
    return rr, rt, rp


def jump_residual_3d(
    u_fn,
    traction_inh_fn,
    traction_mat_fn,
    surf: SurfaceParams,
    R: float,
    model: str,
    h: float = POLE_MARGIN,
    n_theta: int = 48,
    n_phi: int = 16,
    richardson: bool = True,
) -> JumpResidual:
    """Max relative residual of the 3D traction-jump conditions on a
    (theta, phi) grid excluding the poles.

    ``traction_*_fn(theta, phi) -> (s_rr, s_rt, s_rp)`` evaluate the bulk
    tractions on the corresponding side of r = R. The FD RHS is computed
    at h and h/2 and combined with one Richardson level (4 r_{h/2} -
    r_h)/3 by default.
    """
    # The grid stays inside the pole-excluded band. The truncation error
    # of the nested angular stencils is amplified by inverse powers of
    # sin(theta), so the default band keeps a further margin of 16 steps
    # from each pole; the identities are analytic in theta, so this does
    # not weaken the check.
    band = max(16.0 * POLE_MARGIN, POLE_MARGIN + 4.0 * h)
    theta = np.linspace(band, np.pi - band, n_theta)
    phi = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    tg, pg = np.meshgrid(theta, phi, indexing="ij")

    lhs = tuple(
        np.asarray(a) - np.asarray(b)
        for a, b in zip(traction_inh_fn(tg, pg), traction_mat_fn(tg, pg))
    )

    def rhs(step):
        return jump_rhs_3d(u_fn, surf, R, tg, pg, step, model)

    r1 = rhs(h)
    if richardson:
        r2 = rhs(h / 2.0)
        rhs_v = tuple((4.0 * b - a) / 3.0 for a, b in zip(r1, r2))
    else:
        rhs_v = r1

    t_mat = traction_mat_fn(tg, pg)
    scale = max(
        max(np.abs(np.asarray(x)).max() for x in t_mat),
        abs(surf.sigma0) / R,
        1e-300,
    )
    res = [np.abs(l - r).max() / scale for l, r in zip(lhs, rhs_v)]
    return JumpResidual(
        rr=float(res[0]), rt=float(res[1]), rp=float(res[2]),
        h=h, richardson=richardson,
    )


def jump_residual_2d(
    u_fn,
    traction_inh_fn,
    traction_mat_fn,
    surf: SurfaceParams,
    R: float,
    n: int = 256,
) -> JumpResidual:
    """Max relative residual of the 2D traction-jump conditions.

    ``u_fn(theta) -> (u_r, u_theta)`` on r = R; tractions likewise per
    side. Angular derivatives are spectral (the fields are trigonometric
    polynomials, so these are exact up to roundoff); the Richardson flag
    is reported False accordingly.
    """
    theta = np.arange(n) * 2.0 * np.pi / n
    k = np.fft.fftfreq(n, d=1.0 / n) * 1j

    def d(f, p=1):
        return np.real(np.fft.ifft(np.fft.fft(f) * k**p))

    ur, ut = u_fn(theta)
    sig0 = surf.sigma0
    l2m = surf.lambda0 + 2.0 * surf.mu0
    bend = 2.0 * surf.chi0 + surf.zeta0
    rhs_rr = (
        -sig0 / R
        + sig0 / R**2 * (d(ur, 2) - d(ut))
        - l2m / R**2 * (d(ut) + ur)
        - bend / R**4 * (d(ur, 4) - d(ut, 3))
    )
    rhs_rt = (
        sig0 / R**2 * (d(ur) - ut)
        + l2m / R**2 * (d(ut, 2) + d(ur))
        - bend / R**4 * (d(ur, 3) - d(ut, 2))
    )

    si = traction_inh_fn(theta)
    sm = traction_mat_fn(theta)
    scale = max(
        np.abs(sm[0]).max(), np.abs(sm[1]).max(), abs(sig0) / R, 1e-300
    )
    res_rr = np.abs(si[0] - sm[0] - rhs_rr).max() / scale
    res_rt = np.abs(si[1] - sm[1] - rhs_rt).max() / scale
    return JumpResidual(
        rr=float(res_rr), rt=float(res_rt), rp=0.0,
        h=2.0 * np.pi / n, richardson=False,
    )


def equilibrium_residual_2d(stress_fn, r, theta, h=1e-4) -> float:
    """Max relative FD-divergence residual of a 2D stress field.

    ``stress_fn(r, theta) -> (s_rr, s_tt, s_rt)``. Points must sit away
    from the interface by more than the FD stencil width.
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    hr = h * r

    def at(rr, tt):
        return [np.asarray(x) for x in stress_fn(rr, tt)]

    srr, stt, srt = at(r, theta)
    srr_rp, _, srt_rp = at(r + hr, theta)
    srr_rm, _, srt_rm = at(r - hr, theta)
    _, stt_tp, srt_tp = at(r, theta + h)
    _, stt_tm, srt_tm = at(r, theta - h)

    d_rr_r = (srr_rp - srr_rm) / (2.0 * hr)
    d_rt_r = (srt_rp - srt_rm) / (2.0 * hr)
    d_tt_t = (stt_tp - stt_tm) / (2.0 * h)
    d_rt_t = (srt_tp - srt_tm) / (2.0 * h)

    div_r = d_rr_r + d_rt_t / r + (srr - stt) / r
    div_t = d_rt_r + d_tt_t / r + 2.0 * srt / r
    scale = np.maximum(
        np.abs(srr) + np.abs(stt) + np.abs(srt), 1e-300
    ) / r
    return float(max(np.abs(div_r / scale).max(), np.abs(div_t / scale).max()))


def equilibrium_residual_3d(stress_fn, r, theta, phi, h=1e-4) -> float:
    """Max relative FD-divergence residual of a 3D spherical stress field.

    ``stress_fn(r, theta, phi) -> (s_rr, s_tt, s_pp, s_rt, s_rp, s_tp)``.
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    s, c = np.sin(theta), np.cos(theta)
    hr = h * r

    def at(rr, tt, pp):
        return [np.asarray(x) for x in stress_fn(rr, tt, pp)]

    srr, stt, spp, srt, srp, stp = at(r, theta, phi)

    def dr(i):
        return (at(r + hr, theta, phi)[i] - at(r - hr, theta, phi)[i]) / (2.0 * hr)

    def dt(i):
        return (at(r, theta + h, phi)[i] - at(r, theta - h, phi)[i]) / (2.0 * h)

    def dp(i):
        return (at(r, theta, phi + h)[i] - at(r, theta, phi - h)[i]) / (2.0 * h)

    div_r = dr(0) + dt(3) / r + dp(4) / (r * s) + (
        2.0 * srr - stt - spp + srt * c / s
    ) / r
    div_t = dr(3) + dt(1) / r + dp(5) / (r * s) + (
        3.0 * srt + (stt - spp) * c / s
    ) / r
    div_p = dr(4) + dt(5) / r + dp(2) / (r * s) + (
        3.0 * srp + 2.0 * stp * c / s
    ) / r
    scale = np.maximum(
        np.abs(srr) + np.abs(stt) + np.abs(spp)
        + np.abs(srt) + np.abs(srp) + np.abs(stp),
        1e-300,
    ) / r
    return float(
        max(
            np.abs(div_r / scale).max(),
            np.abs(div_t / scale).max(),
            np.abs(div_p / scale).max(),
        )
    )


# ---------------------------------------------------------------------------
# Linear-system oracles (own transcriptions; independent of the solver
# modules' closed forms and row assemblies).
# ---------------------------------------------------------------------------


def membrane_system(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
):
    """Shear-mode membrane interface system in the nondimensional
    unknowns x = (A1, A2 R^2, D3/R^5, D4/R^3): two displacement-continuity
    rows and two scaled traction rows with the surface terms f1, f2."""
    mu, nu = matrix.mu, matrix.nu
    nu_i = inhom.nu
    mr = inhom.mu / mu
    R = g.R
    D1 = sigma_d / (2.0 * mu)
    mu0, lam0, sig0 = surf.mu0, surf.lambda0, surf.sigma0

    ci_t = (7.0 - 4.0 * nu_i) / (1.0 - 2.0 * nu_i)
    ci_r = 6.0 * nu_i / (1.0 - 2.0 * nu_i)

    row1 = [1.0, -ci_t, 2.0, -2.0]
    row2 = [1.0, -ci_r, -3.0, -(5.0 - 4.0 * nu) / (1.0 - 2.0 * nu)]

    k1 = ((mu0 - sig0) - 3.0 * (lam0 + 2.0 * mu0)) / (6.0 * mu * R)
    k2 = (lam0 + mu0 + sig0) / (3.0 * mu * R)
    k3 = (lam0 + mu0 + sig0) / (mu * R)
    k4 = 2.0 * (lam0 + mu0 + 2.0 * sig0) / (3.0 * mu * R)
    # f1 = k1*u_t/R + k2*u_r/R, f2 = k3*u_t/R - k4*u_r/R at the interface
    f1 = np.array([k1 + k2, -k1 * ci_t - k2 * ci_r, 0.0, 0.0])
    f2 = np.array([k3 - k4, -k3 * ci_t + k4 * ci_r, 0.0, 0.0])

    row3 = np.array(
        [mr, -mr * (7.0 + 2.0 * nu_i) / (1.0 - 2.0 * nu_i), -8.0,
         -2.0 * (1.0 + nu) / (1.0 - 2.0 * nu)]
    ) - 6.0 * f1
    row4 = np.array(
        [mr, mr * 3.0 * nu_i / (1.0 - 2.0 * nu_i), 12.0,
         -2.0 * (nu - 5.0) / (1.0 - 2.0 * nu)]
    ) - 3.0 * f2
    M = np.array([row1, row2, row3, row4], dtype=float)
    b = np.array([D1, D1, D1, D1])
    return M, b


def shell_system(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
):
    """Shear-mode shell interface system (continuity rows plus the two
    traction rows with constants C31..C42), scaled to the nondimensional
    unknowns x = (A1, A2 R^2, D3/R^5, D4/R^3)."""
    mu = matrix.mu
    lam = mu * lame_ratio(matrix.nu)
    mu_i = inhom.mu
    li = lame_ratio(inhom.nu)
    lam_i = mu_i * li
    R = g.R
    D1 = sigma_d / (2.0 * mu)
    ds = derive_surface(surf, g)
    gamma = ds.gamma
    mu0, lam0, sig0 = surf.mu0, surf.lambda0, surf.sigma0

    row1 = [1.0, -3.0 * li, -3.0, -(3.0 * lam + 5.0 * mu) / mu]
    row2 = [1.0, -(5.0 * li + 7.0), 2.0, -2.0]

    C31 = -2.0 * mu_i + 2.0 * (lam0 + mu0 - sig0) / R - 6.0 * gamma
    C32 = (
        -3.0 * lam_i
        - 6.0 * (lam0 + mu0) * (3.0 * li + 7.0) / R
        - 6.0 * sig0 * (li + 7.0) / R
        + 6.0 * gamma * (li - 7.0)
    )
    C41 = -mu_i - (3.0 * mu0 + lam0 - sig0) / R + gamma
    C42 = (
        8.0 * lam_i
        + 7.0 * mu_i
        + mu0 * (19.0 * li + 35.0) / R
        + 3.0 * lam0 * (3.0 * li + 7.0) / R
        - sig0 * (li - 7.0) / R
        - gamma * (li - 7.0)
    )
    row3 = [C31 / mu, C32 / mu, -24.0, -(18.0 * lam + 20.0 * mu) / mu]
    row4 = [C41 / mu, C42 / mu, 8.0, (3.0 * lam + 2.0 * mu) / mu]
    M = np.array([row1, row2, row3, row4], dtype=float)
    b = np.array([D1, D1, -2.0 * D1, -D1])
    return M, b


def linear_solve_oracle(
    system: str,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
):
    """Numeric solve of the named interface system ('membrane' or
    'shell'); returns dimensional (A1, A2, D3, D4)."""
    if system == "membrane":
        M, b = membrane_system(matrix, inhom, surf, g, sigma_d)
    elif system == "shell":
        M, b = shell_system(matrix, inhom, surf, g, sigma_d)
    else:
        raise ValueError(f"system must be 'membrane' or 'shell', got {system!r}")
    x = np.linalg.solve(M, b)
    R = g.R
    return x[0], x[1] / R**2, x[2] * R**5, x[3] * R**3


def system_residual(
    system: str,
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
    sigma_d: float,
    coeffs,
) -> float:
    """Relative residual of candidate (A1, A2, D3, D4) in the raw
    nondimensionalized system rows."""
    if system == "membrane":
        M, b = membrane_system(matrix, inhom, surf, g, sigma_d)
    elif system == "shell":
        M, b = shell_system(matrix, inhom, surf, g, sigma_d)
    else:
        raise ValueError(f"system must be 'membrane' or 'shell', got {system!r}")
    A1, A2, D3, D4 = coeffs
    R = g.R
    x = np.array([A1, A2 * R**2, D3 / R**5, D4 / R**3])
    num = np.abs(M @ x - b)
    den = np.abs(M) @ np.abs(x) + np.abs(b)
    return float((num / np.maximum(den, 1e-300)).max())


def symmetric_mode_oracle(
    matrix: BulkMaterial,
    inhom: BulkMaterial,
    surf: SurfaceParams,
    g: Geometry,
):
    """Numeric solve of the 2-equation surface-tension mode for
    (A0, D0/R^3): continuity D0/R^3 = A0 and the scaled normal-traction
    row 2 D0/R^3 + [3 K3_I/(2 mu) + eta0/mu] A0 = sigma0/(mu R)."""
    mu = matrix.mu
    K3_i = derive_bulk(inhom).K3
    eta0 = derive_surface(surf, g).eta0
    M = np.array(
        [
            [1.0, -1.0],
            [3.0 * K3_i / (2.0 * mu) + eta0 / mu, 2.0],
        ]
    )
    b = np.array([0.0, surf.sigma0 / (mu * g.R)])
    A0, D0_scaled = np.linalg.solve(M, b)
    return A0, D0_scaled * g.R**3
