"""Spherical inhomogeneity with the complete shell interface: membrane
recovery, raw-system residuals, curvature/couple-stress behavior, jump
closed form."""

import numpy as np
import pytest
from helpers import (
    coeff_distance,
    coeff_scale,
    random_bulk,
    random_geometry,
    random_surface,
    wire_3d,
)

from surfelast import verify
from surfelast.materials import BulkMaterial, Geometry, SurfaceParams, cavity
from surfelast.sphere_gm import radial_profiles, solve_gm_shear
from surfelast.sphere_so import (
    couple_stress,
    curvature_change,
    jump_closed_form,
    residual_subtraction,
    solve_so_shear,
)
from surfelast.verify import jump_residual_3d, linear_solve_oracle, system_residual


def test_membrane_recovered_at_zero_bending():
    rng = np.random.default_rng(20)
    worst = 0.0
    for _ in range(100):
        m = random_bulk(rng)
        mi = random_bulk(rng, allow_cavity=True)
        g = random_geometry(rng)
        s = random_surface(rng, bending=False)
        sd = rng.uniform(0.1, 5.0)
        a = solve_so_shear(m, mi, s, g, sd)
        b = solve_gm_shear(m, mi, s, g, sd)
        worst = max(worst, coeff_distance(a, b, g.R) / coeff_scale(b, g.R))
    assert worst < 1e-10


def test_closed_form_satisfies_raw_system():
    rng = np.random.default_rng(21)
    worst = 0.0
    for _ in range(100):
        m = random_bulk(rng)
        mi = random_bulk(rng, allow_cavity=True)
        g = random_geometry(rng)
        s = random_surface(rng)
        sd = rng.uniform(0.1, 5.0)
        c = solve_so_shear(m, mi, s, g, sd)
        res = system_residual("shell", m, mi, s, g, sd, (c.A1, c.A2, c.D3, c.D4))
        worst = max(worst, res)
    assert worst < 1e-12


def test_closed_form_matches_oracle_solve():
    rng = np.random.default_rng(22)
    for _ in range(50):
        m = random_bulk(rng)
        mi = random_bulk(rng, allow_cavity=True)
        g = random_geometry(rng)
        s = random_surface(rng)
        sd = rng.uniform(0.1, 5.0)
        c = solve_so_shear(m, mi, s, g, sd)
        A1, A2, D3, D4 = linear_solve_oracle("shell", m, mi, s, g, sd)
        R = g.R
        scale = coeff_scale(c, R)
        err = max(
            abs(c.A1 - A1),
            abs(c.A2 - A2) * R**2,
            abs(c.D3 - D3) / R**5,
            abs(c.D4 - D4) / R**3,
        )
        assert err / scale < 1e-10


def test_shell_jump_residual():
    # Physically scaled cavity benchmark: residual well inside 1e-7.
    m = BulkMaterial(34.7, 0.3)
    g = Geometry(5.0)
    s = SurfaceParams(
        mu0=5.2321, lambda0=10.4641, sigma0=1.7,
        chi0=0.00028382 * 34.7 * g.R**3 / 3.0,
    )
    c = solve_so_shear(m, cavity(), s, g, 0.1)
    jr = jump_residual_3d(*wire_3d(c, m, cavity(), g), s, g.R, model="so")
    assert jr.max < 1e-7
    # Deliberately extreme bending (gamma ~ 0.08*mu): still verified, but
    # finite-difference truncation dominates at the 1e-5 level.
    m2 = BulkMaterial(10.0, 0.3)
    mi2 = BulkMaterial(3.0, 0.2)
    g2 = Geometry(2.0)
    s2 = SurfaceParams(mu0=0.8, lambda0=1.3, sigma0=0.4, chi0=0.6, zeta0=0.9)
    c2 = solve_so_shear(m2, mi2, s2, g2, 1.7)
    jr2 = jump_residual_3d(*wire_3d(c2, m2, mi2, g2), s2, g2.R, model="so")
    assert jr2.max < 1e-4


def test_curvature_vanishes_for_uniform_radial_displacement():
    theta = np.linspace(0.3, np.pi - 0.3, 15)
    zeros = {k: 0.0 * theta for k in ("r_t", "r_p", "t_t", "t_p", "p_t", "p_p")}
    zeros2 = {k: 0.0 * theta for k in ("r_tt", "r_pp", "r_tp")}
    k = curvature_change(1.0 + 0.0 * theta, 0.0 * theta, 0.0 * theta,
                         zeros, zeros2, 2.0, theta)
    assert np.abs(k.k_tt).max() == 0.0
    assert np.abs(k.k_pp).max() == 0.0
    assert np.abs(k.k_tp).max() == 0.0


def test_couple_stress_constitutive_map():
    theta = np.array([0.7])
    k = curvature_change(
        np.array([0.0]), np.array([0.0]), np.array([0.0]),
        {"r_t": np.array([0.0]), "r_p": np.array([0.0]),
         "t_t": np.array([2.0]), "t_p": np.array([0.0]),
         "p_t": np.array([0.0]), "p_p": np.array([1.0])},
        {"r_tt": np.array([0.0]), "r_pp": np.array([0.0]),
         "r_tp": np.array([0.0])},
        1.0, theta,
    )
    s = SurfaceParams(chi0=0.5, zeta0=0.25)
    M = couple_stress(k, s)
    tr = k.k_tt + k.k_pp
    assert M.M_tt == pytest.approx(0.5 * tr + 0.5 * k.k_tt)
    assert M.M_pp == pytest.approx(0.5 * tr + 0.5 * k.k_pp)
    assert M.M_tp == pytest.approx(0.5 * k.k_tp)


def test_jump_closed_form_matches_finite_differences():
    m = BulkMaterial(10.0, 0.3)
    mi = BulkMaterial(3.0, 0.2)
    g = Geometry(2.0)
    s = SurfaceParams(mu0=0.8, lambda0=1.3, sigma0=0.4, chi0=0.6, zeta0=0.9)
    c = solve_so_shear(m, mi, s, g, 1.7)
    u_fn, _, _ = wire_3d(c, m, mi, g)
    band = 16 * verify.POLE_MARGIN
    theta = np.linspace(band, np.pi - band, 33)
    phi = np.linspace(0.0, 2 * np.pi, 12, endpoint=False)
    tg, pg = np.meshgrid(theta, phi, indexing="ij")
    h = verify.POLE_MARGIN
    r1 = verify.jump_rhs_3d(u_fn, s, g.R, tg, pg, h, "so")
    r2 = verify.jump_rhs_3d(u_fn, s, g.R, tg, pg, h / 2, "so")
    rhs = tuple((4 * b - a) / 3 for a, b in zip(r1, r2))
    ur_R, ut_R, *_ = radial_profiles(c, m, mi, np.array(g.R), True)
    cf = jump_closed_form(float(ur_R), float(ut_R), s, g, tg, pg, ur0=-c.A0 * g.R)
    scale = max(np.abs(x).max() for x in cf)
    err = max(np.abs(a - b).max() for a, b in zip(cf, rhs))
    assert err / scale < 2e-5  # FD truncation floor for this bending level


def test_residual_subtraction_keeps_deviatoric_part():
    m = BulkMaterial(10.0, 0.3)
    g = Geometry(2.0)
    s = SurfaceParams(mu0=0.8, lambda0=1.3, sigma0=0.4, chi0=0.6)
    full = solve_so_shear(m, cavity(), s, g, 1.7)
    res = residual_subtraction(m, cavity(), s, g, 1.7)
    assert res.A0 == 0.0 and res.D0 == 0.0
    assert (res.A1, res.A2, res.D1, res.D3, res.D4) == (
        full.A1, full.A2, full.D1, full.D3, full.D4
    )
    assert full.A0 != 0.0  # tension does load the symmetric mode


def test_bending_changes_the_dipole():
    m = BulkMaterial(10.0, 0.3)
    g = Geometry(2.0)
    membrane = SurfaceParams(mu0=0.8, lambda0=1.3, sigma0=0.4)
    shell = SurfaceParams(mu0=0.8, lambda0=1.3, sigma0=0.4, chi0=0.6, zeta0=0.9)
    a = solve_so_shear(m, cavity(), membrane, g, 1.7)
    b = solve_so_shear(m, cavity(), shell, g, 1.7)
    assert abs(a.D4 - b.D4) > 1e-6 * abs(a.D4)
