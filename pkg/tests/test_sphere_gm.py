"""Spherical inhomogeneity with a membrane interface: symmetric mode,
shear-mode system, limits, field representations."""

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

from surfelast.materials import BulkMaterial, Geometry, SurfaceParams, cavity
from surfelast.sphere_gm import (
    displacement_3d,
    displacement_from_partials,
    solve_gm_shear,
    solve_hydro_3d,
    solve_shear_numeric,
    spherical_to_cartesian_stress,
    stress_3d,
    symmetric_mode,
)
from surfelast.verify import jump_residual_3d, symmetric_mode_oracle


def test_symmetric_mode_matches_independent_oracle():
    rng = np.random.default_rng(10)
    for _ in range(50):
        m = random_bulk(rng)
        mi = random_bulk(rng, allow_cavity=True)
        g = random_geometry(rng)
        s = random_surface(rng, bending=False)
        a, d = symmetric_mode(m, mi, s, g)
        ao, do = symmetric_mode_oracle(m, mi, s, g)
        assert a == pytest.approx(ao, rel=1e-12, abs=1e-15)
        assert d == pytest.approx(do, rel=1e-12, abs=1e-15)


def test_symmetric_mode_vanishes_without_tension():
    m = BulkMaterial(10.0, 0.3)
    mi = BulkMaterial(3.0, 0.2)
    s = SurfaceParams(mu0=0.8, lambda0=1.3)  # sigma0 = 0
    a, d = symmetric_mode(m, mi, s, Geometry(2.0))
    assert a == 0.0 and d == 0.0


def test_closed_form_matches_numeric_solve():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(100):
        m = random_bulk(rng)
        mi = random_bulk(rng, allow_cavity=True)
        g = random_geometry(rng)
        s = random_surface(rng, bending=False)
        sd = rng.uniform(0.1, 5.0)
        a = solve_gm_shear(m, mi, s, g, sd)
        b = solve_shear_numeric(m, mi, s, g, sd)
        worst = max(worst, coeff_distance(a, b, g.R) / coeff_scale(b, g.R))
    assert worst < 1e-10


def test_homogeneous_limit_is_uniform_far_field():
    m = BulkMaterial(5.0, 0.3)
    g = Geometry(2.0)
    c = solve_gm_shear(m, m, SurfaceParams(), g, 1.3)
    assert c.A1 == pytest.approx(c.D1, rel=1e-12)
    scale = abs(c.D1)
    assert abs(c.A2) * g.R**2 < 1e-12 * scale
    assert abs(c.D3) / g.R**5 < 1e-12 * scale
    assert abs(c.D4) / g.R**3 < 1e-12 * scale
    assert c.A0 == 0.0 and c.D0 == 0.0


def test_membrane_jump_residual():
    m = BulkMaterial(10.0, 0.3)
    mi = BulkMaterial(3.0, 0.2)
    g = Geometry(2.0)
    s = SurfaceParams(mu0=0.8, lambda0=1.3, sigma0=0.4)
    c = solve_gm_shear(m, mi, s, g, 1.7)
    jr = jump_residual_3d(*wire_3d(c, m, mi, g), s, g.R, model="gm")
    assert jr.max < 1e-7


def test_hydrostatic_homogeneous_identities():
    m = BulkMaterial(9.0, 0.31)
    h = solve_hydro_3d(m, m, SurfaceParams(), Geometry(2.5), 3.7)
    assert h.F1 == pytest.approx(h.F2, rel=1e-14)
    assert h.F3 == 0.0


def test_hydrostatic_cavity_with_tension():
    # Tension alone (no load) must pull the cavity surface inward.
    m = BulkMaterial(30.0, 0.3)
    g = Geometry(4.0)
    s = SurfaceParams(sigma0=1.5)
    h = solve_hydro_3d(m, cavity(), s, g, 0.0)
    assert h.F2 == 0.0
    assert h.F1 < 0.0  # u_r(R) = F1 R < 0
    # matrix displacement decays as 1/r^2 with the same interface value
    assert h.F3 / g.R**2 == pytest.approx(h.F1 * g.R, rel=1e-12)


def test_component_forms_equal_partial_solution_assembly():
    rng = np.random.default_rng(12)
    m = BulkMaterial(10.0, 0.3)
    mi = BulkMaterial(3.0, 0.2)
    g = Geometry(2.0)
    s = SurfaceParams(mu0=0.8, lambda0=1.3, sigma0=0.4)
    c = solve_gm_shear(m, mi, s, g, 1.7)
    theta = rng.uniform(0.1, np.pi - 0.1, 200)
    phi = rng.uniform(0.0, 2 * np.pi, 200)
    for side, r in (
        ("inhomogeneity", rng.uniform(0.05, 1.0, 200) * g.R),
        ("matrix", rng.uniform(1.0, 8.0, 200) * g.R),
    ):
        ua = displacement_3d(c, m, mi, g, r, theta, phi, side=side)
        ub = displacement_from_partials(c, m, mi, r, theta, phi, side=side)
        scale = max(np.abs(x).max() for x in ua)
        for x, y in zip(ua, ub):
            assert np.abs(x - y).max() < 1e-12 * scale


def test_cartesian_rotation_preserves_invariants():
    rng = np.random.default_rng(13)
    comps = tuple(rng.normal(size=40) for _ in range(6))
    theta = rng.uniform(0.1, np.pi - 0.1, 40)
    phi = rng.uniform(0.0, 2 * np.pi, 40)
    cart = spherical_to_cartesian_stress(comps, theta, phi)
    tr_s = comps[0] + comps[1] + comps[2]
    tr_c = cart[0] + cart[1] + cart[2]
    assert np.abs(tr_s - tr_c).max() < 1e-12
    frob_s = (
        comps[0] ** 2 + comps[1] ** 2 + comps[2] ** 2
        + 2 * (comps[3] ** 2 + comps[4] ** 2 + comps[5] ** 2)
    )
    frob_c = (
        cart[0] ** 2 + cart[1] ** 2 + cart[2] ** 2
        + 2 * (cart[3] ** 2 + cart[4] ** 2 + cart[5] ** 2)
    )
    assert np.abs(frob_s - frob_c).max() < 1e-10 * np.abs(frob_s).max()


def test_far_field_decay_to_uniform_shear():
    m = BulkMaterial(10.0, 0.3)
    mi = cavity()
    g = Geometry(2.0)
    s = SurfaceParams(mu0=0.8, lambda0=1.3, sigma0=0.4)
    sd = 1.7
    c = solve_gm_shear(m, mi, s, g, sd)
    theta = np.linspace(0.2, np.pi - 0.2, 20)
    phi = np.linspace(0.0, 2 * np.pi, 20, endpoint=False)
    r = 100.0 * g.R + 0.0 * theta
    u = displacement_3d(c, m, mi, g, r, theta, phi, side="matrix")
    d1 = sd / (2.0 * m.mu)
    s_, co = np.sin(theta), np.cos(theta)
    u_inf = (
        d1 * r * s_**2 * np.cos(2 * phi),
        d1 * r * s_ * co * np.cos(2 * phi),
        -d1 * r * s_ * np.sin(2 * phi),
    )
    scale = max(np.abs(x).max() for x in u_inf)
    for x, y in zip(u, u_inf):
        assert np.abs(x - y).max() < 1e-3 * scale
