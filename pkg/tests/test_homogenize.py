"""Maxwell-scheme effective shear modulus."""

import numpy as np
import pytest

from surfelast.homogenize import (
    d4_equivalent,
    effective_shear,
    maxwell_mu_ef,
    mu_eq_from_d4,
    mu_star,
)
from surfelast.materials import BulkMaterial, Geometry, SurfaceParams, cavity


def test_mu_star_known_value():
    # nu = 0.2: K = 2mu(1+nu)/(3(1-2nu)) = (4/3)mu; mu* = mu(12+8)/(6(4/3+2)) = mu
    m = BulkMaterial(5.0, 0.2)
    assert mu_star(m) == pytest.approx(5.0, rel=1e-14)


def test_dipole_inversion_round_trip():
    rng = np.random.default_rng(30)
    m = BulkMaterial(7.0, 0.3)
    for _ in range(50):
        ratio = rng.uniform(0.0, 5.0)
        t = d4_equivalent(m, ratio, sigma_d=1.0, R=1.0)
        assert mu_eq_from_d4(m, t) == pytest.approx(ratio, rel=1e-10, abs=1e-12)


def test_classical_cavity_closed_form():
    # c = 0.1 classical cavity at nu = 0.3 gives mu_ef/mu = 0.825 exactly
    m = BulkMaterial(1.0, 0.3)
    est = effective_shear(m, cavity(), SurfaceParams(), Geometry(1.0), 0.1)
    assert est.mu_eq_ratio == pytest.approx(0.0, abs=1e-14)
    assert est.mu_ef_ratio == pytest.approx(0.825, abs=5e-15)


def test_homogeneous_matrix_is_fixed_point():
    m = BulkMaterial(4.0, 0.25)
    est = effective_shear(m, m, SurfaceParams(), Geometry(2.0), 0.4)
    assert est.mu_eq_ratio == pytest.approx(1.0, abs=1e-13)
    assert est.mu_ef_ratio == pytest.approx(1.0, abs=1e-13)


def test_zero_fraction_is_matrix():
    m = BulkMaterial(4.0, 0.25)
    est = effective_shear(m, cavity(), SurfaceParams(), Geometry(2.0), 0.0)
    assert est.mu_ef_ratio == 1.0


def test_fraction_validation():
    m = BulkMaterial(4.0, 0.25)
    with pytest.raises(ValueError):
        effective_shear(m, cavity(), SurfaceParams(), Geometry(2.0), 1.0)
    with pytest.raises(ValueError):
        effective_shear(m, cavity(), SurfaceParams(), Geometry(2.0), -0.1)


def test_maxwell_monotone_in_mu_eq():
    m = BulkMaterial(4.0, 0.25)
    vals = [maxwell_mu_ef(m, r, 0.3) for r in (0.0, 0.5, 1.0, 2.0)]
    assert vals == sorted(vals)
    assert vals[2] == pytest.approx(1.0, rel=1e-14)


def test_interface_stiffens_the_composite():
    m = BulkMaterial(34.7, 0.3)
    g = Geometry(5.0)
    surf = SurfaceParams(mu0=0.030156 * m.mu * g.R, lambda0=0.060312 * m.mu * g.R)
    classical = effective_shear(m, cavity(), SurfaceParams(), g, 0.3).mu_ef_ratio
    membrane = effective_shear(m, cavity(), surf, g, 0.3).mu_ef_ratio
    assert membrane > classical
