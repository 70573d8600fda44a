"""Reference-plot data series: shapes, signs, limits."""

import numpy as np

from surfelast import figures


def _cols(fn, *args):
    header, rows = fn(*args)
    data = np.array(rows, dtype=float)
    return header, data


def test_fig2_shape_and_headers():
    header, data = _cols(figures.fig2_data)
    assert len(header) == 4
    assert data.shape == (91, 4)
    assert header[0].startswith("theta")
    assert all("sigma_tt_over_mu" in h for h in header[1:])


def test_fig2_tension_free_curve_changes_sign_vs_tension_curves():
    _, data = _cols(figures.fig2_data)
    assert data[0, 1] > 0.0  # no tension: tensile at the pole
    assert np.all(data[:, 2] < 0.0)  # with tension: compressive throughout
    assert np.all(data[:, 3] < 0.0)


def test_fig3_columns_are_axial_stress():
    header, data = _cols(figures.fig3_data)
    assert all("sigma_zz_over_mu" in h for h in header[1:])
    # tension curves decrease from pole to equator
    for j in (2, 3):
        assert data[0, j] == data[:, j].max()
        assert data[-1, j] == data[:, j].min()


def test_fig4_classical_column_is_size_independent():
    # The classical curve is computed once; rebuilding it at any radius
    # must give the same normalized profile.
    from surfelast.materials import BulkMaterial, Geometry, SurfaceParams, cavity
    from surfelast.sphere_gm import stress_3d
    from surfelast.sphere_so import solve_so_shear

    header, data = _cols(figures.fig4_data)
    theta = data[:, 0]
    for R in (1.0, 7.0):
        m = BulkMaterial(figures.ALUMINA_MU_GPA, figures.NU_MATRIX)
        g = Geometry(R)
        c = solve_so_shear(m, cavity(), SurfaceParams(), g, figures.ALUMINA_SIGMA_D)
        comps = stress_3d(
            c, m, cavity(), g, np.full_like(theta, R), theta,
            np.full_like(theta, np.pi / 2.0), side="matrix",
        )
        assert np.abs(comps[1] / figures.ALUMINA_SIGMA_D - data[:, 1]).max() < 1e-12


def test_fig4_surface_effect_fades_with_radius():
    _, data = _cols(figures.fig4_data)
    deviations = [np.abs(data[:, j] - data[:, 1]).max() for j in (2, 3, 4)]
    assert deviations[0] > deviations[1] > deviations[2]


def test_fig5_interface_curves_lie_above_classical():
    _, data = _cols(figures.fig5_data)
    c = data[:, 0]
    mask = c > 0.0
    assert np.all(data[mask, 2] > data[mask, 1])  # membrane > classical
    assert np.all(data[mask, 3] > data[mask, 1])  # shell > classical
    assert np.all(data[c == 0.0, 1:] == 1.0)


def test_table1_values():
    _, data = _cols(figures.table1_data)
    expected = np.array(
        [
            [0.1, 0.825, 0.838878, 0.838930],
            [0.3, 0.550, 0.580938, 0.581057],
            [0.5, 0.34375, 0.383570, 0.383725],
        ]
    )
    assert np.abs(data - expected).max() < 5e-7


def test_benchmark_surface_scaling():
    s1 = figures.benchmark_surface(1.0, 1.0, 0.0067435)
    s2 = figures.benchmark_surface(2.0, 3.0, 0.0067435)
    assert s2.mu0 == s1.mu0 * 6.0
    assert s2.sigma0 == s1.sigma0 * 6.0
    assert s2.chi0 == s1.chi0 * 2.0 * 27.0
