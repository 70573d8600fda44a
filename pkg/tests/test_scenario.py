"""Scenario text format: parsing, units, validation diagnostics."""

import pytest

from surfelast.scenario import ScenarioError, parse_scenario

BASE = """
schema_version = 1
geometry = sphere
R = 5 nm
matrix.mu = 34.7 GPa
matrix.nu = 0.3
inhomogeneity = cavity
model = gm
surface.mu0 = 5.2321 N/m
surface.lambda0 = 10.4641 N/m
surface.sigma0 = 1.7 N/m
load = shear
load.sigma_d = 100 MPa
"""


def test_parse_base_scenario():
    sc = parse_scenario(BASE)
    assert sc.geometry == "sphere"
    assert sc.g.R == 5.0
    assert sc.matrix.mu == 34.7
    assert sc.inhomogeneity.mu == 0.0
    assert sc.surface.mu0 == pytest.approx(5.2321)  # N/m == GPa*nm
    assert sc.sigma_d == pytest.approx(0.1)  # 100 MPa -> GPa
    assert sc.model == "gm"
    # grid defaults
    assert (sc.n_r, sc.n_theta, sc.n_phi, sc.r_max) == (8, 9, 8, 3.0)


def test_unit_conversions():
    sc = parse_scenario(
        BASE.replace("R = 5 nm", "R = 0.005 um").replace(
            "load.sigma_d = 100 MPa", "load.sigma_d = 1e8 Pa"
        )
    )
    assert sc.g.R == pytest.approx(5.0)
    assert sc.sigma_d == pytest.approx(0.1)


def test_bending_units():
    text = BASE.replace("model = gm", "model = so") + "surface.chi0 = 1e-9 N*nm\n"
    sc = parse_scenario(text)
    assert sc.surface.chi0 == pytest.approx(1.0)  # 1e-9 N*nm = 1 GPa*nm^3


def test_comments_and_blank_lines():
    sc = parse_scenario("# header\n\n" + BASE + "\n# trailing\n")
    assert sc.load == "shear"


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda t: t.replace("schema_version = 1", "schema_version = 2"), "schema_version"),
        (lambda t: t.replace("geometry = sphere", "geometry = torus"), "geometry"),
        (lambda t: t.replace("matrix.nu = 0.3", "matrix.nu = 0.6"), "matrix"),
        (lambda t: t.replace("R = 5 nm", "R = -5 nm"), "R"),
        (lambda t: t.replace("load = shear", "load = twist"), "load"),
        (lambda t: t.replace("100 MPa", "100 furlongs"), "unknown unit"),
        (lambda t: t + "extra.key = 1\n", "unknown key"),
        (lambda t: t + "R = 5 nm\n", "duplicate"),
        (lambda t: t.replace("load.sigma_d = 100 MPa", ""), "required key missing"),
        (lambda t: t.replace("model = gm", "model = classical"), "surface constants"),
        (lambda t: t + "surface.chi0 = 1 GPa*nm^3\n", "chi0"),
        (lambda t: t.replace("load = shear", "load = general"), "disk"),
        (lambda t: t + "grid.n_r = 2.5\n", "positive integer"),
        (lambda t: t + "grid.r_max = 0.5\n", "r_max"),
    ],
)
def test_validation_errors_name_the_problem(mutate, fragment):
    with pytest.raises(ScenarioError) as exc:
        parse_scenario(mutate(BASE))
    assert fragment.lower() in str(exc.value).lower()


def test_error_carries_line_number():
    with pytest.raises(ScenarioError) as exc:
        parse_scenario(BASE + "not a pair\n")
    assert exc.value.line is not None


def test_general_load_on_disk():
    text = (
        BASE.replace("geometry = sphere", "geometry = disk")
        .replace("load = shear", "load = general")
        .replace("load.sigma_d = 100 MPa", "load.s11 = 1 GPa\nload.s12 = 0.5 GPa")
    )
    sc = parse_scenario(text)
    assert (sc.s11, sc.s22, sc.s12) == (1.0, 0.0, 0.5)


def test_explicit_inhomogeneity_phase():
    text = BASE.replace(
        "inhomogeneity = cavity", "inhomogeneity.mu = 3 GPa\ninhomogeneity.nu = 0.2"
    )
    sc = parse_scenario(text)
    assert sc.inhomogeneity.mu == 3.0
    assert sc.inhomogeneity.nu == 0.2
