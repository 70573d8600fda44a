"""Scenario files: a small key-value text format describing one
inhomogeneity problem.

Format (one ``key = value`` pair per line, ``#`` comments allowed)::

    schema_version = 1
    geometry = sphere            # sphere | disk
    R = 5 nm
    matrix.mu = 34.7 GPa
    matrix.nu = 0.3
    inhomogeneity = cavity       # or inhomogeneity.mu / inhomogeneity.nu
    model = so                   # classical | gm | so
    surface.mu0 = 5.2321 N/m
    surface.lambda0 = 10.4641 N/m
    surface.sigma0 = 1.7 N/m
    surface.chi0 = 0.41 GPa*nm^3
    surface.zeta0 = 0
    load = shear                 # shear | hydrostatic | general (disk only)
    load.sigma_d = 100 MPa
    grid.n_r = 8                 # optional field-grid spec (used by the
    grid.n_theta = 9             # CLI when field output is requested)
    grid.n_phi = 8
    grid.r_max = 3               # outer radius in units of R

Values are either bare numbers (already in a consistent unit system) or
carry a unit suffix. Internally everything is normalized to GPa for
stress, nm for length; in that system 1 N/m equals 1 GPa*nm, so
dimensional surface constants combine consistently with bulk moduli.
"""

from __future__ import annotations

from dataclasses import dataclass

from .materials import BulkMaterial, Geometry, SurfaceParams

SCHEMA_VERSION = 1

#: conversion factors to the internal (GPa, nm) system, keyed by suffix
UNIT_FACTORS = {
    "GPa": 1.0,
    "MPa": 1e-3,
    "kPa": 1e-6,
    "Pa": 1e-9,
    "N/m": 1.0,        # = GPa*nm
    "nm": 1.0,
    "um": 1e3,
    "GPa*nm": 1.0,
    "GPa*nm^3": 1.0,
    "N*nm": 1e9,       # = 1e-9 N*m = 1e9 GPa*nm^3
}

_GEOMETRIES = ("disk", "sphere")
_MODELS = ("classical", "gm", "so")
_LOADS = ("shear", "hydrostatic", "general")


class ScenarioError(ValueError):
    """Scenario file is invalid; carries the offending key and line."""

    def __init__(self, message: str, key: str | None = None, line: int | None = None):
        loc = ""
        if line is not None:
            loc += f"line {line}: "
        if key is not None:
            loc += f"key '{key}': "
        super().__init__(loc + message)
        self.key = key
        self.line = line


@dataclass(frozen=True)
class Scenario:
    geometry: str
    matrix: BulkMaterial
    inhomogeneity: BulkMaterial
    surface: SurfaceParams
    model: str
    g: Geometry
    load: str
    sigma_d: float = 0.0
    sigma_h: float = 0.0
    s11: float = 0.0
    s22: float = 0.0
    s12: float = 0.0
    n_r: int = 8
    n_theta: int = 9
    n_phi: int = 8
    r_max: float = 3.0


def _parse_number(raw: str, key: str, line: int) -> float:
    parts = raw.split()
    if len(parts) not in (1, 2):
        raise ScenarioError(f"expected 'number [unit]', got {raw!r}", key, line)
    try:
        value = float(parts[0])
    except ValueError:
        raise ScenarioError(f"not a number: {parts[0]!r}", key, line) from None
    if len(parts) == 2:
        unit = parts[1]
        if unit not in UNIT_FACTORS:
            known = ", ".join(sorted(UNIT_FACTORS))
            raise ScenarioError(f"unknown unit {unit!r} (known: {known})", key, line)
        value *= UNIT_FACTORS[unit]
    return value


def parse_scenario(text: str) -> Scenario:
    """Parse and validate scenario text; raises ScenarioError with the
    offending key and line on any problem."""
    pairs: dict[str, tuple[str, int]] = {}
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        stripped = rawline.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ScenarioError("expected 'key = value'", line=lineno)
        key, _, value = stripped.partition("=")
        key, value = key.strip(), value.strip()
        if key in pairs:
            raise ScenarioError("duplicate key", key, lineno)
        pairs[key] = (value, lineno)

    def take(key: str, default: str | None = None) -> tuple[str, int]:
        if key in pairs:
            return pairs.pop(key)
        if default is None:
            raise ScenarioError("required key missing", key)
        return default, 0

    def number(key: str, default: str | None = None) -> float:
        value, lineno = take(key, default)
        return _parse_number(value, key, lineno)

    version_raw, version_line = take("schema_version")
    if version_raw != str(SCHEMA_VERSION):
        raise ScenarioError(
            f"unsupported schema_version {version_raw!r} (expected {SCHEMA_VERSION})",
            "schema_version",
            version_line,
        )

    geometry, geo_line = take("geometry")
    if geometry not in _GEOMETRIES:
        raise ScenarioError(
            f"must be one of {_GEOMETRIES}, got {geometry!r}", "geometry", geo_line
        )

    R = number("R")
    try:
        g = Geometry(R)
    except ValueError as exc:
        raise ScenarioError(str(exc), "R") from None

    def bulk(prefix: str, nu_default: str | None = None) -> BulkMaterial:
        mu = number(prefix + ".mu")
        nu = number(prefix + ".nu", nu_default)
        try:
            return BulkMaterial(mu, nu)
        except ValueError as exc:
            raise ScenarioError(str(exc), prefix) from None

    matrix = bulk("matrix")
    if pairs.get("inhomogeneity", ("", 0))[0] == "cavity":
        pairs.pop("inhomogeneity")
        nu_i = number("inhomogeneity.nu", "0.3")
        try:
            inhom = BulkMaterial(0.0, nu_i)
        except ValueError as exc:
            raise ScenarioError(str(exc), "inhomogeneity.nu") from None
    else:
        inhom = bulk("inhomogeneity")

    model, model_line = take("model", "classical")
    if model not in _MODELS:
        raise ScenarioError(
            f"must be one of {_MODELS}, got {model!r}", "model", model_line
        )
    surface = SurfaceParams(
        mu0=number("surface.mu0", "0"),
        lambda0=number("surface.lambda0", "0"),
        sigma0=number("surface.sigma0", "0"),
        chi0=number("surface.chi0", "0"),
        zeta0=number("surface.zeta0", "0"),
    )
    if model == "classical" and not surface.is_classical:
        raise ScenarioError(
            "classical model requires all surface constants to be zero", "model",
            model_line,
        )
    if model == "gm" and not surface.is_membrane:
        raise ScenarioError(
            "gm model requires chi0 = zeta0 = 0", "model", model_line
        )

    load, load_line = take("load")
    if load not in _LOADS:
        raise ScenarioError(
            f"must be one of {_LOADS}, got {load!r}", "load", load_line
        )
    if load == "general" and geometry != "disk":
        raise ScenarioError(
            "general load is available for disk geometry only", "load", load_line
        )
    sigma_d = sigma_h = s11 = s22 = s12 = 0.0
    if load == "shear":
        sigma_d = number("load.sigma_d")
    elif load == "hydrostatic":
        sigma_h = number("load.sigma_h")
    else:
        s11 = number("load.s11", "0")
        s22 = number("load.s22", "0")
        s12 = number("load.s12", "0")

    def positive_int(key: str, default: str) -> int:
        value = number(key, default)
        if value != int(value) or value < 1:
            raise ScenarioError(f"expected a positive integer, got {value}", key)
        return int(value)

    n_r = positive_int("grid.n_r", "8")
    n_theta = positive_int("grid.n_theta", "9")
    n_phi = positive_int("grid.n_phi", "8")
    r_max = number("grid.r_max", "3")
    if r_max <= 1.0:
        raise ScenarioError("grid.r_max must exceed 1 (units of R)", "grid.r_max")

    if pairs:
        key, (_, lineno) = next(iter(pairs.items()))
        raise ScenarioError("unknown key", key, lineno)

    return Scenario(
        geometry=geometry,
        matrix=matrix,
        inhomogeneity=inhom,
        surface=surface,
        model=model,
        g=g,
        load=load,
        sigma_d=sigma_d,
        sigma_h=sigma_h,
        s11=s11,
        s22=s22,
        s12=s12,
        n_r=n_r,
        n_theta=n_theta,
        n_phi=n_phi,
        r_max=r_max,
    )


def load_scenario(path: str) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())
