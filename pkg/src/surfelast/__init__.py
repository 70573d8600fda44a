"""Closed-form elastic fields around circular and spherical
inhomogeneities with membrane or shell interface elasticity and surface
tension, plus a Maxwell-scheme effective shear modulus estimate."""

from .errors import DegenerateParametersError
from .materials import (
    BulkMaterial,
    Geometry,
    SurfaceParams,
    cavity,
    derive_bulk,
    derive_surface,
)

__all__ = [
    "BulkMaterial",
    "Geometry",
    "SurfaceParams",
    "cavity",
    "derive_bulk",
    "derive_surface",
    "DegenerateParametersError",
]

__version__ = "0.1.0"
