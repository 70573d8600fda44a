"""Bulk and interface material parameters and their derived constants.

All solver modules pull their symbols from here, so the defining formulas
live in exactly one place:

    kappa  = 3 - 4*nu                     (Kolosov constant)
    K2     = 2*mu / (kappa - 1)           (2D bulk modulus)
    K3     = (2/3)*mu*(1 + nu)/(1 - 2*nu) (3D bulk modulus)
    lam    = K3 - 2*mu/3                  (Lame first parameter)

    eta    = (2*mu0 + lambda0) / (4*R)
    eta1   = eta + gamma + sigma0/(4*R)
    eta2   = eta - gamma - sigma0/(4*R)
    eta0   = (2*mu0 + 2*lambda0 + sigma0) / R
    gamma  = (3*chi0 + 5*zeta0) / R**3    (spherical bending stiffness)

Everything is a frozen dataclass; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BulkMaterial:
    """Isotropic phase: shear modulus ``mu`` and Poisson ratio ``nu``.

    ``mu = 0`` models a cavity; ``nu = 0.5`` is rejected because every
    derived constant divides by ``1 - 2*nu``.
    """

    mu: float
    nu: float

    def __post_init__(self):
        if not self.mu >= 0.0:
            raise ValueError(f"shear modulus must be >= 0, got mu={self.mu}")
        if not -1.0 < self.nu < 0.5:
            raise ValueError(
                f"Poisson ratio must lie in (-1, 0.5), got nu={self.nu}"
            )


def cavity(nu: float = 0.3) -> BulkMaterial:
    """A void phase. ``nu`` is physically inert (mu = 0 kills every term it
    multiplies) but must stay away from 0.5; the solvers only ever use the
    regular ratio lambda_I/mu_I = 2*nu/(1 - 2*nu)."""
    return BulkMaterial(0.0, nu)


@dataclass(frozen=True)
class DerivedBulk:
    kappa: float
    K2: float
    K3: float
    lam: float


def derive_bulk(m: BulkMaterial) -> DerivedBulk:
    kappa = 3.0 - 4.0 * m.nu
    K2 = 2.0 * m.mu / (kappa - 1.0)
    K3 = (2.0 / 3.0) * m.mu * (1.0 + m.nu) / (1.0 - 2.0 * m.nu)
    return DerivedBulk(kappa=kappa, K2=K2, K3=K3, lam=K3 - 2.0 * m.mu / 3.0)


def lame_ratio(nu: float) -> float:
    """lambda/mu for an isotropic phase, written via nu only so that a
    cavity (mu = 0) never produces a 0/0."""
    return 2.0 * nu / (1.0 - 2.0 * nu)


@dataclass(frozen=True)
class SurfaceParams:
    """Interface constants: surface Lame moduli ``mu0``/``lambda0`` and
    tension ``sigma0`` (force/length), bending stiffnesses ``chi0``/``zeta0``
    (force*length). ``chi0 = zeta0 = 0`` is the membrane (Gurtin-Murdoch)
    model; all-zero is a classical perfect bond."""

    mu0: float = 0.0
    lambda0: float = 0.0
    sigma0: float = 0.0
    chi0: float = 0.0
    zeta0: float = 0.0

    @property
    def is_membrane(self) -> bool:
        return self.chi0 == 0.0 and self.zeta0 == 0.0

    @property
    def is_classical(self) -> bool:
        return (
            self.mu0 == 0.0
            and self.lambda0 == 0.0
            and self.sigma0 == 0.0
            and self.is_membrane
        )


@dataclass(frozen=True)
class Geometry:
    """Inhomogeneity radius."""

    R: float

    def __post_init__(self):
        if not self.R > 0.0:
            raise ValueError(f"radius must be > 0, got R={self.R}")


@dataclass(frozen=True)
class DerivedSurface:
    eta: float
    eta1: float
    eta2: float
    eta0: float
    gamma: float


def derive_surface(s: SurfaceParams, g: Geometry) -> DerivedSurface:
    R = g.R
    eta = (2.0 * s.mu0 + s.lambda0) / (4.0 * R)
    gamma = (3.0 * s.chi0 + 5.0 * s.zeta0) / R**3
    shift = gamma + s.sigma0 / (4.0 * R)
    eta0 = (2.0 * s.mu0 + 2.0 * s.lambda0 + s.sigma0) / R
    return DerivedSurface(
        eta=eta, eta1=eta + shift, eta2=eta - shift, eta0=eta0, gamma=gamma
    )
