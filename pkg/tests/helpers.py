"""Shared fixtures-in-spirit: closure builders wiring solver fields into
the verification oracles, and random parameter draws."""

from surfelast.disk2d import displacement_2d, stress_2d
from surfelast.materials import BulkMaterial, Geometry, SurfaceParams
from surfelast.sphere_gm import displacement_3d, stress_3d


def wire_3d(c, matrix, inhom, g):
    """(u_fn, traction_inh_fn, traction_mat_fn) on the sphere r = R."""

    def u_fn(theta, phi):
        return displacement_3d(
            c, matrix, inhom, g, g.R + 0.0 * theta, theta, phi, side="matrix"
        )

    def traction(side):
        def f(theta, phi):
            s = stress_3d(c, matrix, inhom, g, g.R + 0.0 * theta, theta, phi, side=side)
            return s[0], s[3], s[4]

        return f

    return u_fn, traction("inhomogeneity"), traction("matrix")


def wire_2d(c, load, matrix, inhom, surf, g):
    """(u_fn, traction_inh_fn, traction_mat_fn) on the circle r = R."""

    def u_fn(theta):
        return displacement_2d(
            c, load, matrix, inhom, surf, g, g.R + 0.0 * theta, theta, side="matrix"
        )

    def traction(side):
        def f(theta):
            s = stress_2d(
                c, load, matrix, inhom, surf, g, g.R + 0.0 * theta, theta, side=side
            )
            return s[0], s[2]

        return f

    return u_fn, traction("inhomogeneity"), traction("matrix")


def random_bulk(rng, allow_cavity=False):
    mu = rng.uniform(0.0 if allow_cavity else 0.5, 50.0)
    return BulkMaterial(mu, rng.uniform(-0.4, 0.45))


def random_surface(rng, bending=True):
    return SurfaceParams(
        mu0=rng.uniform(0.0, 2.0),
        lambda0=rng.uniform(0.0, 2.0),
        sigma0=rng.uniform(0.0, 1.0),
        chi0=rng.uniform(0.0, 1.0) if bending else 0.0,
        zeta0=rng.uniform(0.0, 1.0) if bending else 0.0,
    )


def random_geometry(rng):
    return Geometry(rng.uniform(0.5, 10.0))


def coeff_scale(c, R):
    """Common magnitude of a 3D shear coefficient set, power-normalized."""
    return max(
        abs(c.D1), abs(c.A1), abs(c.A2) * R**2, abs(c.D3) / R**5, abs(c.D4) / R**3
    )


def coeff_distance(a, b, R):
    """Power-normalized max difference between two coefficient sets."""
    return max(
        abs(a.A1 - b.A1),
        abs(a.A2 - b.A2) * R**2,
        abs(a.D3 - b.D3) / R**5,
        abs(a.D4 - b.D4) / R**3,
    )
