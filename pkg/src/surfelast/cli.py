"""Command-line front end: scenario files in; coefficient tables, field
grids, figure data, and verification reports out.

Commands::

    surfelast solve <file> [--out PATH] [--fields PATH]
    surfelast figure <id> [--out PATH]
    surfelast table1 [--out PATH]
    surfelast verify [<file>] [--builtin] [--out PATH] [--corrupt]

Exit codes: 0 success, 1 validation error, 2 solver degeneracy,
3 verification failure.

All numeric output uses 17 significant digits, '.' decimal separator and
'\\n' line endings so that identical inputs give byte-identical files;
files are written atomically (temp file + rename). ``verify`` prints a
machine-readable JSON report to stdout and a human summary to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import replace

import numpy as np

from . import figures
from .disk2d import (
    FarField2D,
    displacement_2d,
    solve_general_2d,
    solve_hydro_2d,
    stress_2d,
)
from .errors import DegenerateParametersError
from .materials import derive_bulk, derive_surface
from .scenario import Scenario, ScenarioError, load_scenario
from .sphere_gm import displacement_3d, solve_hydro_3d, stress_3d
from .sphere_so import solve_so_shear
from .verify import (
    equilibrium_residual_2d,
    equilibrium_residual_3d,
    jump_residual_2d,
    jump_residual_3d,
    system_residual,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_DEGENERATE = 2
EXIT_VERIFY = 3


def format_value(x) -> str:
    """Fixed, locale-independent float formatting (17 significant digits)."""
    if isinstance(x, (float, np.floating)):
        return "%.17g" % x
    return str(x)


def csv_text(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(format_value(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` via a temp file in the same directory and
    an atomic rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-surfelast-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_atomic(out, text)


# ---------------------------------------------------------------------------
# solve


def _solve_report(sc: Scenario):
    """(header, rows, solution) for the scenario's coefficient table."""
    header = ["coefficient", "value", "unit"]
    if sc.geometry == "sphere":
        if sc.load == "hydrostatic":
            hc = solve_hydro_3d(sc.matrix, sc.inhomogeneity, sc.surface, sc.g, sc.sigma_h)
            rows = [
                ("F1", hc.F1, "1"),
                ("F2", hc.F2, "1"),
                ("F3", hc.F3, "nm^3"),
            ]
            return header, rows, hc
        c = solve_so_shear(sc.matrix, sc.inhomogeneity, sc.surface, sc.g, sc.sigma_d)
        rows = [
            ("A0", c.A0, "1"),
            ("A1", c.A1, "1"),
            ("A2", c.A2, "nm^-2"),
            ("D0", c.D0, "nm^3"),
            ("D1", c.D1, "1"),
            ("D3", c.D3, "nm^5"),
            ("D4", c.D4, "nm^3"),
        ]
        return header, rows, c
    # disk
    if sc.load == "hydrostatic":
        hc = solve_hydro_2d(sc.matrix, sc.inhomogeneity, sc.surface, sc.g, sc.sigma_h)
        rows = [
            ("F1", hc.F1, "1"),
            ("F2", hc.F2, "1"),
            ("F3", hc.F3, "nm^2"),
        ]
        return header, rows, hc
    load = _load_2d(sc)
    c = solve_general_2d(sc.matrix, sc.inhomogeneity, sc.surface, sc.g, load)
    rows = [
        ("reA1", c.reA1, "nm"),
        ("Am1_re", c.Am1.real, "nm"),
        ("Am1_im", c.Am1.imag, "nm"),
        ("A3_re", c.A3.real, "nm"),
        ("A3_im", c.A3.imag, "nm"),
    ]
    return header, rows, c


def _load_2d(sc: Scenario) -> FarField2D:
    if sc.load == "shear":
        return FarField2D(s11=sc.sigma_d, s22=-sc.sigma_d, s12=0.0)
    return FarField2D(s11=sc.s11, s22=sc.s22, s12=sc.s12)


def _radii(sc: Scenario):
    R = sc.g.R
    inner = np.linspace(R / sc.n_r, R, sc.n_r, endpoint=False)
    outer = np.linspace(R, sc.r_max * R, sc.n_r + 1)
    return np.concatenate([inner, outer])


def _hydro_radial_fields(sc: Scenario, hc):
    """(u_r, s_rr, s_tt[, s_pp]) closed forms of the hydrostatic mode."""
    r = _radii(sc)
    inside = r < sc.g.R
    dbi = derive_bulk(sc.inhomogeneity)
    db = derive_bulk(sc.matrix)
    mu, mu_i = sc.matrix.mu, sc.inhomogeneity.mu
    if hc.d == 3:
        u = np.where(inside, hc.F1 * r, hc.F2 * r + hc.F3 / r**2)
        srr = np.where(
            inside,
            3.0 * dbi.K3 * hc.F1,
            3.0 * db.K3 * hc.F2 - 4.0 * mu * hc.F3 / r**3,
        )
        stt = np.where(
            inside,
            3.0 * dbi.K3 * hc.F1,
            3.0 * db.K3 * hc.F2 + 2.0 * mu * hc.F3 / r**3,
        )
        header = ["r (nm)", "u_r (nm)", "sigma_rr (GPa)", "sigma_tt (GPa)",
                  "sigma_pp (GPa)"]
        return header, list(zip(r, u, srr, stt, stt))
    u = np.where(inside, hc.F1 * r, hc.F2 * r + hc.F3 / r)
    srr = np.where(
        inside,
        2.0 * dbi.K2 * hc.F1,
        2.0 * db.K2 * hc.F2 - 2.0 * mu * hc.F3 / r**2,
    )
    stt = np.where(
        inside,
        2.0 * dbi.K2 * hc.F1,
        2.0 * db.K2 * hc.F2 + 2.0 * mu * hc.F3 / r**2,
    )
    header = ["r (nm)", "u_r (nm)", "sigma_rr (GPa)", "sigma_tt (GPa)"]
    return header, list(zip(r, u, srr, stt))


def _field_grid(sc: Scenario, solution):
    """(header, rows) of displacement/stress samples on the scenario grid."""
    if sc.load == "hydrostatic":
        return _hydro_radial_fields(sc, solution)
    r1 = _radii(sc)
    if sc.geometry == "sphere":
        theta1 = np.linspace(0.0, np.pi, sc.n_theta)
        phi1 = np.linspace(0.0, 2.0 * np.pi, sc.n_phi, endpoint=False)
        r, theta, phi = map(np.ravel, np.meshgrid(r1, theta1, phi1, indexing="ij"))
        u = displacement_3d(solution, sc.matrix, sc.inhomogeneity, sc.g, r, theta, phi)
        s = stress_3d(solution, sc.matrix, sc.inhomogeneity, sc.g, r, theta, phi)
        header = [
            "r (nm)", "theta (rad)", "phi (rad)",
            "u_r (nm)", "u_t (nm)", "u_p (nm)",
            "sigma_rr (GPa)", "sigma_tt (GPa)", "sigma_pp (GPa)",
            "sigma_rt (GPa)", "sigma_rp (GPa)", "sigma_tp (GPa)",
        ]
        return header, list(zip(r, theta, phi, *u, *s))
    theta1 = np.linspace(0.0, 2.0 * np.pi, sc.n_theta, endpoint=False)
    r, theta = map(np.ravel, np.meshgrid(r1, theta1, indexing="ij"))
    load = _load_2d(sc)
    u = displacement_2d(solution, load, sc.matrix, sc.inhomogeneity, sc.surface,
                        sc.g, r, theta)
    s = stress_2d(solution, load, sc.matrix, sc.inhomogeneity, sc.surface,
                  sc.g, r, theta)
    header = [
        "r (nm)", "theta (rad)", "u_r (nm)", "u_t (nm)",
        "sigma_rr (GPa)", "sigma_tt (GPa)", "sigma_rt (GPa)",
    ]
    return header, list(zip(r, theta, *u, *s))


def cmd_solve(args) -> int:
    sc = load_scenario(args.file)
    header, rows, solution = _solve_report(sc)
    emit(csv_text(header, rows), args.out)
    if args.fields is not None:
        fheader, frows = _field_grid(sc, solution)
        write_atomic(args.fields, csv_text(fheader, frows))
    return EXIT_OK


# ---------------------------------------------------------------------------
# figure / table1


def cmd_figure(args) -> int:
    if args.id not in figures.FIGURES:
        known = ", ".join(sorted(figures.FIGURES))
        raise ScenarioError(f"unknown figure id {args.id!r} (known: {known})")
    header, rows = figures.FIGURES[args.id]()
    emit(csv_text(header, rows), args.out)
    return EXIT_OK


def cmd_table1(args) -> int:
    header, rows = figures.table1_data()
    emit(csv_text(header, rows), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

JUMP_BOUND_INTERFACE = 1e-7
JUMP_BOUND_CLASSICAL = 1e-12
SYSTEM_BOUND = 1e-10
EQUILIBRIUM_BOUND = 1e-6
EQUILIBRIUM_POINTS = 1000


def _check(name, residual, bound):
    return {
        "name": name,
        "residual": float(residual),
        "bound": float(bound),
        "pass": bool(residual < bound),
    }


def _corrupted(solution, factor=1.001):
    """Perturb the dominant interface coefficient so residual checks fail."""
    if hasattr(solution, "D4"):
        return replace(solution, D4=solution.D4 * factor)
    if hasattr(solution, "Am1"):
        return replace(solution, Am1=solution.Am1 * factor)
    return replace(solution, F3=solution.F3 * factor)


def _verify_sphere_shear(sc: Scenario, corrupt: bool):
    c = solve_so_shear(sc.matrix, sc.inhomogeneity, sc.surface, sc.g, sc.sigma_d)
    if corrupt:
        c = _corrupted(c)
    checks = []

    m, mi, surf, g = sc.matrix, sc.inhomogeneity, sc.surface, sc.g
    u_fn = lambda t, p: displacement_3d(c, m, mi, g, g.R + 0.0 * t, t, p, side="matrix")

    def traction(side):
        def f(t, p):
            s = stress_3d(c, m, mi, g, g.R + 0.0 * t, t, p, side=side)
            return s[0], s[3], s[4]

        return f

    model = "so" if sc.model == "so" else "gm"
    jr = jump_residual_3d(
        u_fn, traction("inhomogeneity"), traction("matrix"), surf, g.R, model=model
    )
    bound = JUMP_BOUND_CLASSICAL if sc.model == "classical" else JUMP_BOUND_INTERFACE
    checks.append(_check("interface_jump", jr.max, bound))

    system = "shell" if sc.model == "so" else "membrane"
    res = system_residual(system, m, mi, surf, g, sc.sigma_d, (c.A1, c.A2, c.D3, c.D4))
    checks.append(_check("coefficient_system", res, SYSTEM_BOUND))

    rng = np.random.default_rng(20240817)
    r = np.concatenate(
        [
            rng.uniform(0.15, 0.95, EQUILIBRIUM_POINTS // 2),
            rng.uniform(1.05, 5.0, EQUILIBRIUM_POINTS - EQUILIBRIUM_POINTS // 2),
        ]
    ) * g.R
    theta = rng.uniform(0.3, np.pi - 0.3, r.size)
    phi = rng.uniform(0.0, 2.0 * np.pi, r.size)
    res = equilibrium_residual_3d(
        lambda r_, t_, p_: stress_3d(c, m, mi, g, r_, t_, p_), r, theta, phi
    )
    checks.append(_check("equilibrium", res, EQUILIBRIUM_BOUND))
    return checks


def _verify_disk(sc: Scenario, corrupt: bool):
    load = _load_2d(sc)
    c = solve_general_2d(sc.matrix, sc.inhomogeneity, sc.surface, sc.g, load)
    if corrupt:
        c = _corrupted(c)
    checks = []
    m, mi, surf, g = sc.matrix, sc.inhomogeneity, sc.surface, sc.g

    u_fn = lambda t: displacement_2d(c, load, m, mi, surf, g, g.R + 0.0 * t, t,
                                     side="matrix")

    def traction(side):
        def f(t):
            s = stress_2d(c, load, m, mi, surf, g, g.R + 0.0 * t, t, side=side)
            return s[0], s[2]

        return f

    jr = jump_residual_2d(u_fn, traction("inhomogeneity"), traction("matrix"),
                          surf, g.R)
    bound = JUMP_BOUND_CLASSICAL if sc.model == "classical" else JUMP_BOUND_INTERFACE
    checks.append(_check("interface_jump", max(jr.rr, jr.rt), bound))

    rng = np.random.default_rng(20240817)
    r = np.concatenate(
        [
            rng.uniform(0.15, 0.95, EQUILIBRIUM_POINTS // 2),
            rng.uniform(1.05, 5.0, EQUILIBRIUM_POINTS - EQUILIBRIUM_POINTS // 2),
        ]
    ) * g.R
    theta = rng.uniform(0.0, 2.0 * np.pi, r.size)
    res = equilibrium_residual_2d(
        lambda r_, t_: stress_2d(c, load, m, mi, surf, g, r_, t_), r, theta
    )
    checks.append(_check("equilibrium", res, EQUILIBRIUM_BOUND))
    return checks


def _verify_hydro(sc: Scenario, corrupt: bool):
    """Hydrostatic mode: displacement continuity and the radial traction
    jump (Laplace term plus the membrane hoop response) at r = R."""
    m, mi, surf, g = sc.matrix, sc.inhomogeneity, sc.surface, sc.g
    R = g.R
    db, dbi = derive_bulk(m), derive_bulk(mi)
    if sc.geometry == "sphere":
        hc = solve_hydro_3d(m, mi, surf, g, sc.sigma_h)
        if corrupt:
            hc = _corrupted(hc)
        cont = hc.F1 * R - (hc.F2 * R + hc.F3 / R**2)
        srr_in = 3.0 * dbi.K3 * hc.F1
        srr_mat = 3.0 * db.K3 * hc.F2 - 4.0 * m.mu * hc.F3 / R**3
        eta0 = derive_surface(surf, g).eta0
        jump_target = -2.0 * (surf.sigma0 + eta0 * hc.F1 * R) / R
    else:
        hc = solve_hydro_2d(m, mi, surf, g, sc.sigma_h)
        if corrupt:
            hc = _corrupted(hc)
        cont = hc.F1 * R - (hc.F2 * R + hc.F3 / R)
        srr_in = 2.0 * dbi.K2 * hc.F1
        srr_mat = 2.0 * db.K2 * hc.F2 - 2.0 * m.mu * hc.F3 / R**2
        jump_target = -(surf.sigma0 + (2.0 * surf.mu0 + surf.lambda0) * hc.F1) / R
    scale_u = max(abs(hc.F1 * R), abs(hc.F2 * R), 1e-300)
    scale_s = max(abs(srr_in), abs(srr_mat), abs(jump_target), 1e-300)
    return [
        _check("displacement_continuity", abs(cont) / scale_u, 1e-12),
        _check("interface_jump", abs(srr_in - srr_mat - jump_target) / scale_s, 1e-12),
    ]


def scenario_checks(sc: Scenario, corrupt: bool = False):
    if sc.load == "hydrostatic":
        return _verify_hydro(sc, corrupt)
    if sc.geometry == "sphere":
        return _verify_sphere_shear(sc, corrupt)
    return _verify_disk(sc, corrupt)


def builtin_scenarios():
    """Named scenario texts exercising every geometry/model/load branch."""
    gamma = figures.GAMMA_RATIO * figures.ALUMINA_MU_GPA
    chi0 = gamma * 125.0 / 3.0
    return {
        "classical-sphere": """
            schema_version = 1
            geometry = sphere
            R = 2 nm
            matrix.mu = 10 GPa
            matrix.nu = 0.3
            inhomogeneity.mu = 3 GPa
            inhomogeneity.nu = 0.2
            model = classical
            load = shear
            load.sigma_d = 1.7 GPa
        """,
        "gm-sphere": """
            schema_version = 1
            geometry = sphere
            R = 2 nm
            matrix.mu = 10 GPa
            matrix.nu = 0.3
            inhomogeneity.mu = 3 GPa
            inhomogeneity.nu = 0.2
            model = gm
            surface.mu0 = 0.8 N/m
            surface.lambda0 = 1.3 N/m
            surface.sigma0 = 0.4 N/m
            load = shear
            load.sigma_d = 1.7 GPa
        """,
        "so-cavity": f"""
            schema_version = 1
            geometry = sphere
            R = 5 nm
            matrix.mu = 34.7 GPa
            matrix.nu = 0.3
            inhomogeneity = cavity
            model = so
            surface.mu0 = 5.2321 N/m
            surface.lambda0 = 10.4641 N/m
            surface.sigma0 = 1.7 N/m
            surface.chi0 = {chi0!r} GPa*nm^3
            load = shear
            load.sigma_d = 100 MPa
        """,
        "so-disk": """
            schema_version = 1
            geometry = disk
            R = 2 nm
            matrix.mu = 10 GPa
            matrix.nu = 0.3
            inhomogeneity.mu = 3 GPa
            inhomogeneity.nu = 0.2
            model = so
            surface.mu0 = 0.8 N/m
            surface.lambda0 = 1.3 N/m
            surface.sigma0 = 0.4 N/m
            surface.chi0 = 0.6 GPa*nm^3
            surface.zeta0 = 0.9 GPa*nm^3
            load = general
            load.s11 = 2 GPa
            load.s22 = -1 GPa
            load.s12 = 0.5 GPa
        """,
        "hydro-sphere": """
            schema_version = 1
            geometry = sphere
            R = 2 nm
            matrix.mu = 10 GPa
            matrix.nu = 0.3
            inhomogeneity.mu = 3 GPa
            inhomogeneity.nu = 0.2
            model = gm
            surface.mu0 = 0.8 N/m
            surface.lambda0 = 1.3 N/m
            surface.sigma0 = 0.4 N/m
            load = hydrostatic
            load.sigma_h = 2.1 GPa
        """,
        "hydro-disk": """
            schema_version = 1
            geometry = disk
            R = 2 nm
            matrix.mu = 10 GPa
            matrix.nu = 0.3
            inhomogeneity.mu = 3 GPa
            inhomogeneity.nu = 0.2
            model = gm
            surface.mu0 = 0.8 N/m
            surface.lambda0 = 1.3 N/m
            surface.sigma0 = 0.4 N/m
            load = hydrostatic
            load.sigma_h = 2.1 GPa
        """,
    }


def cmd_verify(args) -> int:
    from .scenario import parse_scenario

    if args.builtin:
        suites = [
            (name, parse_scenario(text)) for name, text in builtin_scenarios().items()
        ]
    elif args.file is not None:
        suites = [(os.path.basename(args.file), load_scenario(args.file))]
    else:
        raise ScenarioError("verify needs a scenario file or --builtin")

    report = {"schema_version": 1, "scenarios": []}
    all_pass = True
    for name, sc in suites:
        checks = scenario_checks(sc, corrupt=args.corrupt)
        ok = all(ch["pass"] for ch in checks)
        all_pass = all_pass and ok
        report["scenarios"].append({"name": name, "pass": ok, "checks": checks})
        for ch in checks:
            print(
                f"{'PASS' if ch['pass'] else 'FAIL'} {name}/{ch['name']}: "
                f"residual {ch['residual']:.3e} (bound {ch['bound']:.0e})",
                file=sys.stderr,
            )
    report["pass"] = all_pass
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out is not None:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all_pass else EXIT_VERIFY


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """Argparse with the package exit-code contract (usage errors -> 1)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="surfelast", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a scenario file")
    p.add_argument("file")
    p.add_argument("--out", help="coefficient CSV path (default: stdout)")
    p.add_argument("--fields", help="also write a displacement/stress grid CSV")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("figure", help="emit reference-plot data as CSV")
    p.add_argument("id", help="fig2 | fig3 | fig4 | fig5 | table1")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(fn=cmd_figure)

    p = sub.add_parser("table1", help="emit the effective-modulus table as CSV")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(fn=cmd_table1)

    p = sub.add_parser("verify", help="run numerical verification checks")
    p.add_argument("file", nargs="?", help="scenario file to verify")
    p.add_argument("--builtin", action="store_true", help="run the builtin suite")
    p.add_argument("--out", help="JSON report path (default: stdout)")
    p.add_argument(
        "--corrupt",
        action="store_true",
        help="deliberately corrupt the solved coefficients (negative test)",
    )
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ScenarioError as exc:
        print(f"surfelast: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except FileNotFoundError as exc:
        print(f"surfelast: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DegenerateParametersError as exc:
        print(f"surfelast: degenerate parameters: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
