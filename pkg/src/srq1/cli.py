"""Command-line surface: grid scans and reference tables as CSV/JSON.

Subcommands: table1, scan, freq, maxima, polarization, limits, crossover.
Angles are radians unless --angle-unit deg is given; theta ranges accept
the symbolic endpoints ``pi`` and ``pi/2`` (e.g. ``0:pi:181``).  Exit codes:
0 success, 1 domain/usage error, 2 convergence failure.
"""

from __future__ import annotations

import math
import sys

import click

from . import __version__, analysis, boson, electron, kinematics
from .errors import AmbiguousLimitError, ConvergenceError, DomainError
from .io import ScanResult, serialize
from .quadrature import QuadratureConfig

_SYMBOLIC = {"pi": math.pi, "pi/2": math.pi / 2, "pi/4": math.pi / 4,
             "2pi": 2 * math.pi, "inf": math.inf}


def parse_angle(token: str) -> float:
    token = token.strip().lower()
    if token in _SYMBOLIC:
        return _SYMBOLIC[token]
    try:
        return float(token)
    except ValueError:
        raise DomainError(f"cannot parse angle or number {token!r}") from None


def parse_range(text: str) -> list[float]:
    """``a:b:n`` -> n evenly spaced values; a bare number -> one value.

    Grid points landing within 1e-12 of pi/2 or pi are snapped exactly, so
    symbolic endpoints hit the special angles exactly.
    """
    parts = text.split(":")
    if len(parts) == 1:
        return [parse_angle(parts[0])]
    if len(parts) != 3:
        raise DomainError(f"range must be 'a:b:n' or a single value, got {text!r}")
    a, b = parse_angle(parts[0]), parse_angle(parts[1])
    try:
        n = int(parts[2])
    except ValueError:
        raise DomainError(f"grid size must be an integer, got {parts[2]!r}") from None
    if n < 2:
        raise DomainError(f"grid size must be >= 2 for a range, got {n}")
    step = (b - a) / (n - 1)
    grid = [a + i * step for i in range(n)]
    grid[-1] = b
    for i, v in enumerate(grid):
        for exact in (math.pi / 2, math.pi):
            if abs(v - exact) < 1e-12:
                grid[i] = exact
    return grid


def _base_metadata(quantity, cfg, angle_unit, **extra):
    md = {"quantity": quantity, "version": __version__,
          "abs_tol": cfg.abs_tol, "rel_tol": cfg.rel_tol,
          "max_depth": cfg.max_depth, "angle_unit": angle_unit}
    md.update(extra)
    return md


def _out_angle(theta, angle_unit):
    return math.degrees(theta) if angle_unit == "deg" else theta


def _in_angles(grid, angle_unit):
    return [math.radians(t) for t in grid] if angle_unit == "deg" else grid


_format_option = click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                              default="csv", show_default=True)
_angle_unit_option = click.option("--angle-unit", type=click.Choice(["rad", "deg"]),
                                  default="rad", show_default=True)
_zeta_option = click.option("--zeta", type=click.Choice(["+1", "-1", "1"]),
                            default="-1", show_default=True,
                            help="Electron spin along (+1) or against (-1) the field.")
_quad_options = [
    click.option("--abs-tol", type=float, default=1e-10, show_default=True),
    click.option("--rel-tol", type=float, default=1e-10, show_default=True),
    click.option("--max-depth", type=int, default=60, show_default=True),
]


def _with_quad(fn):
    for opt in reversed(_quad_options):
        fn = opt(fn)
    return fn


def _cfg(abs_tol, rel_tol, max_depth):
    try:
        return QuadratureConfig(abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


@click.group()
@click.version_option(__version__)
def cli():
    """Synchrotron radiation of n = 1 bosons and electrons."""


@cli.command("table1")
@_format_option
@_with_quad
def cmd_table1(fmt, abs_tol, rel_tol, max_depth):
    """Shape factors and power ratios on beta = 0.0 ... 1.0."""
    cfg = _cfg(abs_tol, rel_tol, max_depth)
    result = _table1_result(cfg)
    click.echo(serialize(result, fmt), nl=False)


def _table1_result(cfg):
    rows = analysis.table1(cfg)
    result = ScanResult(
        metadata=_base_metadata("table1", cfg, "rad", units="dimensionless"),
        columns=["beta", "f_b", "f_e", "k_minus", "k_plus"],
        rows=[[r.beta, r.f_b, r.f_e, r.k_minus, r.k_plus] for r in rows],
    )
    return result


@cli.command("crossover")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="json", show_default=True)
@_with_quad
def cmd_crossover(fmt, abs_tol, rel_tol, max_depth):
    """Speed where the spin-flip channel starts to outradiate the boson."""
    cfg = _cfg(abs_tol, rel_tol, max_depth)
    beta0, gamma0 = analysis.crossover_beta(cfg)
    result = ScanResult(metadata=_base_metadata("crossover", cfg, "rad"),
                        columns=["beta0", "gamma0"], rows=[[beta0, gamma0]])
    click.echo(serialize(result, fmt), nl=False)


@cli.command("freq")
@click.option("--particle", type=click.Choice(["boson", "electron"]), required=True)
@click.option("--beta", required=True, help="Speed, single value in [0, 1].")
@click.option("--theta", default="0:pi/2:91", show_default=True,
              help="Angle range a:b:n (symbolic pi, pi/2 allowed).")
@_format_option
@_angle_unit_option
def cmd_freq(particle, beta, theta, fmt, angle_unit):
    """Emitted photon frequency over an angle grid (units m0*c^2/hbar)."""
    beta_v = parse_angle(beta)
    spec = kinematics.boson() if particle == "boson" else kinematics.electron(-1)
    state = kinematics.state_from_beta(spec, 1, beta_v)
    thetas = _in_angles(parse_range(theta), angle_unit)
    rows = [[_out_angle(t, angle_unit),
             kinematics.photon_frequency(spec, state, kinematics.PhotonRequest(1, t))]
            for t in thetas]
    cfg = QuadratureConfig()
    result = ScanResult(
        metadata=_base_metadata("freq", cfg, angle_unit, particle=particle,
                                beta=beta_v, units="m0*c^2/hbar"),
        columns=["theta", "omega"], rows=rows)
    click.echo(serialize(result, fmt), nl=False)


@cli.command("scan")
@click.option("--quantity", required=True,
              type=click.Choice(["freq", "p", "q_local", "q_halfplane", "power",
                                 "ratio", "max_angle", "eff_angle", "table1",
                                 "limits"]))
@click.option("--particle", type=click.Choice(["boson", "electron"]),
              default="boson", show_default=True)
@_zeta_option
@click.option("--s", "s", type=click.Choice(["0", "1", "-1", "2", "3"]),
              default="0", show_default=True)
@click.option("--beta", default="0", show_default=True,
              help="Speed value or range a:b:n.")
@click.option("--theta", default="0:pi:181", show_default=True,
              help="Angle value or range a:b:n.")
@_format_option
@_angle_unit_option
@_with_quad
def cmd_scan(quantity, particle, zeta, s, beta, theta, fmt, angle_unit,
             abs_tol, rel_tol, max_depth):
    """Evaluate one quantity over a beta or theta grid."""
    cfg = _cfg(abs_tol, rel_tol, max_depth)
    s = int(s)
    zeta = int(zeta)
    betas = parse_range(beta)
    thetas = _in_angles(parse_range(theta), angle_unit)
    result = _scan(quantity, particle, zeta, s, betas, thetas, angle_unit, cfg)
    click.echo(serialize(result, fmt), nl=False)


def _scan(quantity, particle, zeta, s, betas, thetas, angle_unit, cfg):
    md = _base_metadata(quantity, cfg, angle_unit, particle=particle,
                        zeta=zeta, s=s)
    if quantity == "table1":
        return _table1_result(cfg)

    if quantity == "limits":
        rows = [[_out_angle(t, angle_unit),
                 electron.ultrarelativistic_density(s, zeta, t)] for t in thetas]
        md["units"] = "dimensionless"
        return ScanResult(metadata=md, columns=["theta", "p_bar"], rows=rows)

    if quantity == "freq":
        spec = (kinematics.boson() if particle == "boson"
                else kinematics.electron(zeta))
        state = kinematics.state_from_beta(spec, 1, betas[0])
        md.update(beta=betas[0], units="m0*c^2/hbar")
        rows = [[_out_angle(t, angle_unit),
                 kinematics.photon_frequency(spec, state,
                                             kinematics.PhotonRequest(1, t))]
                for t in thetas]
        return ScanResult(metadata=md, columns=["theta", "omega"], rows=rows)

    if quantity == "p":
        beta_v = betas[0]
        md["beta"] = beta_v
        if particle == "boson":
            profile = boson.density_profile_b(s, beta_v, cfg)
        else:
            profile = electron.density_profile_e(s, zeta, beta_v, cfg)
            if beta_v == 1.0 and any(t == math.pi / 2 for t in thetas):
                md["ambiguous"] = ("beta=1,theta=pi/2: double limit; "
                                   "fixed-beta theta-limit reported")
        rows = [[_out_angle(t, angle_unit), float(profile(t))] for t in thetas]
        return ScanResult(metadata=md, columns=["theta", "p"], rows=rows)

    if quantity == "q_local":
        beta_v = betas[0]
        md["beta"] = beta_v
        rows = []
        for t in thetas:
            if particle == "boson":
                value = boson.local_polarization_b(s, beta_v, t)
            else:
                try:
                    value = electron.local_polarization_e(s, zeta, beta_v, t)
                except AmbiguousLimitError:
                    value = "ambiguous"
            rows.append([_out_angle(t, angle_unit), value])
        return ScanResult(metadata=md, columns=["theta", "q"], rows=rows)

    if quantity == "q_halfplane":
        rows = []
        for b in betas:
            if particle == "boson":
                value = boson.half_plane_fraction_b(s, b, cfg)
            else:
                value = electron.half_plane_fraction_e(s, zeta, b, cfg)
            rows.append([b, value])
        return ScanResult(metadata=md, columns=["beta", "q"], rows=rows)

    if quantity == "power":
        md["units"] = "Q0"
        rows = []
        for b in betas:
            if particle == "boson":
                power, shape = boson.total_power_b(b, cfg)
            else:
                power, shape = electron.total_power_e(zeta, b, cfg)
            rows.append([b, power, shape])
        return ScanResult(metadata=md, columns=["beta", "power", "shape"], rows=rows)

    if quantity == "ratio":
        rows = [[b, analysis.power_ratio(zeta, b, cfg)] for b in betas]
        return ScanResult(metadata=md, columns=["beta", "k"], rows=rows)

    if quantity == "max_angle":
        rows = []
        for b in betas:
            rep = analysis.max_angle(particle, s, zeta, b, cfg)
            rows.append([b, rep.exists,
                         "none" if rep.theta_max is None
                         else _out_angle(rep.theta_max, angle_unit),
                         "none" if rep.p_max is None else rep.p_max])
        return ScanResult(metadata=md,
                          columns=["beta", "exists", "theta_max", "p_max"],
                          rows=rows)

    if quantity == "eff_angle":
        rows = []
        for b in betas:
            rep = analysis.effective_angle(particle, s, zeta, b, cfg)
            rows.append([b, _out_angle(rep.delta, angle_unit)])
        md["definition_id"] = "rms"
        return ScanResult(metadata=md, columns=["beta", "delta"], rows=rows)

    raise DomainError(f"unknown quantity {quantity!r}")


@cli.command("maxima")
@click.option("--particle", type=click.Choice(["boson", "electron"]), required=True)
@click.option("--s", "s", type=click.Choice(["0", "1", "3"]), required=True)
@_zeta_option
@click.option("--beta", required=True, help="Speed value or range a:b:n.")
@_format_option
@_angle_unit_option
@_with_quad
def cmd_maxima(particle, s, zeta, beta, fmt, angle_unit, abs_tol, rel_tol, max_depth):
    """Interior maxima of the angular density over a beta grid."""
    cfg = _cfg(abs_tol, rel_tol, max_depth)
    result = _scan("max_angle", particle, int(zeta), int(s), parse_range(beta),
                   [], angle_unit, cfg)
    click.echo(serialize(result, fmt), nl=False)


@cli.command("polarization")
@click.option("--particle", type=click.Choice(["boson", "electron"]), required=True)
@_zeta_option
@click.option("--beta", required=True, help="Speed value or range a:b:n.")
@_format_option
@_with_quad
def cmd_polarization(particle, zeta, beta, fmt, abs_tol, rel_tol, max_depth):
    """Half-plane polarization fractions q_s(beta) for all components."""
    cfg = _cfg(abs_tol, rel_tol, max_depth)
    zeta = int(zeta)
    rows = []
    for b in parse_range(beta):
        if particle == "boson":
            q = {s: boson.half_plane_fraction_b(s, b, cfg) for s in (1, -1, 2, 3)}
        else:
            q = {s: electron.half_plane_fraction_e(s, zeta, b, cfg)
                 for s in (1, -1, 2, 3)}
        rows.append([b, q[1], q[-1], q[2], q[3]])
    result = ScanResult(
        metadata=_base_metadata("q_halfplane", cfg, "rad", particle=particle,
                                zeta=zeta),
        columns=["beta", "q_right", "q_left", "q_sigma", "q_pi"], rows=rows)
    click.echo(serialize(result, fmt), nl=False)


@cli.command("limits")
@click.option("--s", "s", type=click.Choice(["0", "1", "-1", "2", "3"]),
              required=True)
@_zeta_option
@click.option("--theta", default="0:pi:181", show_default=True)
@_format_option
@_angle_unit_option
def cmd_limits(s, zeta, theta, fmt, angle_unit):
    """Ultrarelativistic electron density profile over an angle grid."""
    cfg = QuadratureConfig()
    thetas = _in_angles(parse_range(theta), angle_unit)
    result = _scan("limits", "electron", int(zeta), int(s), [1.0], thetas,
                   angle_unit, cfg)
    click.echo(serialize(result, fmt), nl=False)


def run_cli(argv) -> int:
    """Dispatch argv; returns the process exit code (0/1/2)."""
    try:
        cli.main(args=list(argv), prog_name="srq1", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.UsageError as exc:
        click.echo(exc.format_message(), err=True)
        if exc.ctx is not None:
            click.echo(exc.ctx.get_usage(), err=True)
        return 1
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        return 1
    except ConvergenceError as exc:
        click.echo(f"convergence error: {exc}", err=True)
        return 2
    return 0


def main(argv=None) -> int:
    return run_cli(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
