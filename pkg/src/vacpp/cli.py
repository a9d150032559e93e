"""Command-line interface.

Subcommands:
    signal           sweep a parameter axis and write one signal row per point
    validate         compare the closed forms against the quadrature reference
    ensemble         Monte Carlo phase-sum statistics, superradiance ratio,
                     beat visibility
    proposal-report  SI parameter table of the proposed experiment

Exit codes: 0 success, 1 validation failure, 2 configuration error.
Identical config and seed produce byte-identical output files regardless of
the worker count: points are dispatched in sweep order and every float is
rendered with repr round-tripping.
"""

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .config import RunConfig, parse_config
from .dimer import diagonalize_dimer
from .ensemble import (
    CylinderGeometry,
    EnsembleSpec,
    amplitude_ratio,
    beat_visibility,
    phase_sum,
    superradiance_ratio,
)
from .errors import ConfigError, ConvergenceError, PulseOverlapError, UnsupportedRegimeError
from .experiment import PROPOSAL_DEFAULTS, proposal_report
from .field import PulseSpec, VacuumParams
from .quadrature import compare_signals, oracle_signals
from .signals import ensemble_signal, single_molecule_signal

CSV_HEADER = "sweep_value,s_esa,s_se_classical,s_se_vacuum,s_gsb,s_total"


def _load_config(path: str) -> RunConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text)


def _require(cfg: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise ConfigError(f"this command requires a [{name}] section in the config")


def _probe_direction(angle_deg: float) -> np.ndarray:
    angle = math.radians(angle_deg)
    return np.array([math.sin(angle), 0.0, math.cos(angle)])


def _wavevectors(cfg: RunConfig, angle_deg: float) -> tuple[np.ndarray, np.ndarray]:
    k_mag_pump = cfg.pump.omega_0 * 1e15 / 299792458.0
    k_mag_probe = cfg.probe.omega_0 * 1e15 / 299792458.0
    return k_mag_pump * np.array([0.0, 0.0, 1.0]), k_mag_probe * _probe_direction(angle_deg)


def _x_squared(cfg: RunConfig, n_mol: int, angle_deg: float, seed: int) -> float:
    """Phase-matching weight for one geometry; collinear needs no sampling."""
    if angle_deg == 0.0:
        return float(n_mol) ** 2
    geometry = CylinderGeometry(cfg.ensemble.diameter, cfg.ensemble.length)
    k_pump, k_probe = _wavevectors(cfg, angle_deg)
    spec = EnsembleSpec.sample(n_mol, geometry, seed, k_pump, k_probe)
    return phase_sum(spec)[1]


def _signal_row(cfg: RunConfig, axis: str, value: float, seed: int, index: int) -> tuple:
    basis = diagonalize_dimer(cfg.dimer)
    pump, probe, vac = cfg.pump, cfg.probe, cfg.vacuum
    t_wait = cfg.sweep.waiting_time
    n_mol = cfg.ensemble.n_mol if cfg.ensemble else None
    angle = cfg.ensemble.crossing_angle_deg if cfg.ensemble else 0.0

    if axis == "T":
        t_wait = value
    elif axis == "n_mol":
        n_mol = int(round(value))
    elif axis == "photon_number":
        replaced = PulseSpec(
            omega_0=(pump if cfg.sweep.pulse == "pump" else probe).omega_0,
            sigma=(pump if cfg.sweep.pulse == "pump" else probe).sigma,
            photon_number=value,
            arrival_time=(pump if cfg.sweep.pulse == "pump" else probe).arrival_time,
            area=(pump if cfg.sweep.pulse == "pump" else probe).area,
        )
        if cfg.sweep.pulse == "pump":
            pump = replaced
        else:
            probe = replaced
            vac = VacuumParams.for_probe(cfg.vacuum.gamma, probe)
    elif axis == "angle":
        angle = value

    if cfg.ensemble is not None:
        x2 = _x_squared(cfg, n_mol, angle, seed + index if angle != 0.0 else seed)
        parts = ensemble_signal(basis, pump, probe, vac, t_wait, x2, n_mol)
    else:
        parts = single_molecule_signal(basis, pump, probe, vac, t_wait)
    return (value, parts.esa, parts.se_classical, parts.se_vacuum, parts.gsb, parts.total)


def _eval_point(args: tuple) -> tuple:
    config_text, axis, value, seed, index = args
    return _signal_row(parse_config(config_text), axis, value, seed, index)


def cmd_signal(args) -> int:
    cfg = _load_config(args.config)
    _require(cfg, "dimer", "pump", "probe", "vacuum", "sweep")
    axis = cfg.sweep.axis
    if axis in ("n_mol", "angle") and cfg.ensemble is None:
        raise ConfigError(f"sweep axis {axis!r} requires an [ensemble] section")
    seed = args.seed if args.seed is not None else (cfg.ensemble.seed if cfg.ensemble else 0)
    values = np.linspace(cfg.sweep.start, cfg.sweep.stop, cfg.sweep.points)

    config_text = Path(args.config).read_text()
    if args.workers > 1:
        work = [(config_text, axis, float(v), seed, i) for i, v in enumerate(values)]
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_eval_point, work))
    else:
        rows = [_signal_row(cfg, axis, float(v), seed, i) for i, v in enumerate(values)]

    out_format = args.format or cfg.output.format
    if out_format == "csv":
        lines = [
            "# vacpp signal sweep",
            f"# config_sha256: {cfg.config_hash()}",
            f"# axis: {axis}",
            f"# seed: {seed}",
            CSV_HEADER,
        ]
        lines += [",".join(repr(float(x)) for x in row) for row in rows]
        payload = "\n".join(lines) + "\n"
    else:
        payload = json.dumps(
            {
                "config_sha256": cfg.config_hash(),
                "axis": axis,
                "seed": seed,
                "columns": CSV_HEADER.split(","),
                "rows": [list(map(float, row)) for row in rows],
            },
            sort_keys=True,
            indent=2,
        ) + "\n"
    _write_output(args.output or cfg.output.path, payload)
    return 0


def cmd_validate(args) -> int:
    cfg = _load_config(args.config)
    _require(cfg, "dimer", "pump", "probe", "vacuum", "oracle")
    basis = diagonalize_dimer(cfg.dimer)
    t_wait = cfg.oracle_waiting_time
    if t_wait is None:
        t_wait = 4.0 * (cfg.pump.sigma + cfg.probe.sigma)
    try:
        analytic = single_molecule_signal(basis, cfg.pump, cfg.probe, cfg.vacuum, t_wait)
        oracle = oracle_signals(basis, cfg.pump, cfg.probe, cfg.vacuum, cfg.oracle, t_wait)
        report = compare_signals(analytic, oracle, cfg.oracle)
    except ConvergenceError as exc:
        report = {
            "t_wait": t_wait,
            "passed": False,
            "convergence_failure": str(exc),
            "coarse_value": exc.coarse,
            "fine_value": exc.fine,
        }
    report["config_sha256"] = cfg.config_hash()
    payload = json.dumps(report, sort_keys=True, indent=2) + "\n"
    _write_output(args.output or cfg.output.path, payload)
    return 0 if report["passed"] else 1


def cmd_ensemble(args) -> int:
    cfg = _load_config(args.config)
    _require(cfg, "dimer", "pump", "probe", "vacuum", "ensemble")
    basis = diagonalize_dimer(cfg.dimer)
    ens = cfg.ensemble
    base_seed = args.seed if args.seed is not None else ens.seed
    angle = ens.crossing_angle_deg
    geometry = CylinderGeometry(ens.diameter, ens.length)
    k_pump, k_probe = _wavevectors(cfg, angle)

    x2_values = []
    for s in range(ens.seeds):
        spec = EnsembleSpec.sample(ens.n_mol, geometry, base_seed + s, k_pump, k_probe)
        x2_values.append(phase_sum(spec)[1])
    x2_arr = np.array(x2_values)
    x2_mean = float(np.mean(x2_arr))
    x2_for_signal = float(ens.n_mol) ** 2 if angle == 0.0 else x2_mean

    ratio = superradiance_ratio(basis, cfg.pump, cfg.probe, cfg.vacuum, ens.n_mol, x2_for_signal)
    amp_ratio = amplitude_ratio(cfg.probe, cfg.vacuum, ens.n_mol)

    min_t = 3.0 * (cfg.pump.sigma + cfg.probe.sigma)
    periods = 2.0 * math.pi / basis.splitting
    t_grid = np.linspace(1.05 * min_t, 1.05 * min_t + 4.0 * periods, 512)
    if cfg.sweep is not None and cfg.sweep.axis == "n_mol":
        n_values = [int(round(v)) for v in np.linspace(cfg.sweep.start, cfg.sweep.stop, cfg.sweep.points)]
    else:
        n_values = [ens.n_mol]
    visibility = [
        {
            "n_mol": n,
            "visibility": beat_visibility(
                basis, cfg.pump, cfg.probe, cfg.vacuum, t_grid,
                n, float(n) ** 2 if angle == 0.0 else x2_mean * n / ens.n_mol,
            ),
        }
        for n in n_values
    ]

    report = {
        "config_sha256": cfg.config_hash(),
        "seed": base_seed,
        "crossing_angle_deg": angle,
        "n_mol": ens.n_mol,
        "phase_sum": {
            "seeds": ens.seeds,
            "x_squared_mean": x2_mean,
            "x_squared_std": float(np.std(x2_arr)),
            "x_squared_over_n": x2_mean / ens.n_mol,
            "x_squared_over_n_squared": x2_mean / float(ens.n_mol) ** 2,
        },
        "superradiance_ratio": ratio,
        "amplitude_ratio": amp_ratio,
        "beat_visibility": visibility,
    }
    payload = json.dumps(report, sort_keys=True, indent=2) + "\n"
    _write_output(args.output or cfg.output.path, payload)
    return 0


def _render_text(report: dict, indent: int = 0) -> list[str]:
    lines = []
    pad = " " * indent
    width = max((len(k) for k in report), default=0)
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines += _render_text(value, indent + 2)
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: {json.dumps(value)}")
        else:
            lines.append(f"{pad}{key:<{width}} = {value}")
    return lines


def cmd_proposal_report(args) -> int:
    params = PROPOSAL_DEFAULTS
    dimer = None
    if args.config:
        cfg = _load_config(args.config)
        if cfg.experiment is not None:
            params = cfg.experiment
        dimer = cfg.dimer
    report = proposal_report(params, dimer)
    if (args.format or "text") == "json":
        payload = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        payload = "\n".join(_render_text(report)) + "\n"
    _write_output(args.output, payload)
    return 0


def _write_output(path: str | None, payload: str) -> None:
    if path:
        Path(path).write_text(payload)
    else:
        sys.stdout.write(payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vacpp",
        description="Pump-probe signals of coupled dimers with the quantum-vacuum correction",
    )
    parser.add_argument("--version", action="version", version=f"vacpp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_config=True):
        if needs_config:
            p.add_argument("--config", required=True, help="TOML run configuration")
        else:
            p.add_argument("--config", help="TOML run configuration")
        p.add_argument("--output", help="output file (default: stdout)")
        p.add_argument("--seed", type=int, help="override the base RNG seed")
        p.add_argument("--workers", type=int, default=1, help="worker processes for sweeps")

    p_signal = sub.add_parser("signal", help="sweep a parameter axis")
    common(p_signal)
    p_signal.add_argument("--format", choices=("csv", "json"), help="output format")
    p_signal.set_defaults(func=cmd_signal)

    p_validate = sub.add_parser("validate", help="closed forms vs quadrature reference")
    common(p_validate)
    p_validate.set_defaults(func=cmd_validate)

    p_ensemble = sub.add_parser("ensemble", help="phase-sum statistics and superradiance")
    common(p_ensemble)
    p_ensemble.set_defaults(func=cmd_ensemble)

    p_report = sub.add_parser("proposal-report", help="SI parameter table of the proposal")
    common(p_report, needs_config=False)
    p_report.add_argument("--format", choices=("json", "text"), help="output format")
    p_report.set_defaults(func=cmd_proposal_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        ConfigError,
        PulseOverlapError,
        UnsupportedRegimeError,
        ValueError,
        ZeroDivisionError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
