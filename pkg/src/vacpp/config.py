"""Run configuration: strict TOML parsing, normalization and hashing.

Configs are TOML files with one section per physical ingredient.  Unknown
sections or keys are hard errors so that a typo in a physics parameter can
never silently fall back to a default.  Frequencies must carry an explicit
unit suffix, either "<value> rad/fs" or "<value> nm"; they are stored
internally in rad/fs.

The fully resolved configuration has a canonical JSON form whose SHA-256
hash is embedded in every output file, making runs traceable and
reproducible byte for byte.
"""

import hashlib
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .constants import wavelength_nm_to_angular_freq
from .dimer import DimerSpec
from .errors import ConfigError
from .experiment import ExperimentParams
from .field import DEFAULT_AREA, PulseSpec, VacuumParams
from .quadrature import QuadratureConfig

_FREQ_RE = re.compile(r"^\s*([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*(nm|rad/fs)\s*$")


def parse_frequency(text: Any, where: str) -> float:
    """Parse '<value> nm' or '<value> rad/fs' into rad/fs."""
    if text is None:
        raise ConfigError(f"{where}: missing required frequency")
    if not isinstance(text, str):
        raise ConfigError(
            f"{where}: frequencies need an explicit unit suffix "
            f"('<value> nm' or '<value> rad/fs'), got {text!r}"
        )
    m = _FREQ_RE.match(text)
    if not m:
        raise ConfigError(f"{where}: cannot parse frequency {text!r}")
    value, unit = float(m.group(1)), m.group(2)
    if unit == "nm":
        return wavelength_nm_to_angular_freq(value)
    return value


def _require_number(section: dict, key: str, where: str, default=None) -> float:
    if key not in section:
        if default is not None:
            return default
        raise ConfigError(f"{where}: missing required key '{key}'")
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key}: expected a number, got {value!r}")
    return float(value)


def _check_keys(section: dict, allowed: set[str], where: str) -> None:
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(
            f"unknown key(s) {sorted(unknown)} in [{where}]; allowed: {sorted(allowed)}"
        )


@dataclass(frozen=True)
class EnsembleConfig:
    n_mol: int
    diameter: float  # m
    length: float  # m
    crossing_angle_deg: float
    seeds: int
    seed: int


@dataclass(frozen=True)
class SweepConfig:
    axis: str  # T | n_mol | photon_number | angle
    start: float
    stop: float
    points: int
    waiting_time: float | None  # fs, required for non-T axes
    pulse: str  # pump | probe, for photon_number sweeps


@dataclass(frozen=True)
class OutputConfig:
    path: str | None
    format: str  # csv | json


@dataclass(frozen=True)
class RunConfig:
    dimer: DimerSpec | None
    pump: PulseSpec | None
    probe: PulseSpec | None
    vacuum: VacuumParams | None
    ensemble: EnsembleConfig | None
    sweep: SweepConfig | None
    oracle: QuadratureConfig | None
    oracle_waiting_time: float | None
    experiment: ExperimentParams | None
    output: OutputConfig
    resolved: dict

    def config_hash(self) -> str:
        return hashlib.sha256(
            json.dumps(self.resolved, sort_keys=True).encode()
        ).hexdigest()


_SECTIONS = {"dimer", "pump", "probe", "vacuum", "ensemble", "sweep", "oracle", "output", "experiment"}
_AXES = {"T", "n_mol", "photon_number", "angle"}


def _parse_pulse(section: dict, where: str) -> tuple[PulseSpec, dict]:
    _check_keys(section, {"center", "sigma", "photons", "arrival_time", "area", "spot_diameter"}, where)
    omega_0 = parse_frequency(section.get("center"), f"{where}.center")
    sigma = _require_number(section, "sigma", where)
    photons = _require_number(section, "photons", where)
    arrival = _require_number(section, "arrival_time", where, default=0.0)
    if "area" in section and "spot_diameter" in section:
        raise ConfigError(f"{where}: give either 'area' or 'spot_diameter', not both")
    if "spot_diameter" in section:
        area = math.pi * _require_number(section, "spot_diameter", where) ** 2 / 4.0
    else:
        area = _require_number(section, "area", where, default=DEFAULT_AREA)
    pulse = PulseSpec(
        omega_0=omega_0, sigma=sigma, photon_number=photons, arrival_time=arrival, area=area
    )
    resolved = {
        "center": f"{omega_0!r} rad/fs",
        "sigma": sigma,
        "photons": photons,
        "arrival_time": arrival,
        "area": area,
    }
    return pulse, resolved


def parse_config(text: str) -> RunConfig:
    """Parse and validate a TOML run configuration."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config is not valid TOML: {exc}") from exc
    unknown = set(data) - _SECTIONS
    if unknown:
        raise ConfigError(f"unknown section(s) {sorted(unknown)}; allowed: {sorted(_SECTIONS)}")

    resolved: dict[str, Any] = {}

    dimer = None
    if "dimer" in data:
        sec = data["dimer"]
        _check_keys(sec, {"site_a", "site_b", "coupling", "mu_ag", "mu_bg"}, "dimer")
        dimer = DimerSpec(
            omega_a=parse_frequency(sec.get("site_a"), "dimer.site_a"),
            omega_b=parse_frequency(sec.get("site_b"), "dimer.site_b"),
            coupling_j=parse_frequency(sec.get("coupling"), "dimer.coupling"),
            mu_ag=_require_number(sec, "mu_ag", "dimer"),
            mu_bg=_require_number(sec, "mu_bg", "dimer"),
        )
        resolved["dimer"] = {
            "site_a": f"{dimer.omega_a!r} rad/fs",
            "site_b": f"{dimer.omega_b!r} rad/fs",
            "coupling": f"{dimer.coupling_j!r} rad/fs",
            "mu_ag": dimer.mu_ag,
            "mu_bg": dimer.mu_bg,
        }

    pump = probe = None
    if "pump" in data:
        pump, resolved["pump"] = _parse_pulse(data["pump"], "pump")
    if "probe" in data:
        probe, resolved["probe"] = _parse_pulse(data["probe"], "probe")

    vacuum = None
    if "vacuum" in data:
        sec = data["vacuum"]
        _check_keys(sec, {"gamma"}, "vacuum")
        gamma = _require_number(sec, "gamma", "vacuum")
        if probe is None:
            raise ConfigError("[vacuum] requires a [probe] section (amplitude is probe-matched)")
        vacuum = VacuumParams.for_probe(gamma, probe)
        resolved["vacuum"] = {"gamma": gamma}

    ensemble = None
    if "ensemble" in data:
        sec = data["ensemble"]
        _check_keys(
            sec, {"n_mol", "diameter", "length", "crossing_angle_deg", "seeds", "seed"}, "ensemble"
        )
        ensemble = EnsembleConfig(
            n_mol=int(_require_number(sec, "n_mol", "ensemble")),
            diameter=_require_number(sec, "diameter", "ensemble"),
            length=_require_number(sec, "length", "ensemble"),
            crossing_angle_deg=_require_number(sec, "crossing_angle_deg", "ensemble", default=0.0),
            seeds=int(_require_number(sec, "seeds", "ensemble", default=1)),
            seed=int(_require_number(sec, "seed", "ensemble", default=0)),
        )
        if ensemble.n_mol < 1:
            raise ConfigError("ensemble.n_mol must be >= 1")
        if ensemble.seeds < 1:
            raise ConfigError("ensemble.seeds must be >= 1")
        resolved["ensemble"] = {
            "n_mol": ensemble.n_mol,
            "diameter": ensemble.diameter,
            "length": ensemble.length,
            "crossing_angle_deg": ensemble.crossing_angle_deg,
            "seeds": ensemble.seeds,
            "seed": ensemble.seed,
        }

    sweep = None
    if "sweep" in data:
        sec = data["sweep"]
        _check_keys(sec, {"axis", "start", "stop", "points", "waiting_time", "pulse"}, "sweep")
        axis = sec.get("axis")
        if axis not in _AXES:
            raise ConfigError(f"sweep.axis must be one of {sorted(_AXES)}, got {axis!r}")
        points = int(_require_number(sec, "points", "sweep"))
        if points < 1:
            raise ConfigError("sweep.points must be >= 1")
        start = _require_number(sec, "start", "sweep")
        stop = _require_number(sec, "stop", "sweep")
        if points > 1 and stop <= start:
            raise ConfigError("sweep range must be non-empty (stop > start)")
        waiting = sec.get("waiting_time")
        if waiting is not None and (isinstance(waiting, bool) or not isinstance(waiting, (int, float))):
            raise ConfigError(f"sweep.waiting_time: expected a number, got {waiting!r}")
        if axis != "T" and waiting is None:
            raise ConfigError(f"sweep.waiting_time is required for axis {axis!r}")
        pulse_target = sec.get("pulse", "pump")
        if pulse_target not in ("pump", "probe"):
            raise ConfigError(f"sweep.pulse must be 'pump' or 'probe', got {pulse_target!r}")
        sweep = SweepConfig(
            axis=axis,
            start=start,
            stop=stop,
            points=points,
            waiting_time=None if waiting is None else float(waiting),
            pulse=pulse_target,
        )
        resolved["sweep"] = {
            "axis": axis,
            "start": start,
            "stop": stop,
            "points": points,
            "pulse": pulse_target,
        }
        if waiting is not None:
            resolved["sweep"]["waiting_time"] = float(waiting)

    oracle = None
    oracle_waiting = None
    if "oracle" in data:
        sec = data["oracle"]
        _check_keys(
            sec, {"time_points", "time_span", "mode_count", "mode_span", "waiting_time"}, "oracle"
        )
        if vacuum is None:
            raise ConfigError("[oracle] requires a [vacuum] section (regularization lifetime)")
        try:
            oracle = QuadratureConfig(
                time_points=int(_require_number(sec, "time_points", "oracle", default=256)),
                time_span=_require_number(sec, "time_span", "oracle", default=6.0),
                mode_count=int(_require_number(sec, "mode_count", "oracle", default=512)),
                mode_span=_require_number(sec, "mode_span", "oracle", default=5.0),
                regularization_gamma=vacuum.gamma,
            )
        except ValueError as exc:
            raise ConfigError(f"[oracle]: {exc}") from exc
        if "waiting_time" in sec:
            oracle_waiting = _require_number(sec, "waiting_time", "oracle")
        resolved["oracle"] = {
            "time_points": oracle.time_points,
            "time_span": oracle.time_span,
            "mode_count": oracle.mode_count,
            "mode_span": oracle.mode_span,
            "regularization_gamma": oracle.regularization_gamma,
        }
        if oracle_waiting is not None:
            resolved["oracle"]["waiting_time"] = oracle_waiting

    experiment = None
    if "experiment" in data:
        sec = data["experiment"]
        _check_keys(
            sec,
            {"pulse_energy", "wavelength", "spot_diameter", "sigma", "concentration", "gamma"},
            "experiment",
        )
        experiment = ExperimentParams(
            pulse_energy=_require_number(sec, "pulse_energy", "experiment"),
            wavelength=_require_number(sec, "wavelength", "experiment"),
            spot_diameter=_require_number(sec, "spot_diameter", "experiment"),
            sigma=_require_number(sec, "sigma", "experiment"),
            concentration=_require_number(sec, "concentration", "experiment"),
            gamma=_require_number(sec, "gamma", "experiment"),
        )
        resolved["experiment"] = {
            "pulse_energy": experiment.pulse_energy,
            "wavelength": experiment.wavelength,
            "spot_diameter": experiment.spot_diameter,
            "sigma": experiment.sigma,
            "concentration": experiment.concentration,
            "gamma": experiment.gamma,
        }

    out_path, out_format = None, "csv"
    if "output" in data:
        sec = data["output"]
        _check_keys(sec, {"path", "format"}, "output")
        out_path = sec.get("path")
        out_format = sec.get("format", "csv")
        if out_format not in ("csv", "json"):
            raise ConfigError(f"output.format must be 'csv' or 'json', got {out_format!r}")
        resolved["output"] = {"format": out_format}
        if out_path is not None:
            resolved["output"]["path"] = out_path

    return RunConfig(
        dimer=dimer,
        pump=pump,
        probe=probe,
        vacuum=vacuum,
        ensemble=ensemble,
        sweep=sweep,
        oracle=oracle,
        oracle_waiting_time=oracle_waiting,
        experiment=experiment,
        output=OutputConfig(path=out_path, format=out_format),
        resolved=resolved,
    )


def render_config(resolved: dict) -> str:
    """Render a resolved configuration back to TOML (one nesting level).

    parse_config(render_config(cfg.resolved)) reproduces the same resolved
    dict, making normalization idempotent.
    """
    lines = []
    for section in sorted(resolved):
        lines.append(f"[{section}]")
        for key, value in sorted(resolved[section].items()):
            if isinstance(value, str):
                lines.append(f'{key} = "{value}"')
            elif isinstance(value, bool):
                lines.append(f"{key} = {str(value).lower()}")
            elif isinstance(value, (int, float)):
                lines.append(f"{key} = {value!r}")
            elif isinstance(value, list):
                lines.append(f"{key} = {json.dumps(value)}")
            else:
                raise ConfigError(f"cannot render {section}.{key} of type {type(value)}")
        lines.append("")
    return "\n".join(lines)
