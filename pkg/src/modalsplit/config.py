"""TOML run configuration.

Layout::

    seed = 0                 # optional top-level seed

    [model]                  # required; all seven fields
    a = 60.0
    b1 = 50.0
    b2 = 75.0
    T0 = 70.0
    gamma = 2.0
    eta = 1.0
    p_max = 10.0

    [solve]                  # x0, tolerance, max_iter
    [simulate]               # n, seed, x0, max_days
    [yule]                   # alpha, steps, seed, s_min
    [sweep]                  # parameter, values

Unknown keys anywhere are errors.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .model import ModelError, ModelParams


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SolveBlock:
    x0: float = 1.0
    tolerance: float = 1e-10
    max_iter: int = 1000


@dataclass(frozen=True)
class SimulateBlock:
    n: int = 1000
    seed: int | None = None
    x0: float | None = None      # None: uniform draw from the seed
    max_days: int = 100


@dataclass(frozen=True)
class YuleBlock:
    alpha: float = 1 / 11
    steps: int = 100_000
    seed: int | None = None
    s_min: int = 5


@dataclass(frozen=True)
class SweepBlock:
    parameter: str
    values: tuple[float, ...]


@dataclass(frozen=True)
class RunConfig:
    model: ModelParams
    seed: int | None = None
    solve: SolveBlock = field(default_factory=SolveBlock)
    simulate: SimulateBlock = field(default_factory=SimulateBlock)
    yule: YuleBlock = field(default_factory=YuleBlock)
    sweep: SweepBlock | None = None


_BLOCKS = {"solve": SolveBlock, "simulate": SimulateBlock, "yule": YuleBlock, "sweep": SweepBlock}
_INT_FIELDS = {"max_iter", "n", "seed", "max_days", "steps", "s_min"}


def _number(section: str, key: str, value: Any, integer: bool) -> float | int:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"[{section}] {key} must be a number, got {value!r}")
    if integer:
        if int(value) != value:
            raise ConfigError(f"[{section}] {key} must be an integer, got {value!r}")
        return int(value)
    return float(value)


def _unknown(section: str, given, allowed) -> None:
    extra = sorted(set(given) - set(allowed))
    if extra:
        raise ConfigError(f"unknown key(s) in [{section}]: {', '.join(extra)}")


def _parse_model(raw: Any) -> ModelParams:
    if not isinstance(raw, dict):
        raise ConfigError("missing [model] section")
    names = ModelParams.field_names()
    _unknown("model", raw, names)
    missing = [n for n in names if n not in raw]
    if missing:
        raise ConfigError(f"[model] missing field(s): {', '.join(missing)}")
    vals = {n: _number("model", n, raw[n], integer=False) for n in names}
    try:
        return ModelParams(**vals)
    except ModelError as e:
        raise ConfigError(f"[model] {e}") from e


def _parse_block(name: str, raw: Any):
    cls = _BLOCKS[name]
    if not isinstance(raw, dict):
        raise ConfigError(f"[{name}] must be a table")
    allowed = [f.name for f in fields(cls)]
    _unknown(name, raw, allowed)
    if name == "sweep":
        for key in ("parameter", "values"):
            if key not in raw:
                raise ConfigError(f"[sweep] missing field: {key}")
        if not isinstance(raw["parameter"], str):
            raise ConfigError("[sweep] parameter must be a string")
        if not isinstance(raw["values"], list) or not raw["values"]:
            raise ConfigError("[sweep] values must be a non-empty list")
        values = tuple(_number("sweep", "values", v, integer=False) for v in raw["values"])
        return SweepBlock(parameter=raw["parameter"], values=values)
    kw = {k: _number(name, k, v, integer=k in _INT_FIELDS) for k, v in raw.items()}
    return cls(**kw)


def parse_config(data: dict) -> RunConfig:
    _unknown("top level", data, ["seed", "model", *_BLOCKS])
    seed = None
    if "seed" in data:
        seed = _number("top level", "seed", data["seed"], integer=True)
    kw = {name: _parse_block(name, data[name]) for name in _BLOCKS if name in data}
    return RunConfig(model=_parse_model(data.get("model")), seed=seed, **kw)


def load_config(path: str | Path) -> RunConfig:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e.strerror}") from e
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"malformed TOML in {path}: {e}") from e
    return parse_config(data)
