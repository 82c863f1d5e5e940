"""Physical setup shared by the energies module and the command line."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .exceptions import ConfigError

__all__ = ["SystemKind", "SystemConfig", "parse_config_text", "load_config"]


class SystemKind(str, enum.Enum):
    SCALAR_1D = "scalar_1d"
    EM_PLATES = "em_plates"
    EM_HALFSPACE = "em_halfspace"
    SCALAR_QUARTIC = "scalar_quartic"
    EM_EULER_HEISENBERG = "em_euler_heisenberg"

    @property
    def interacting(self):
        return self in (SystemKind.SCALAR_QUARTIC, SystemKind.EM_EULER_HEISENBERG)


@dataclass(frozen=True)
class SystemConfig:
    """Plate separation ``L``, coupling ``alpha`` and heavy mass ``m`` (hbar = c = 1).

    ``alpha`` only enters the two interacting systems.
    """

    system: SystemKind = SystemKind.SCALAR_1D
    L: float = 1.0
    alpha: float = 0.0
    m: float = 1.0
    grid_points: int = 201
    guard: float = 1e-3

    def __post_init__(self):
        try:
            object.__setattr__(self, "system", SystemKind(self.system))
        except ValueError:
            valid = ", ".join(k.value for k in SystemKind)
            raise ConfigError("system", f"unknown system {self.system!r} (expected one of {valid})") from None
        if not (self.L > 0 and math.isfinite(self.L)):
            raise ConfigError("L", f"must be a positive length, got {self.L!r}")
        if not (self.alpha >= 0 and math.isfinite(self.alpha)):
            raise ConfigError("alpha", f"must be nonnegative, got {self.alpha!r}")
        if not (self.m > 0 and math.isfinite(self.m)):
            raise ConfigError("m", f"must be a positive mass, got {self.m!r}")
        if int(self.grid_points) != self.grid_points or self.grid_points < 1:
            raise ConfigError("grid_points", f"must be a positive integer, got {self.grid_points!r}")
        object.__setattr__(self, "grid_points", int(self.grid_points))
        if not 0 < self.guard < math.pi / 2:
            raise ConfigError("guard", f"must lie in (0, pi/2), got {self.guard!r}")

    def with_overrides(self, **overrides):
        """Copy with every non-None override applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


_CONVERTERS = {
    "system": str,
    "L": float,
    "alpha": float,
    "m": float,
    "grid_points": int,
    "guard": float,
}
assert set(_CONVERTERS) == {f.name for f in fields(SystemConfig)}


def parse_config_text(text):
    """Parse flat ``key=value`` lines into raw config values.

    Blank lines and ``#`` comments are skipped. Values are converted but not
    range-checked; :class:`SystemConfig` does that.
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}", f"expected key=value, got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONVERTERS:
            raise ConfigError(key, "unknown key")
        try:
            values[key] = _CONVERTERS[key](value)
        except ValueError:
            raise ConfigError(key, f"cannot parse {value!r}") from None
    return values


def load_config(path=None, **overrides):
    """Read a config file (optional) and apply non-None overrides on top."""
    values = {}
    if path is not None:
        values = parse_config_text(Path(path).read_text(encoding="utf-8"))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return SystemConfig(**values)
