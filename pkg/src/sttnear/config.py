"""Tolerances and experiment defaults.

The library functions take these as keyword defaults. The CLI layers a
``key=value`` config file, ``TSL_*`` environment variables and command-line
flags on top of :data:`DEFAULTS` (flags win, then environment, then file).
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

DENSE_CAP = 4096
RESIDUAL_TOL = 1e-10
ORTHO_TOL = 1e-10
TIE_RTOL = 1e-12

ENV_PREFIX = "TSL_"


@dataclass(frozen=True)
class Settings:
    dense_cap: int = DENSE_CAP
    residual_tol: float = RESIDUAL_TOL
    ortho_tol: float = ORTHO_TOL
    tie_rtol: float = TIE_RTOL
    seed: int = 20240611
    n_min: int = 2
    n_max: int = 50
    samples: int = 10_000
    workers: int = 1

    def replace(self, **changes) -> "Settings":
        changes = {k: v for k, v in changes.items() if v is not None}
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


DEFAULTS = Settings()

_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(Settings)}


def _coerce(key: str, raw: str):
    kind = _FIELD_TYPES[key]
    if kind in ("int", int):
        return int(float(raw)) if "e" in raw.lower() else int(raw)
    return float(raw)


def parse_config_text(text: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment. Unknown keys raise."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_").lower()
        if key not in _FIELD_TYPES:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        out[key] = _coerce(key, raw)
    return out


def env_overrides(environ: Mapping[str, str] | None = None) -> dict:
    environ = os.environ if environ is None else environ
    out = {}
    for key in _FIELD_TYPES:
        raw = environ.get(ENV_PREFIX + key.upper())
        if raw is not None and raw.strip():
            out[key] = _coerce(key, raw.strip())
    return out


def load_settings(
    path: str | Path | None = None,
    environ: Mapping[str, str] | None = None,
    **flags,
) -> Settings:
    settings = DEFAULTS
    if path is not None:
        settings = settings.replace(**parse_config_text(Path(path).read_text()))
    settings = settings.replace(**env_overrides(environ))
    return settings.replace(**flags)
