"""
src/symmetra/core/config.py

Job configuration. Sources, lowest precedence first: built-in defaults,
a JSON file (--config or $SYMMETRA_CONFIG), command-line flags.
"""
import dataclasses
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import sympy

from symmetra.core.errors import ConfigError

logger = logging.getLogger(__name__)

CONFIG_ENV = "SYMMETRA_CONFIG"
MODES = ("exact", "numeric")
DEFAULT_INDETERMINATES = ("q", "t", "s", "r", "a", "b", "g", "c")


def _rational(name: str, text: str) -> sympy.Rational:
    try:
        value = sympy.Rational(str(text).strip())
    except (TypeError, ValueError, SyntaxError) as exc:
        raise ConfigError(f"{name} is not a rational number: {text!r}") from exc
    if not value.is_Rational:
        raise ConfigError(f"{name} is not a rational number: {text!r}")
    return value


@dataclass(frozen=True)
class JobConfig:
    mode: str = "exact"
    q: str = "7/5"
    tolerance: float = 1e-9
    guard_bound: int = 64
    indeterminates: Tuple[str, ...] = DEFAULT_INDETERMINATES
    degree_bound: int = 4
    box_bound: int = 3
    seed: int = 0
    max_order: int = 24
    draws: int = 3
    # numeric values of indeterminates other than q, as rational text
    values: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "indeterminates", tuple(self.indeterminates))
        object.__setattr__(self, "values", dict(self.values))
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.indeterminates or self.indeterminates[0] != "q":
            raise ConfigError("q must be the first indeterminate")
        if len(set(self.indeterminates)) != len(self.indeterminates):
            raise ConfigError("Indeterminate names must be distinct")
        if self.degree_bound < 1:
            raise ConfigError("degree_bound must be at least 1")
        if self.box_bound < 1:
            raise ConfigError("box_bound must be at least 1")
        if self.max_order < 1 or self.draws < 1:
            raise ConfigError("max_order and draws must be positive")
        if self.tolerance <= 0:
            raise ConfigError("tolerance must be positive")
        unknown = set(self.values) - set(self.indeterminates)
        if unknown:
            raise ConfigError(f"Values given for unknown indeterminates: {sorted(unknown)}")
        q = _rational("q", self.q)
        for name, v in self.values.items():
            _rational(name, v)
        # the only rational roots of unity are 1 and -1
        if self.mode == "numeric" and (q == 0 or abs(q) == 1):
            raise ConfigError(f"q = {self.q} is rejected: numeric q must not be 0, 1 or -1")

    def replace(self, **changes) -> 'JobConfig':
        return dataclasses.replace(self, **changes)

    def to_json(self) -> Dict[str, Any]:
        doc = dataclasses.asdict(self)
        doc["indeterminates"] = list(self.indeterminates)
        return doc

    @classmethod
    def from_json(cls, doc: Dict[str, Any], base: Optional['JobConfig'] = None) -> 'JobConfig':
        base = base or cls()
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(doc) - names
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {sorted(unknown)}")
        return base.replace(**doc)


def load_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> JobConfig:
    """Defaults, then the JSON file (explicit path or $SYMMETRA_CONFIG), then overrides."""
    config = JobConfig()
    path = path or os.environ.get(CONFIG_ENV)
    if path:
        try:
            with open(path, "r", encoding="utf-8") as f:
                doc = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"Cannot read configuration {path}: {exc}") from exc
        if not isinstance(doc, dict):
            raise ConfigError(f"Configuration {path} must hold a JSON object")
        config = JobConfig.from_json(doc, config)
        logger.debug("Loaded configuration from %s", path)
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    if overrides:
        config = config.replace(**overrides)
    return config
