"""
src/symmetra/core/objects.py

Defines the data types that flow through the graph (Wrappers) and the
configuration parameters for Nodes.
"""
from dataclasses import dataclass
from typing import Any, List, Optional

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# --- Data Wrappers ( The "Currency" ) ---

class DataWrapper:
    """Base class for all data flowing between nodes."""
    def __init__(self, data: Any, metadata: Optional[dict] = None):
        self.data = data
        self.metadata = metadata or {}

    def to_json(self) -> Any:
        return self.data

    @property
    def exit_code(self) -> int:
        return EXIT_OK

    def __repr__(self):
        return f"<{self.__class__.__name__}>"


class JsonData(DataWrapper):
    """Any JSON-ready document. metadata['failed'] marks a result that exits with 1."""
    def to_json(self):
        return self.data

    @property
    def exit_code(self) -> int:
        return EXIT_FAILED if self.metadata.get("failed") else EXIT_OK


# --- Parameters ( The "Knobs" ) ---

@dataclass
class Parameter:
    name: str
    label: str
    value: Any = None
    default: Any = None

    def __post_init__(self):
        if self.value is None:
            self.value = self.default

    def coerce(self, raw: Any) -> Any:
        return raw

    def set(self, raw: Any):
        self.value = self.coerce(raw)


class IntParam(Parameter):
    """Integer parameter with min/max bounds."""
    def __init__(self, name: str, label: str, default: int, min_val: int = 0, max_val: int = 100):
        super().__init__(name, label, default=default)
        self.min_val = min_val
        self.max_val = max_val

    def coerce(self, raw: Any) -> int:
        value = int(raw)
        if not self.min_val <= value <= self.max_val:
            raise ValueError(f"{self.name} must lie in [{self.min_val}, {self.max_val}], got {value}")
        return value


class StringParam(Parameter):
    """Simple text input (scalars, units, matrices and words are passed as text)."""
    def __init__(self, name: str, label: str, default: Optional[str] = None, positional: bool = False):
        super().__init__(name, label, default=default)
        self.positional = positional

    def coerce(self, raw: Any) -> Optional[str]:
        return None if raw is None else str(raw)


class ChoiceParam(Parameter):
    """Dropdown selection."""
    def __init__(self, name: str, label: str, options: List[str], default: str, positional: bool = False):
        super().__init__(name, label, default=default)
        self.options = options
        self.positional = positional
        if default not in options:
            raise ValueError(f"Default '{default}' is not in options: {options}")

    def coerce(self, raw: Any) -> str:
        if raw not in self.options:
            raise ValueError(f"{self.name} must be one of {self.options}, got {raw!r}")
        return raw


class BoolParam(Parameter):
    """Checkbox toggle."""
    def __init__(self, name: str, label: str, default: bool = False):
        super().__init__(name, label, default=default)

    def coerce(self, raw: Any) -> bool:
        if isinstance(raw, str):
            return raw.lower() in ("1", "true", "yes", "on")
        return bool(raw)
