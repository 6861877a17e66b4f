from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from app.minors.genus import excluded_t


class ConfigError(ValueError):
    """Raised for out-of-range algorithm parameters."""


class Phase2Rule(str, Enum):
    MAX_RESIDUAL = "max"
    FIRST_ORDER_THRESHOLD = "fo"

    @classmethod
    def parse(cls, value) -> "Phase2Rule":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            allowed = ", ".join(rule.value for rule in cls)
            raise ConfigError(f"Unknown phase-2 rule {value!r}; expected one of {allowed}") from None


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class Config:
    """Parameters shared by every node program.

    ``c`` must bound the edge density of the input and of its minors. ``t``
    only matters to the first-order phase-2 rule; when it is left unset it
    is derived from ``g`` and the outcome of preprocessing.
    """

    c: int
    g: int = 0
    t: int | None = None
    phase2_rule: Phase2Rule = Phase2Rule.MAX_RESIDUAL

    def __post_init__(self):
        if not _is_int(self.c) or self.c < 1:
            raise ConfigError(f"c must be a positive integer, got {self.c!r}")
        if not _is_int(self.g) or self.g < 0:
            raise ConfigError(f"g must be a non-negative integer, got {self.g!r}")
        if self.t is not None and (not _is_int(self.t) or self.t < 3):
            raise ConfigError(f"t must be an integer >= 3, got {self.t!r}")
        object.__setattr__(self, "phase2_rule", Phase2Rule.parse(self.phase2_rule))

    @property
    def coverage_limit(self) -> int:
        """Largest |A| a vertex may use to cover its neighbourhood in phase 1."""
        return 2 * self.c

    def resolved_t(self, clean: bool = False) -> int:
        if self.t is not None:
            return self.t
        if clean:
            return 3
        return excluded_t(self.g)

    def fo_threshold(self, t: int) -> int:
        return 4 * self.c + 2 * self.c * (t - 1)

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "g": self.g,
            "t": self.t,
            "phase2_rule": self.phase2_rule.value,
        }


def default_c(genus: int) -> int:
    if genus < 0:
        raise ConfigError(f"genus must be non-negative, got {genus}")
    return 3 if genus == 0 else 3 + 6 * genus


def default_config(genus: int = 0, rule=Phase2Rule.MAX_RESIDUAL, t: int | None = None) -> Config:
    return Config(c=default_c(genus), g=genus, t=t, phase2_rule=rule)


def total_bound_factor(c: int, t: int) -> int:
    """Approximation factor 6c^2 t + (2t + 5)c + 4; 199 for c = t = 3."""
    return 6 * c * c * t + (2 * t + 5) * c + 4
