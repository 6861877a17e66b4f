import logging
import os
from collections.abc import Mapping

from shared.constants import DEFAULT_ORACLE_BUDGET, DEFAULT_ORACLE_LIMIT

NULL_LIKE_PLACEHOLDER_VALUES = frozenset({"null", "none", "nil", "undefined"})
LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")

# name -> (default, smallest accepted value)
INTEGER_SETTINGS = {
    "MDS_ORACLE_LIMIT": (DEFAULT_ORACLE_LIMIT, 0),
    "MDS_ORACLE_BUDGET": (DEFAULT_ORACLE_BUDGET, 1),
    "MDS_JOBS": (1, 1),
}
DEFAULT_LOG_LEVEL = "INFO"


class StartupValidationError(RuntimeError):
    """Raised when the application cannot safely start."""


def _is_unset(value: str | None) -> bool:
    if value is None:
        return True

    stripped_value = value.strip()
    return not stripped_value or stripped_value.lower() in NULL_LIKE_PLACEHOLDER_VALUES


def _parse_integer(name: str, raw: str, minimum: int) -> int:
    try:
        value = int(raw.strip())
    except ValueError:
        raise StartupValidationError(
            f"Environment variable {name} must be an integer, got {raw!r}"
        ) from None
    if value < minimum:
        raise StartupValidationError(
            f"Environment variable {name} must be >= {minimum}, got {value}"
        )
    return value


def load_settings(environ: Mapping[str, str] | None = None) -> dict:
    env = os.environ if environ is None else environ
    settings = {}
    for name, (default, minimum) in INTEGER_SETTINGS.items():
        raw = env.get(name)
        settings[name] = default if _is_unset(raw) else _parse_integer(name, raw, minimum)

    raw_level = env.get("MDS_LOG_LEVEL")
    level = DEFAULT_LOG_LEVEL if _is_unset(raw_level) else raw_level.strip().upper()
    if level not in LOG_LEVELS:
        raise StartupValidationError(
            f"MDS_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {raw_level!r}"
        )
    settings["MDS_LOG_LEVEL"] = level
    return settings


def log_level(settings: Mapping) -> int:
    return getattr(logging, settings["MDS_LOG_LEVEL"])
