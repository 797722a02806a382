"""Sweep bounds and the YAML profile file they are loaded from."""

from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional, Union

import yaml
from loguru import logger

from .errors import DomainError

DEFAULT_RULE_FILE = Path(__file__).parent / "sweep.yml"


@dataclass(frozen=True)
class SweepBounds:
    """Parameter ranges for a cross-validation sweep."""

    u_max: int = 6
    k_max: int = 5
    n_max: int = 7
    m_extra: int = 6
    brute_cap: int = 16
    reflect_cap: int = 12

    def __post_init__(self):
        minimums = {"u_max": 0, "k_max": 2, "n_max": 2, "m_extra": 0, "brute_cap": 0, "reflect_cap": 0}
        for name, minimum in minimums.items():
            value = getattr(self, name)
            if not isinstance(value, int) or value < minimum:
                raise DomainError(f"{name} must be an integer ≥ {minimum} (got {value!r})")

    def override(self, **values: Optional[int]) -> "SweepBounds":
        """Return a copy with every non-None value replaced."""
        return replace(self, **{name: value for name, value in values.items() if value is not None})


def load_profiles(rule_file: Optional[Union[str, Path]] = None) -> dict[str, SweepBounds]:
    """
    Load named sweep profiles from a YAML file.

    Args:
        rule_file: Path to the profile file. If None, uses the packaged sweep.yml

    Returns:
        Mapping of profile name to bounds; always contains "default"
    """
    profiles = {"default": SweepBounds()}
    rule_path = Path(rule_file) if rule_file else DEFAULT_RULE_FILE
    if not rule_path.exists():
        logger.warning(f"Profile file not found: {rule_path}, using built-in defaults")
        return profiles

    known = {f.name for f in fields(SweepBounds)}
    try:
        with open(rule_path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
        for entry in (data or {}).get("profiles", []):
            values = {key: value for key, value in entry.items() if key in known}
            profiles[entry["name"]] = SweepBounds(**values)
        logger.debug(f"Loaded {len(profiles)} sweep profiles from {rule_path}")
    except (yaml.YAMLError, KeyError, TypeError, AttributeError, DomainError) as e:
        logger.warning(f"Failed to load profiles from {rule_path}: {e}")

    return profiles


def get_profile(name: str = "default", rule_file: Optional[Union[str, Path]] = None) -> SweepBounds:
    """
    Get a named sweep profile.

    Raises:
        DomainError: If no profile has that name
    """
    profiles = load_profiles(rule_file)
    if name not in profiles:
        supported = ", ".join(sorted(profiles))
        raise DomainError(f"Unknown profile: {name}. Available profiles: {supported}")
    return profiles[name]


__all__ = ["SweepBounds", "DEFAULT_RULE_FILE", "load_profiles", "get_profile"]
