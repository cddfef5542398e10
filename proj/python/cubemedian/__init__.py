"""Right-angled Coxeter group geometry: walls, medians, geodesic rays and
boundary fingerprints. Words are strings of generator symbols; "" is the
identity. Ray specs are dicts {"base": str, "preperiod": [...], "period": [...]}."""

from ._core import (
    DomainError,
    Error,
    Group,
    InputError,
    RegionError,
    ResourceError,
    run,
    validate_median,
)


def ray(period, preperiod=(), base=""):
    """Ray spec from symbol sequences, e.g. ray("ac") or ray(["a", "c"], "b")."""
    return {"base": base, "preperiod": list(preperiod), "period": list(period)}


__all__ = [
    "DomainError",
    "Error",
    "Group",
    "InputError",
    "RegionError",
    "ResourceError",
    "ray",
    "run",
    "validate_median",
]
