"""Desk-scale guardrails, overridable through environment variables.

Every limit is read at call time so a change to the environment takes
effect without reimporting. Exceeding a limit raises LimitError rather
than silently truncating or wrapping.
"""
import os

_DEFAULTS = {
    "IDEALSAT_MAX_N": 12,
    "IDEALSAT_MAX_DEGREE": 64,
    "IDEALSAT_MAX_K": 64,
    "IDEALSAT_MAX_WITNESSES": 500_000,
    "IDEALSAT_MAX_ENUMERATION": 5_000_000,
}

# 2**n rank tables stop being desk scale past this, independent of IDEALSAT_MAX_N.
MAX_SUBSET_VARS = 16


def _read(name: str) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return _DEFAULTS[name]
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def max_n() -> int:
    """Largest allowed ambient variable count."""
    return _read("IDEALSAT_MAX_N")


def max_degree() -> int:
    """Largest allowed generator degree."""
    return _read("IDEALSAT_MAX_DEGREE")


def max_table_k() -> int:
    """Largest allowed power in tables and sweeps."""
    return _read("IDEALSAT_MAX_K")


def max_witnesses() -> int:
    """Largest allowed witness box for associated-prime searches."""
    return _read("IDEALSAT_MAX_WITNESSES")


def max_enumeration() -> int:
    """Largest allowed number of monomials in a single-degree enumeration."""
    return _read("IDEALSAT_MAX_ENUMERATION")
