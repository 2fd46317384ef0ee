"""Resource budgets and the error types shared by every module.

Budgets default to the values below and can be overridden through
environment variables with the ``BGPOLY_`` prefix, e.g.
``BGPOLY_MAX_POINTS=1000000``.  Nothing is ever silently truncated: running
past a budget raises :class:`ResourceLimitError`.
"""
import os

DEFAULTS = {
    "MAX_CYCLES": 10**6,
    "MAX_MATCHING_STATES": 10**7,
    "MAX_PERMUTATION_SIDE": 8,
    "MAX_HULL_DIM": 10,
    "MAX_POINTS": 10**8,
    "MAX_TREES": 10**7,
    "MAX_EXTENSIONS": 10**7,
    "MAX_IDP_POINTS": 10**7,
}


class BgpolyError(Exception):
    pass


class InputError(BgpolyError, ValueError):
    """Malformed input or a violated precondition."""


class ResourceLimitError(BgpolyError, RuntimeError):
    """A configured enumeration budget was exceeded."""


class IntegrityError(BgpolyError, AssertionError):
    """An internal self-check failed; indicates a bug, never bad input."""


def budget(name: str) -> int:
    env = os.environ.get("BGPOLY_" + name)
    if env is not None:
        return int(env)
    return DEFAULTS[name]


def set_budget(name: str, value: int) -> None:
    if name not in DEFAULTS:
        raise KeyError(name)
    os.environ["BGPOLY_" + name] = str(int(value))
