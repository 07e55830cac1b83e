"""Dimension values: exact integers, certified infinity, or a lower bound at the cap."""
from __future__ import annotations

from dataclasses import dataclass


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


@dataclass(frozen=True)
class AtLeast:
    """The computation hit the cap: the true value is at least ``bound``."""

    bound: int

    def __str__(self):
        return f">={self.bound}"


def is_finite(v) -> bool:
    return isinstance(v, int)


def encode(v):
    """JSON form: an int, ``"inf"`` or ``">=N"``."""
    if isinstance(v, int):
        return v
    if v is INF:
        return "inf"
    if isinstance(v, AtLeast):
        return f">={v.bound}"
    if v is None:
        return None
    raise TypeError(f"not a dimension value: {v!r}")


def decode(x):
    if isinstance(x, int):
        return x
    if x == "inf":
        return INF
    if isinstance(x, str) and x.startswith(">="):
        return AtLeast(int(x[2:]))
    raise ValueError(f"not a dimension value: {x!r}")


def at_least(v, n: int):
    """Is ``v >= n``?  ``None`` when the cap leaves it undetermined."""
    if isinstance(v, int):
        return v >= n
    if v is INF:
        return True
    if isinstance(v, AtLeast):
        return True if v.bound >= n else None
    raise TypeError(v)


def at_most(v, n: int):
    """Is ``v <= n``?  ``None`` when undetermined."""
    if isinstance(v, int):
        return v <= n
    if v is INF:
        return False
    if isinstance(v, AtLeast):
        return False if v.bound > n else None
    raise TypeError(v)


def vmin(*vals):
    """Minimum of dimension values (relative dimensions of a direct sum)."""
    vals = [v for v in vals if v is not None]
    exact = [v for v in vals if isinstance(v, int)]
    bounds = [v.bound for v in vals if isinstance(v, AtLeast)]
    if exact:
        m = min(exact)
        if not bounds or m <= min(bounds):
            return m
    if bounds:
        return AtLeast(min(bounds))
    return INF


def vmax(*vals):
    """Maximum of dimension values (``None`` entries ignored)."""
    vals = [v for v in vals if v is not None]
    if any(v is INF for v in vals):
        return INF
    exact = [v for v in vals if isinstance(v, int)]
    bounds = [v.bound for v in vals if isinstance(v, AtLeast)]
    if bounds:
        return AtLeast(max(bounds + exact))
    return max(exact) if exact else None


def vadd(t: int, v):
    if isinstance(v, int):
        return t + v
    if v is INF:
        return INF
    return AtLeast(v.bound + t)
