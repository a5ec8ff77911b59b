"""State spaces: the unit interval [0, 1] and the circle R/Z in turn coordinates.

All circle angles are measured in turns, i.e. fractions of a full revolution,
so rational rotation amounts stay exact.  Functions here are type-agnostic:
they work on floats and on fractions.Fraction alike and return the same kind.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

from .errors import DomainError

# Slack accepted at space boundaries before a point is rejected; floating
# round-off from map evaluation must not trip the domain check.
BOUNDARY_TOL = 1e-9


class Space(Enum):
    UNIT_INTERVAL = "unit_interval"
    CIRCLE = "circle"


def contains(space: Space, x) -> bool:
    if space is Space.UNIT_INTERVAL:
        return 0 <= x <= 1
    return 0 <= x < 1


def normalize(space: Space, x):
    """Validate ``x`` against ``space``, absorbing round-off at the boundary.

    Interval points are clamped into [0, 1]; circle points are wrapped mod 1.
    Points further than BOUNDARY_TOL outside raise DomainError.
    """
    if space is Space.UNIT_INTERVAL:
        if x < -BOUNDARY_TOL or x > 1 + BOUNDARY_TOL:
            raise DomainError(f"point {x!r} outside the unit interval")
        if 0 <= x <= 1:
            return x
        return 0.0 if x < 0 else 1.0
    # circle
    if -BOUNDARY_TOL <= x < 1 + BOUNDARY_TOL:
        if 0 <= x < 1:
            return x
        return x % 1 if isinstance(x, Fraction) else x % 1.0
    raise DomainError(f"point {x!r} outside [0, 1) circle coordinates")


def wrap_circle(x):
    """Reduce a circle coordinate mod 1, guarding against y == 1.0 round-off."""
    if isinstance(x, Fraction):
        return x % 1
    y = x % 1.0
    if y >= 1.0:
        y -= 1.0
    return y


def metric(space: Space, x, y):
    d = abs(x - y)
    if space is Space.CIRCLE:
        return min(d, 1 - d)
    return d


def diameter(space: Space) -> float:
    return 0.5 if space is Space.CIRCLE else 1.0


def uniform_grid(space: Space, count: int) -> list[float]:
    """``count`` evenly spaced points; interval grids include both endpoints."""
    if count < 2:
        raise ValueError("grid needs at least 2 points")
    if space is Space.CIRCLE:
        return [i / count for i in range(count)]
    return [i / (count - 1) for i in range(count)]


def net_centers(space: Space, eps) -> list[float]:
    """Centers of a ceil(1/eps)-uniform net covering the space."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    m = math.ceil(1 / eps)
    if space is Space.CIRCLE:
        return [i / m for i in range(m)]
    return [i / m for i in range(m + 1)]


def exact_net_centers(space: Space, eps) -> list[Fraction]:
    """Rational version of net_centers, for certificate-grade checks."""
    m = math.ceil(1 / eps)
    if space is Space.CIRCLE:
        return [Fraction(i, m) for i in range(m)]
    return [Fraction(i, m) for i in range(m + 1)]
