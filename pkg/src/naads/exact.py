"""Exact rational arithmetic on the circle group Q/Z.

Rotation families admit certificate-grade verdicts: displacements of the
two-sided flow are exact prefix sums, so periodicity and hull density can be
decided (within a finite horizon) instead of merely evidenced.  Angles are in
turns; arbitrary-precision numerators and denominators come from
fractions.Fraction, with a denominator-bit budget guarding pathological
requests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import BudgetError

# Harmonic prefix sums have denominators around lcm(1..k); 1 << 14 bits covers
# horizons of a few thousand steps before aborting.
DENOMINATOR_BIT_BUDGET = 1 << 14

ZERO = None  # assigned after RationalAngle is defined


class RationalAngle:
    """An exact circle point or displacement: a rational in [0, 1) turns."""

    __slots__ = ("value",)

    def __init__(self, value):
        v = Fraction(value) % 1
        if v.denominator.bit_length() > DENOMINATOR_BIT_BUDGET:
            raise BudgetError(
                f"denominator exceeds {DENOMINATOR_BIT_BUDGET} bits"
            )
        object.__setattr__(self, "value", v)

    def __setattr__(self, name, value):
        raise AttributeError("RationalAngle is immutable")

    @classmethod
    def parse(cls, text: str) -> "RationalAngle":
        return cls(Fraction(text))

    def __add__(self, other):
        return RationalAngle(self.value + other.value)

    def __sub__(self, other):
        return RationalAngle(self.value - other.value)

    def __neg__(self):
        return RationalAngle(-self.value)

    def __eq__(self, other):
        return isinstance(other, RationalAngle) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < other.value

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return f"RationalAngle({self.value})"

    def __str__(self):
        return str(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def distance(self, other: "RationalAngle") -> Fraction:
        """Exact circle metric min(|a-b|, 1-|a-b|)."""
        d = abs(self.value - other.value)
        return min(d, 1 - d)


ZERO = RationalAngle(0)


class RationalRotationFamily:
    """Indexed sequence n -> exact signed rotation amount of the n-th map.

    ``rule(n)`` returns the displacement of f_n as a RationalAngle for n >= 1.
    Flow displacements are prefix sums mod 1, memoized; negative times negate.
    """

    def __init__(self, rule: Callable[[int], RationalAngle], name: str):
        self.rule = rule
        self.name = name
        self._prefix = [ZERO]  # _prefix[n] = displacement of omega_n

    def step(self, n: int) -> RationalAngle:
        if n < 1:
            raise ValueError("step index must be >= 1")
        return self.rule(n)

    def displacement(self, n: int) -> RationalAngle:
        """Exact displacement of the flow at signed time n; 0 at n = 0."""
        m = abs(n)
        while len(self._prefix) <= m:
            k = len(self._prefix)
            self._prefix.append(self._prefix[-1] + self.rule(k))
        d = self._prefix[m]
        return -d if n < 0 else d

    def block(self, r: int) -> "RationalRotationFamily":
        """Exact view of the r-step block family."""
        if r < 1:
            raise ValueError("block size must be >= 1")
        if r == 1:
            return self

        def rule(k: int) -> RationalAngle:
            return self.displacement(k * r) - self.displacement((k - 1) * r)

        return RationalRotationFamily(rule, f"{self.name}|blocks[r={r}]")


@dataclass(frozen=True)
class PeriodicityResult:
    """Outcome of the exact period-r check over a finite horizon."""

    certified: bool
    period: int
    horizon: int
    witness_time: int | None = None
    witness_displacement: RationalAngle | None = None


def exact_periodicity(
    fam: RationalRotationFamily, r: int, horizon: int
) -> PeriodicityResult:
    """Certify or refute that every point has period r, at all |j| <= horizon.

    A rotation flow fixes every point or none, so the check is
    point-independent: certificate iff the displacement at j*r vanishes for
    all j.  Displacements at -n are exact negations, hence zero iff the
    positive side is; scanning positive j covers both signs.  The refutation
    witness is the smallest failing time (indices with vanishing displacement
    are skipped, they do not witness periodicity failure).
    """
    if r < 1:
        raise ValueError("period must be >= 1")
    for j in range(1, horizon + 1):
        d = fam.displacement(j * r)
        if not d.is_zero:
            return PeriodicityResult(
                certified=False,
                period=r,
                horizon=horizon,
                witness_time=j * r,
                witness_displacement=d,
            )
    return PeriodicityResult(certified=True, period=r, horizon=horizon)


@dataclass(frozen=True)
class HullDisplacements:
    """Exact displacement set of a truncated hull, with budget metadata."""

    angles: tuple[RationalAngle, ...]  # sorted ascending
    order_k: int
    depth: int
    budget_exhausted: bool
    stabilized: bool

    def as_set(self) -> frozenset[RationalAngle]:
        return frozenset(self.angles)


def _size_budget(max_size: int | None) -> int:
    cap = max_size if max_size is not None else 65536
    env = os.environ.get("NAADS_BUDGET_POINTS")
    if env:
        cap = min(cap, int(env))
    return cap


def exact_hull_displacements(
    fam: RationalRotationFamily,
    order_k: int,
    depth: int,
    max_size: int | None = None,
) -> HullDisplacements:
    """All sums of <= depth flow displacements with |time| <= order_k, mod 1.

    For a rotation family the order-k hull of x is exactly x plus this set.
    The set is exact (no dedup tolerance); growth is capped by ``max_size``
    (further capped by NAADS_BUDGET_POINTS), reported via budget_exhausted.
    """
    if order_k < 1 or depth < 1:
        raise ValueError("order_k and depth must be >= 1")
    cap = _size_budget(max_size)
    generators = {fam.displacement(r) for r in range(-order_k, order_k + 1)}
    current: set[RationalAngle] = {ZERO}
    frontier: set[RationalAngle] = {ZERO}
    exhausted = False
    stabilized = False
    for _ in range(depth):
        new: set[RationalAngle] = set()
        for a in sorted(frontier):
            for g in sorted(generators):
                s = a + g
                if s not in current and s not in new:
                    if len(current) + len(new) >= cap:
                        exhausted = True
                        break
                    new.add(s)
            if exhausted:
                break
        if exhausted:
            current |= new
            break
        if not new:
            stabilized = True
            break
        current |= new
        frontier = new
    return HullDisplacements(
        angles=tuple(sorted(current)),
        order_k=order_k,
        depth=depth,
        budget_exhausted=exhausted,
        stabilized=stabilized,
    )


def exact_density_gap(angles) -> Fraction:
    """Maximum circular gap between consecutive angles, as an exact rational.

    A single angle leaves the whole circle as its gap.
    """
    values = sorted(a.value if isinstance(a, RationalAngle) else Fraction(a) % 1
                    for a in angles)
    if not values:
        raise ValueError("need at least one angle")
    if len(values) == 1:
        return Fraction(1)
    gaps = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    gaps.append(1 - values[-1] + values[0])
    return max(gaps)
