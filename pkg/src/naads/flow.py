"""Two-sided flow evaluation for indexed families of homeomorphisms.

The flow at time n >= 1 is the composition f_n o ... o f_1; time 0 is the
identity; time -n is the inverse of the time-n flow, i.e.
f_1^{-1} o ... o f_n^{-1}.  For families declared commutative the inverse
factors are applied in ascending index order instead (mathematically equal,
and it makes backward windows incremental); non-commutative families use the
literal descending order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BudgetError, ConstructionError
from .exact import RationalRotationFamily
from .maps import Composite, Homeomorphism
from .space import Space, metric

DEFAULT_HORIZON = 100_000


class MapFamily:
    """A state space plus the rule n -> f_n generating the flow.

    ``rule(n)`` must be defined for every n >= 1 up to the horizon; maps are
    memoized on first use.  ``declared_commutative`` and ``declared_isometric``
    are declarations to be audited, not assumed (see audit_commutativity /
    audit_isometry).  ``exact`` optionally carries the exact rational view of
    a rotation family.
    """

    def __init__(
        self,
        space: Space,
        rule: Callable[[int], Homeomorphism],
        name: str,
        declared_commutative: bool = False,
        declared_isometric: bool = False,
        horizon: int = DEFAULT_HORIZON,
        exact: Optional[RationalRotationFamily] = None,
    ):
        self.space = space
        self.rule = rule
        self.name = name
        self.declared_commutative = declared_commutative
        self.declared_isometric = declared_isometric
        self.horizon = horizon
        self.exact = exact
        self._map_cache: dict[int, Homeomorphism] = {}

    def map_at(self, n: int) -> Homeomorphism:
        if n < 1:
            raise ConstructionError("map indices start at 1")
        h = self._map_cache.get(n)
        if h is None:
            h = self.rule(n)
            self._map_cache[n] = h
        return h

    def __repr__(self):
        return f"MapFamily({self.name!r}, space={self.space.value})"


def omega(family: MapFamily, n: int, x):
    """State of the flow at signed time n started from x."""
    if abs(n) > family.horizon:
        raise BudgetError(f"time {n} exceeds horizon {family.horizon}")
    if n == 0:
        return x
    if n >= 1:
        for k in range(1, n + 1):
            x = family.map_at(k).forward(x)
        return x
    m = -n
    if family.declared_commutative:
        for k in range(1, m + 1):
            x = family.map_at(k).inverse(x)
    else:
        for k in range(m, 0, -1):
            x = family.map_at(k).inverse(x)
    return x


class FlowCache:
    """Memoized flow evaluation; cached values equal fresh omega() bit-for-bit.

    Forward trajectories are extended incrementally per base point.  Backward
    trajectories are incremental for commutative families (same operation
    order as omega); otherwise each backward value is computed by omega and
    memoized.  Confine an instance to one worker, or wrap it yourself.
    """

    def __init__(self, family: MapFamily):
        self.family = family
        self._fwd: dict = {}
        self._bwd: dict = {}
        self._bwd_memo: dict = {}

    def omega(self, n: int, x):
        fam = self.family
        if abs(n) > fam.horizon:
            raise BudgetError(f"time {n} exceeds horizon {fam.horizon}")
        if n == 0:
            return x
        if n > 0:
            traj = self._fwd.setdefault(x, [x])
            while len(traj) <= n:
                traj.append(fam.map_at(len(traj)).forward(traj[-1]))
            return traj[n]
        m = -n
        if fam.declared_commutative:
            traj = self._bwd.setdefault(x, [x])
            while len(traj) <= m:
                traj.append(fam.map_at(len(traj)).inverse(traj[-1]))
            return traj[m]
        key = (x, n)
        if key not in self._bwd_memo:
            self._bwd_memo[key] = omega(fam, n, x)
        return self._bwd_memo[key]

    def window(self, x, n_max: int) -> list:
        """Flow values at times -n_max..n_max, index i holding time i - n_max."""
        return [self.omega(n, x) for n in range(-n_max, n_max + 1)]


def orbit_window(family: MapFamily, x, n_max: int, cache: FlowCache | None = None):
    """Ordered list of (n, point) for n in [-n_max, n_max]."""
    if n_max < 0:
        raise ValueError("window size must be >= 0")
    cache = cache or FlowCache(family)
    return [(n, cache.omega(n, x)) for n in range(-n_max, n_max + 1)]


def block_family(family: MapFamily, r: int) -> MapFamily:
    """The family whose k-th map is the composite of the k-th length-r block.

    Block k applies f_{(k-1)r+1} first and f_{kr} last, so the block flow at
    time k equals the original flow at time k*r.  r = 1 returns the family
    unchanged.
    """
    if r < 1:
        raise ValueError("block size must be >= 1")
    if r == 1:
        return family

    def rule(k: int) -> Homeomorphism:
        return Composite([family.map_at((k - 1) * r + j) for j in range(1, r + 1)])

    return MapFamily(
        space=family.space,
        rule=rule,
        name=f"{family.name}|blocks[r={r}]",
        declared_commutative=family.declared_commutative,
        declared_isometric=family.declared_isometric,
        horizon=family.horizon // r,
        exact=family.exact.block(r) if family.exact is not None else None,
    )


@dataclass
class HullSample:
    """Finite deduplicated approximation of an order-k truncated hull.

    ``points`` lists points in discovery order (breadth-first by word length,
    then by flow index ascending); no two are closer than dedup_eps.
    ``stabilized`` records that an expansion round added nothing, i.e. the
    sample is closed under the truncated flow at this tolerance.
    """

    base: float
    order_k: int
    depth: int
    dedup_eps: float
    points: list = field(default_factory=list)
    budget_exhausted: bool = False
    stabilized: bool = False


def _points_budget(max_points: int | None) -> int:
    cap = max_points if max_points is not None else 4096
    env = os.environ.get("NAADS_BUDGET_POINTS")
    if env:
        cap = min(cap, int(env))
    return cap


def hull_sample(
    family: MapFamily,
    x,
    order_k: int,
    depth: int,
    dedup_eps: float = 1e-9,
    max_points: int | None = None,
    cache: FlowCache | None = None,
) -> HullSample:
    """Breadth-first enumeration of flow words applied to x.

    Words are compositions of flow maps at times r in {-order_k, .., order_k}
    (time 0 is the identity and is harmless), at most ``depth`` letters long.
    Deduplication keeps the first representative within dedup_eps.  Hitting
    ``max_points`` (globally capped by NAADS_BUDGET_POINTS) sets
    budget_exhausted; truncation is reported, never silent.
    """
    if order_k < 1 or depth < 1 or dedup_eps <= 0:
        raise ValueError("order_k, depth must be >= 1 and dedup_eps > 0")
    cap = _points_budget(max_points)
    cache = cache or FlowCache(family)
    space = family.space
    points = [x]
    frontier = [x]
    exhausted = False
    stabilized = False
    for _ in range(depth):
        new = []
        for y in frontier:
            for r in range(-order_k, order_k + 1):
                z = cache.omega(r, y)
                if all(metric(space, z, p) >= dedup_eps for p in points):
                    points.append(z)
                    new.append(z)
                    if len(points) >= cap:
                        exhausted = True
                        break
            if exhausted:
                break
        if exhausted:
            break
        if not new:
            stabilized = True
            break
        frontier = new
    return HullSample(
        base=x,
        order_k=order_k,
        depth=depth,
        dedup_eps=dedup_eps,
        points=points,
        budget_exhausted=exhausted,
        stabilized=stabilized,
    )


def audit_commutativity(
    family: MapFamily, horizon: int = 8, grid: int = 17, tol: float = 1e-9
):
    """Sampled check that f_i o f_j = f_j o f_i for i, j <= horizon.

    Returns (ok, max_deviation, witness) where witness is (i, j, x) for the
    largest deviation found.  Declarations are checked, never assumed.
    """
    from .space import uniform_grid

    worst = 0.0
    witness = None
    pts = uniform_grid(family.space, grid)
    for i in range(1, horizon + 1):
        fi = family.map_at(i)
        for j in range(i + 1, horizon + 1):
            fj = family.map_at(j)
            for x in pts:
                d = metric(family.space, fi.forward(fj.forward(x)),
                           fj.forward(fi.forward(x)))
                if d > worst:
                    worst = d
                    witness = (i, j, x)
    return worst <= tol, worst, witness


def audit_isometry(
    family: MapFamily, n_max: int = 100, pairs: int = 25, tol: float = 1e-12
):
    """Sampled check that the flow preserves distances up to |n| <= n_max."""
    from .space import uniform_grid

    cache = FlowCache(family)
    pts = uniform_grid(family.space, pairs + 1)
    worst = 0.0
    witness = None
    for a, b in zip(pts, pts[1:]):
        d0 = metric(family.space, a, b)
        for n in range(-n_max, n_max + 1):
            d = metric(family.space, cache.omega(n, a), cache.omega(n, b))
            if abs(d - d0) > worst:
                worst = abs(d - d0)
                witness = (a, b, n)
    return worst <= tol, worst, witness
