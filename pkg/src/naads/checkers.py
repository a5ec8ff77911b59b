"""Finite-scale property checkers for non-autonomous flows.

Every checker is a pure function of (family, parameters) returning a
PropertyReport (or a small result record).  Infinite-time notions can never
be Certified from finite data except through exact rotation structure, so
most verdicts are EvidenceFor / EvidenceAgainst at the given budget; the
witness in a report always re-verifies through the flow (see replay_witness).

Search tie-breaking is deterministic everywhere: times are scanned in the
order 0, 1, -1, 2, -2, ... so the reported witness has least absolute time,
positive before negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .exact import exact_hull_displacements, exact_periodicity
from .flow import FlowCache, MapFamily, block_family, hull_sample, omega
from .report import PropertyReport, ReturnTimeSet, Verdict, Witness
from .space import (
    Space,
    diameter,
    exact_net_centers,
    metric,
    net_centers,
    uniform_grid,
)

FLOW_TOL = 1e-9
ASYMPTOTIC_TOL = 1e-3
LI_YORKE_LOW_TOL = 1e-3
LI_YORKE_HIGH_TOL = 0.3


def _scan_times(n_max: int):
    yield 0
    for n in range(1, n_max + 1):
        yield n
        yield -n


def _frac_circle_dist(a: Fraction, b: Fraction) -> Fraction:
    d = abs(a - b)
    return min(d, 1 - d)


# ---------------------------------------------------------------------------
# periodicity and return times


def periodicity_check(
    family: MapFamily, x, r: int, horizon: int = 25, tol: float = FLOW_TOL
) -> PropertyReport:
    """Does x return to itself at every multiple of r within the horizon?

    Exact rotation families yield Certified/Refuted; otherwise the verdict is
    EvidenceFor (max deviation <= tol at all |j| <= horizon) or Refuted with
    the smallest failing time.
    """
    if r < 1:
        raise ValueError("period must be >= 1")
    params = {"family": family.name, "x": x, "r": r, "horizon": horizon, "tol": tol}
    cache = FlowCache(family)

    if family.exact is not None:
        res = exact_periodicity(family.exact, r, horizon)
        if res.certified:
            max_dev = max(
                metric(family.space, cache.omega(j * r, x), x)
                for j in range(-horizon, horizon + 1)
            )
            return PropertyReport(
                "periodicity",
                Verdict.CERTIFIED,
                params,
                details={"max_deviation": max_dev, "mode": "exact"},
            )
        n = res.witness_time
        dev = metric(family.space, cache.omega(n, x), x)
        return PropertyReport(
            "periodicity",
            Verdict.REFUTED,
            params,
            witnesses=[Witness("point_return", (x,), (n,), (dev,))],
            details={
                "mode": "exact",
                "witness_displacement": str(res.witness_displacement),
            },
        )

    max_dev = 0.0
    for j in range(1, horizon + 1):
        for n in (j * r, -j * r):
            dev = metric(family.space, cache.omega(n, x), x)
            if dev > tol:
                return PropertyReport(
                    "periodicity",
                    Verdict.REFUTED,
                    params,
                    witnesses=[Witness("point_return", (x,), (n,), (dev,))],
                    details={"mode": "float"},
                )
            max_dev = max(max_dev, dev)
    return PropertyReport(
        "periodicity",
        Verdict.EVIDENCE_FOR,
        params,
        details={"max_deviation": max_dev, "mode": "float"},
    )


def _return_times(cache: FlowCache, x, eps, n_max: int) -> ReturnTimeSet:
    space = cache.family.space
    times = [
        n
        for n in range(-n_max, n_max + 1)
        if metric(space, cache.omega(n, x), x) < eps
    ]
    internal = max(
        (b - a for a, b in zip(times, times[1:])), default=0
    )
    return ReturnTimeSet(
        base=x,
        eps=eps,
        window_n=n_max,
        times=times,
        max_internal_gap=internal,
        censored_left_gap=times[0] + n_max,
        censored_right_gap=n_max - times[-1],
    )


def return_time_set(family: MapFamily, x, eps, n_max: int) -> ReturnTimeSet:
    """Times |n| <= n_max with d(omega_n(x), x) < eps, plus gap statistics."""
    if eps <= 0 or n_max < 1:
        raise ValueError("need eps > 0 and window >= 1")
    return _return_times(FlowCache(family), x, eps, n_max)


def _gap_bound(rts: ReturnTimeSet) -> int:
    return max(rts.max_internal_gap, rts.censored_left_gap, rts.censored_right_gap)


def almost_periodicity_report(
    family: MapFamily, x, eps, n_max: int
) -> PropertyReport:
    """Syndetic-return evidence over doubling windows n_max, 2n, 4n.

    A stable gap bound M across the doublings is evidence for almost
    periodicity; a growing (censored) gap is evidence against -- a finite
    window cannot certify unboundedness, so the trend is the signal.
    """
    params = {"family": family.name, "x": x, "eps": eps, "N": n_max}
    cache = FlowCache(family)
    windows = [n_max, 2 * n_max, 4 * n_max]
    gaps = [_gap_bound(_return_times(cache, x, eps, w)) for w in windows]
    trend = list(zip(windows, gaps))
    if gaps[2] > gaps[0]:
        return PropertyReport(
            "almost_periodicity",
            Verdict.EVIDENCE_AGAINST,
            params,
            details={"trend": trend},
        )
    return PropertyReport(
        "almost_periodicity",
        Verdict.EVIDENCE_FOR,
        params,
        details={"M": gaps[2], "trend": trend},
    )


def uniform_ap_report(
    family: MapFamily, eps, n_max: int, grid_size: int = 64
) -> PropertyReport:
    """One syndetic bound M for every grid point, or the worst offender."""
    if grid_size < 2:
        raise ValueError("grid_size must be >= 2")
    params = {"family": family.name, "eps": eps, "N": n_max, "grid_size": grid_size}
    cache = FlowCache(family)
    worst_m = 0
    for g in uniform_grid(family.space, grid_size):
        g1 = _gap_bound(_return_times(cache, g, eps, n_max))
        g2 = _gap_bound(_return_times(cache, g, eps, 2 * n_max))
        if g2 > g1:
            return PropertyReport(
                "uniform_almost_periodicity",
                Verdict.EVIDENCE_AGAINST,
                params,
                details={"worst_point": g, "gap_trend": [(n_max, g1), (2 * n_max, g2)]},
            )
        worst_m = max(worst_m, g2)
    return PropertyReport(
        "uniform_almost_periodicity",
        Verdict.EVIDENCE_FOR,
        params,
        details={"M": worst_m},
    )


# ---------------------------------------------------------------------------
# equicontinuity and sensitivity


def _nearby_pairs(space: Space, grid_pts, delta):
    off = 0.75 * delta
    pairs = []
    for x in grid_pts:
        if space is Space.CIRCLE:
            pairs.append((x, (x + off) % 1.0))
            pairs.append((x, (x - off) % 1.0))
        else:
            if x + off <= 1:
                pairs.append((x, x + off))
            if x - off >= 0:
                pairs.append((x, x - off))
    return pairs


def equicontinuity_modulus(
    family: MapFamily, eps, n_max: int = 50, pair_grid: int = 17
) -> PropertyReport:
    """Largest dyadic delta keeping sampled nearby pairs eps-close for |n| <= N.

    Candidates are eps, eps/2, ..., eps/2^20; pairs sit at distance
    0.75*delta around a uniform grid.  The modulus is recomputed at windows
    N, 2N, 4N: a strictly shrinking trend (or no passing candidate) is
    evidence against equicontinuity.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    params = {"family": family.name, "eps": eps, "N": n_max, "pair_grid": pair_grid}
    space = family.space
    cache = FlowCache(family)
    grid_pts = uniform_grid(space, pair_grid)
    candidates = [eps / 2 ** i for i in range(21)]
    windows = [n_max, 2 * n_max, 4 * n_max]

    deltas = []
    witness = None
    for w in windows:
        found = 0.0
        for delta in candidates:
            fail = None
            for a, b in _nearby_pairs(space, grid_pts, delta):
                for n in _scan_times(w):
                    d = metric(space, cache.omega(n, a), cache.omega(n, b))
                    if d >= eps:
                        fail = (a, b, n, d)
                        break
                if fail:
                    break
            if fail is None:
                found = delta
                break
            witness = fail
        deltas.append(found)

    trend = list(zip(windows, deltas))
    shrinking = (deltas[0] > deltas[1] > deltas[2]) or deltas[2] == 0.0
    details = {"delta": deltas[0], "trend": trend}
    witnesses = []
    if witness is not None:
        a, b, n, d = witness
        witnesses = [Witness("pair_orbit", (a, b), (n,), (d,))]
    verdict = Verdict.EVIDENCE_AGAINST if shrinking else Verdict.EVIDENCE_FOR
    return PropertyReport("equicontinuity", verdict, params, witnesses, details)


@dataclass(frozen=True)
class ProximalExtremes:
    """Extremes of the pair distance d(omega_n(x), omega_n(y)) over a window."""

    min_distance: float
    argmin_time: int
    max_distance: float
    argmax_time: int


def proximal_liminf(family: MapFamily, x, y, n_max: int) -> ProximalExtremes:
    """Min/max pair distance with witnessing times over |n| <= n_max."""
    space = family.space
    cache = FlowCache(family)
    best = worst = metric(space, x, y)
    t_best = t_worst = 0
    for n in _scan_times(n_max):
        d = metric(space, cache.omega(n, x), cache.omega(n, y))
        if d < best:
            best, t_best = d, n
        if d > worst:
            worst, t_worst = d, n
    return ProximalExtremes(best, t_best, worst, t_worst)


def li_yorke_classify(
    family: MapFamily,
    x,
    y,
    n_max: int,
    low_tol: float = LI_YORKE_LOW_TOL,
    high_tol: float = LI_YORKE_HIGH_TOL,
) -> PropertyReport:
    """Evidence that (x, y) gets both low_tol-close and high_tol-separated."""
    if low_tol >= high_tol:
        raise ValueError("low_tol must be below high_tol")
    params = {
        "family": family.name,
        "x": x,
        "y": y,
        "N": n_max,
        "low_tol": low_tol,
        "high_tol": high_tol,
    }
    ext = proximal_liminf(family, x, y, n_max)
    ok = ext.min_distance < low_tol and ext.max_distance > high_tol
    return PropertyReport(
        "li_yorke_pair",
        Verdict.EVIDENCE_FOR if ok else Verdict.EVIDENCE_AGAINST,
        params,
        witnesses=[
            Witness(
                "pair_orbit",
                (x, y),
                (ext.argmin_time, ext.argmax_time),
                (ext.min_distance, ext.max_distance),
            )
        ],
        details={
            "min_distance": ext.min_distance,
            "max_distance": ext.max_distance,
        },
    )


def _ball_samples(space: Space, x, radius, count: int):
    pts = []
    for i in range(count):
        off = radius * (2 * i / (count - 1) - 1)
        p = (x + off) % 1.0 if space is Space.CIRCLE else min(1.0, max(0.0, x + off))
        if all(q != p for q in pts):
            pts.append(p)
    return pts


def sensitivity_at_point(
    family: MapFamily,
    x,
    delta: float | None = None,
    radii=(0.1, 0.01),
    samples: int = 16,
    n_max: int = 100,
) -> PropertyReport:
    """Does every listed neighborhood of x expand past delta under the flow?

    Each ball is probed with boundary-and-interior samples; the sampled
    diameter is a lower bound on the true one, so EvidenceFor is safe and a
    refusal is conservative.  delta defaults to a quarter of the space
    diameter.
    """
    if samples < 2 or any(r <= 0 for r in radii):
        raise ValueError("need samples >= 2 and positive radii")
    space = family.space
    if delta is None:
        delta = diameter(space) / 4
    params = {
        "family": family.name,
        "x": x,
        "delta": delta,
        "radii": list(radii),
        "samples": samples,
        "N": n_max,
    }
    cache = FlowCache(family)
    witnesses = []
    for radius in radii:
        pts = _ball_samples(space, x, radius, samples)
        wins = [cache.window(p, n_max) for p in pts]
        hit = None
        for k in _scan_times(n_max):
            idx = k + n_max
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    d = metric(space, wins[i][idx], wins[j][idx])
                    if d > delta:
                        hit = Witness(
                            "pair_orbit",
                            (pts[i], pts[j]),
                            (k,),
                            (d,),
                            note=f"radius={radius!r}",
                        )
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            return PropertyReport(
                "sensitivity_at_point",
                Verdict.EVIDENCE_AGAINST,
                params,
                details={"unexpanded_radius": radius},
            )
        witnesses.append(hit)
    return PropertyReport(
        "sensitivity_at_point", Verdict.EVIDENCE_FOR, params, witnesses
    )


# ---------------------------------------------------------------------------
# density, transitivity, minimality


def _eps_dense(cache: FlowCache, x, eps, n_max: int):
    """Check the orbit window of x against a ceil(1/eps)-uniform net.

    Returns (dense, worst_center, worst_distance, worst_time) where the worst
    center is the one farthest from the orbit.
    """
    space = cache.family.space
    window = cache.window(x, n_max)
    worst_c, worst_d, worst_t = None, -1.0, 0
    for c in net_centers(space, eps):
        best_d, best_t = None, 0
        for n in _scan_times(n_max):
            d = metric(space, window[n + n_max], c)
            if best_d is None or d < best_d:
                best_d, best_t = d, n
        if best_d > worst_d:
            worst_c, worst_d, worst_t = c, best_d, best_t
    return worst_d <= eps, worst_c, worst_d, worst_t


def orbit_density(family: MapFamily, x, eps, n_max: int) -> PropertyReport:
    """Is the orbit window [-N, N] of x eps-dense in the space?"""
    if eps <= 0:
        raise ValueError("eps must be positive")
    params = {"family": family.name, "x": x, "eps": eps, "N": n_max}
    dense, c, d, t = _eps_dense(FlowCache(family), x, eps, n_max)
    details = {"max_center_distance": d, "worst_center": c}
    if dense:
        return PropertyReport(
            "orbit_density", Verdict.EVIDENCE_FOR, params, details=details
        )
    return PropertyReport(
        "orbit_density",
        Verdict.EVIDENCE_AGAINST,
        params,
        witnesses=[Witness("point_target", (x, c), (t,), (d,))],
        details=details,
    )


def transitivity_scan(
    family: MapFamily, eps, n_max: int, grid: int = 16
) -> PropertyReport:
    """Two finite-scale transitivity probes that must agree for commutative families.

    (a) dense-orbit search: some grid point has an eps-dense orbit window;
    (b) open-set scan: every ordered pair of eps-net balls (U, V) is linked
    by some sampled time |k| <= N.  Both true -> EvidenceFor; both false ->
    EvidenceAgainst; a disagreement means the scales are mismatched and the
    scan is inconclusive.
    """
    if grid < 2:
        raise ValueError("grid must be >= 2")
    params = {"family": family.name, "eps": eps, "N": n_max, "grid": grid}
    space = family.space
    cache = FlowCache(family)

    dense_point = None
    for g in uniform_grid(space, grid):
        dense, _, _, _ = _eps_dense(cache, g, eps, n_max)
        if dense:
            dense_point = g
            break
    sub_a = dense_point is not None

    centers = net_centers(space, eps)
    offsets = (0.0, 0.5 * eps, -0.5 * eps, 0.9 * eps, -0.9 * eps)
    ball: dict = {}
    for c in centers:
        pts = []
        for off in offsets:
            p = (c + off) % 1.0 if space is Space.CIRCLE else min(1.0, max(0.0, c + off))
            if metric(space, p, c) < eps and all(q != p for q in pts):
                pts.append(p)
        ball[c] = [(p, cache.window(p, n_max)) for p in pts]

    unmet = None
    for u in centers:
        for v in centers:
            met = False
            for k in _scan_times(n_max):
                idx = k + n_max
                for _, win in ball[u]:
                    if metric(space, win[idx], v) < eps:
                        met = True
                        break
                if met:
                    break
            if not met:
                unmet = (u, v)
                break
        if unmet:
            break
    sub_b = unmet is None

    details = {
        "dense_orbit": sub_a,
        "dense_orbit_point": dense_point,
        "open_set_scan": sub_b,
        "unmet_pair": unmet,
    }
    if sub_a and sub_b:
        verdict = Verdict.EVIDENCE_FOR
    elif not sub_a and not sub_b:
        verdict = Verdict.EVIDENCE_AGAINST
    else:
        verdict = Verdict.INCONCLUSIVE_BUDGET
    return PropertyReport("transitivity", verdict, params, details=details)


def r_transitivity_check(
    family: MapFamily, r: int, eps=0.05, n_max: int = 120, grid: int = 16
) -> PropertyReport:
    """Transitivity of the r-step block family.

    For exact rotation families the block displacements are additionally
    checked exactly; all-zero blocks (identity block family) are flagged.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    blocks = block_family(family, r)
    rep = transitivity_scan(blocks, eps, n_max, grid)
    rep.property = "r_transitivity"
    rep.parameters = dict(rep.parameters)
    rep.parameters["family"] = family.name
    rep.parameters["r"] = r
    if blocks.exact is not None:
        probe = min(n_max, 200)
        identity = all(
            blocks.exact.displacement(k).is_zero for k in range(1, probe + 1)
        )
        rep.details["identity_blocks"] = identity
        rep.details["identity_block_probe"] = probe
    return rep


def _hull_meets_all(space, points, centers, eps):
    """First (center, min distance) the hull misses, or None if all are met."""
    for c in centers:
        dmin = min(metric(space, p, c) for p in points)
        if dmin >= eps:
            return c, dmin
    return None


def minimality_certificate(
    family: MapFamily,
    eps,
    order_cap: int = 6,
    depth: int = 8,
    grid: int = 16,
) -> PropertyReport:
    """Smallest hull order k whose truncation meets every eps-ball from every grid point.

    Exact rotation families get a Certified(k) (hull displacements are exact
    prefix-sum combinations, checked in rational arithmetic); other families
    get EvidenceFor(k).  A grid point whose hull stabilizes under the full
    budget while missing some ball refutes; otherwise the budget was
    exhausted inconclusively.
    """
    if eps <= 0 or order_cap < 1 or depth < 1 or grid < 2:
        raise ValueError("bad minimality parameters")
    params = {
        "family": family.name,
        "eps": eps,
        "order_cap": order_cap,
        "depth": depth,
        "grid": grid,
    }

    if family.exact is not None and family.space is Space.CIRCLE:
        eps_f = eps if isinstance(eps, Fraction) else Fraction(eps)
        centers = exact_net_centers(Space.CIRCLE, eps)
        grid_x = [Fraction(j, grid) for j in range(grid)]
        last = None
        for k in range(1, order_cap + 1):
            hull = exact_hull_displacements(family.exact, k, depth)
            last = hull
            values = [a.value for a in hull.angles]
            miss = None
            for x in grid_x:
                pts = [(x + v) % 1 for v in values]
                for c in centers:
                    if all(_frac_circle_dist(p, c) >= eps_f for p in pts):
                        miss = (x, c)
                        break
                if miss:
                    break
            if miss is None:
                return PropertyReport(
                    "minimality",
                    Verdict.CERTIFIED,
                    params,
                    details={
                        "k": k,
                        "mode": "exact",
                        "hull_size": len(hull.angles),
                        "budget_exhausted": hull.budget_exhausted,
                    },
                )
        if last is not None and last.stabilized and not last.budget_exhausted:
            x, c = miss
            dmin = min(
                float(_frac_circle_dist((x + v) % 1, c))
                for v in [a.value for a in last.angles]
            )
            return PropertyReport(
                "minimality",
                Verdict.REFUTED,
                params,
                witnesses=[
                    Witness(
                        "hull_miss",
                        (float(x), float(c)),
                        (),
                        (dmin,),
                        note=f"order_k={order_cap}",
                    )
                ],
                details={"mode": "exact"},
            )
        return PropertyReport(
            "minimality",
            Verdict.INCONCLUSIVE_BUDGET,
            params,
            details={"mode": "exact"},
        )

    space = family.space
    centers = net_centers(space, eps)
    grid_pts = uniform_grid(space, grid)
    cache = FlowCache(family)
    full = {}
    for x in grid_pts:
        hs = hull_sample(family, x, order_cap, depth, cache=cache)
        full[x] = hs
        if hs.stabilized and not hs.budget_exhausted:
            missed = _hull_meets_all(space, hs.points, centers, eps)
            if missed is not None:
                c, dmin = missed
                return PropertyReport(
                    "minimality",
                    Verdict.REFUTED,
                    params,
                    witnesses=[
                        Witness(
                            "hull_miss",
                            (x, c),
                            (),
                            (dmin,),
                            note=f"order_k={order_cap}",
                        )
                    ],
                    details={"mode": "float", "hull_size": len(hs.points)},
                )
    for k in range(1, order_cap + 1):
        hulls = (
            full
            if k == order_cap
            else {
                x: hull_sample(family, x, k, depth, cache=cache) for x in grid_pts
            }
        )
        if all(
            _hull_meets_all(space, hulls[x].points, centers, eps) is None
            for x in grid_pts
        ):
            return PropertyReport(
                "minimality",
                Verdict.EVIDENCE_FOR,
                params,
                details={"k": k, "mode": "float"},
            )
    return PropertyReport(
        "minimality", Verdict.INCONCLUSIVE_BUDGET, params, details={"mode": "float"}
    )


# ---------------------------------------------------------------------------
# propagation properties over hulls


def _require_commutative(family: MapFamily, op: str):
    if not family.declared_commutative:
        raise PreconditionError(
            f"{op} requires a commutative family; {family.name!r} is not declared "
            "commutative (the property genuinely fails without commutativity)"
        )


def hull_periodicity_property(
    family: MapFamily,
    x,
    r: int,
    order_k: int = 8,
    depth: int = 6,
    horizon: int = 25,
    tol: float = FLOW_TOL,
) -> PropertyReport:
    """Every sampled hull point of a periodic point should share its period.

    Rejected for non-commutative families, where the property genuinely
    fails; a failing hull point on a commutative family is therefore a
    refutation witness (and in practice a bug indicator).
    """
    _require_commutative(family, "hull_periodicity_property")
    base = periodicity_check(family, x, r, horizon, tol)
    if base.verdict not in (Verdict.CERTIFIED, Verdict.EVIDENCE_FOR):
        raise PreconditionError(
            f"base point {x!r} is not period-{r} at horizon {horizon}"
        )
    params = {
        "family": family.name,
        "x": x,
        "r": r,
        "order_k": order_k,
        "depth": depth,
        "horizon": horizon,
        "tol": tol,
    }
    cache = FlowCache(family)
    hs = hull_sample(family, x, order_k, depth, cache=cache)
    for p in hs.points:
        rep = periodicity_check(family, p, r, horizon, tol)
        if rep.verdict not in (Verdict.CERTIFIED, Verdict.EVIDENCE_FOR):
            return PropertyReport(
                "hull_periodicity",
                Verdict.REFUTED,
                params,
                witnesses=list(rep.witnesses),
                details={"failing_point": p, "hull_size": len(hs.points)},
            )
    return PropertyReport(
        "hull_periodicity",
        Verdict.EVIDENCE_FOR,
        params,
        details={"hull_size": len(hs.points), "failing_points": 0},
    )


def ap_propagation_check(
    family: MapFamily,
    x,
    eps,
    n_max: int = 40,
    order_k: int = 4,
    depth: int = 3,
) -> PropertyReport:
    """Almost periodicity of x should propagate to its sampled hull points.

    Hull points are tested at 3*eps, the bound the triangle inequality gives
    when transporting returns from a nearby hull representative.
    """
    _require_commutative(family, "ap_propagation_check")
    base = almost_periodicity_report(family, x, eps, n_max)
    if base.verdict is not Verdict.EVIDENCE_FOR:
        raise PreconditionError(
            f"base point {x!r} shows no almost-periodicity evidence at eps={eps}"
        )
    params = {
        "family": family.name,
        "x": x,
        "eps": eps,
        "N": n_max,
        "order_k": order_k,
        "depth": depth,
    }
    cache = FlowCache(family)
    hs = hull_sample(family, x, order_k, depth, cache=cache)
    bounds = []
    for p in hs.points:
        rep = almost_periodicity_report(family, p, 3 * eps, n_max)
        if rep.verdict is not Verdict.EVIDENCE_FOR:
            return PropertyReport(
                "almost_periodicity_propagation",
                Verdict.EVIDENCE_AGAINST,
                params,
                details={"failing_point": p, "hull_size": len(hs.points)},
            )
        bounds.append(rep.details["M"])
    return PropertyReport(
        "almost_periodicity_propagation",
        Verdict.EVIDENCE_FOR,
        params,
        details={"common_M": max(bounds), "hull_size": len(hs.points)},
    )


def _hausdorff(space: Space, a_pts, b_pts) -> float:
    d_ab = max(min(metric(space, a, b) for b in b_pts) for a in a_pts)
    d_ba = max(min(metric(space, b, a) for a in a_pts) for b in b_pts)
    return max(d_ab, d_ba)


def hull_closure_equality(
    family: MapFamily,
    x,
    eps,
    n_max: int = 40,
    order_k: int = 4,
    depth: int = 3,
    y=None,
) -> PropertyReport:
    """Hulls of orbit points of x should match the hull of x within eps.

    Sampled y values come from the orbit of x unless an explicit ``y`` is
    given (supplying a closure limit instead of an orbit point is the known
    negative configuration: the match can fail there).  Requires
    equicontinuity evidence, short-circuited for declared isometries.
    """
    if not family.declared_isometric:
        eq = equicontinuity_modulus(family, eps, n_max=25, pair_grid=9)
        if eq.verdict is not Verdict.EVIDENCE_FOR:
            raise PreconditionError(
                f"{family.name!r} shows no equicontinuity evidence at eps={eps}"
            )
    params = {
        "family": family.name,
        "x": x,
        "eps": eps,
        "N": n_max,
        "order_k": order_k,
        "depth": depth,
        "y": y,
    }
    cache = FlowCache(family)
    hx = hull_sample(family, x, order_k, depth, cache=cache)
    if y is not None:
        ys = [y]
    else:
        ys = []
        for n in (1, -1, 2, -2, 3, -3):
            p = cache.omega(n, x)
            if all(q != p for q in ys):
                ys.append(p)
    worst_y, worst_d = None, -1.0
    for p in ys:
        hp = hull_sample(family, p, order_k, depth, cache=cache)
        d = _hausdorff(family.space, hx.points, hp.points)
        if d > worst_d:
            worst_y, worst_d = p, d
    details = {
        "worst_orbit_point": worst_y,
        "hausdorff_distance": worst_d,
        "hull_size": len(hx.points),
    }
    verdict = Verdict.EVIDENCE_FOR if worst_d <= eps else Verdict.EVIDENCE_AGAINST
    return PropertyReport("hull_closure_equality", verdict, params, details=details)


def dichotomy_scan(
    family: MapFamily,
    eps,
    delta: float | None = None,
    grid: int = 8,
    order_k: int = 3,
    depth: int = 2,
    n_max: int = 50,
) -> PropertyReport:
    """Equicontinuity evidence vs. sensitive grid points, with propagation.

    Reports (a) the equicontinuity verdict, (b) grid points showing
    sensitivity evidence, and (c) whether sensitivity propagates to sampled
    orbit points of each sensitive point.  A clean one-sided outcome is
    EvidenceFor the dichotomy; mixed signals are inconclusive at this budget.
    """
    _require_commutative(family, "dichotomy_scan")
    space = family.space
    if delta is None:
        delta = diameter(space) / 4
    params = {
        "family": family.name,
        "eps": eps,
        "delta": delta,
        "grid": grid,
        "order_k": order_k,
        "depth": depth,
        "N": n_max,
    }
    eq = equicontinuity_modulus(family, eps, n_max=n_max, pair_grid=9)

    radii = (eps, eps / 4)
    sensitive = []
    for g in uniform_grid(space, grid):
        rep = sensitivity_at_point(
            family, g, delta=delta, radii=radii, samples=8, n_max=n_max
        )
        if rep.verdict is Verdict.EVIDENCE_FOR:
            sensitive.append(g)

    propagation = True
    for p in sensitive[:3]:
        for n in (1, -1, 2):
            q = omega(family, n, p)
            rep = sensitivity_at_point(
                family, q, delta=delta, radii=radii, samples=8, n_max=n_max
            )
            if rep.verdict is not Verdict.EVIDENCE_FOR:
                propagation = False
                break
        if not propagation:
            break

    details = {
        "equicontinuity": eq.verdict,
        "delta_modulus": eq.details["delta"],
        "sensitive_points": sensitive,
        "propagation_holds": propagation,
    }
    equi = eq.verdict is Verdict.EVIDENCE_FOR
    if equi and not sensitive:
        verdict = Verdict.EVIDENCE_FOR
    elif not equi and sensitive and propagation:
        verdict = Verdict.EVIDENCE_FOR
    else:
        verdict = Verdict.INCONCLUSIVE_BUDGET
    return PropertyReport("dichotomy", verdict, params, details=details)


# ---------------------------------------------------------------------------
# witness replay


def replay_witness(family: MapFamily, witness: Witness, parameters: dict | None = None):
    """Recompute a witness's distances through the flow.

    Reports are trustworthy only if their witnesses reproduce: the returned
    tuple should match witness.distances within 1e-12.
    """
    space = family.space
    cache = FlowCache(family)
    kind = witness.kind
    if kind == "pair_orbit":
        a, b = witness.points
        return tuple(
            metric(space, cache.omega(t, a), cache.omega(t, b)) for t in witness.times
        )
    if kind == "point_return":
        (a,) = witness.points
        return tuple(metric(space, cache.omega(t, a), a) for t in witness.times)
    if kind == "point_target":
        a, b = witness.points
        return tuple(metric(space, cache.omega(t, a), b) for t in witness.times)
    if kind == "hull_miss":
        if not parameters:
            raise ValueError("hull_miss replay needs the report's parameter record")
        order_k = parameters.get("order_cap", parameters.get("order_k"))
        hs = hull_sample(family, witness.points[0], order_k, parameters["depth"], cache=cache)
        return (min(metric(space, p, witness.points[1]) for p in hs.points),)
    raise ValueError(f"unknown witness kind {kind!r}")
