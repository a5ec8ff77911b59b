"""Property-based invariants over random inputs (hypothesis)."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from naads import (
    CircleRotation,
    FlowCache,
    PiecewiseLinear,
    PowerMap,
    RationalAngle,
    Space,
    Verdict,
    corpus,
    exact_density_gap,
    hull_sample,
    li_yorke_classify,
    metric,
    omega,
    periodicity_check,
    replay_witness,
    return_time_set,
)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
circle_pt = st.floats(min_value=0.0, max_value=0.999999, allow_nan=False)
interior = st.floats(min_value=0.01, max_value=0.99)
small_frac = st.fractions(min_value=Fraction(-5), max_value=Fraction(5))
corpus_name = st.sampled_from(
    ["identity", "example1_tent_sqrt", "example2_powers", "circle_settling",
     "circle_ex4", "circle_harmonic", "interval_square_sqrt"]
)


class TestMapInvariants:
    @given(e=st.fractions(min_value=Fraction(1, 8), max_value=Fraction(8)), x=unit)
    def test_power_map_roundtrip(self, e, x):
        h = PowerMap(e)
        assert abs(h.inverse(h.forward(x)) - x) < 1e-9

    @given(angle=small_frac, x=circle_pt)
    def test_rotation_roundtrip(self, angle, x):
        h = CircleRotation(angle)
        y = h.forward(x)
        assert 0 <= y < 1
        assert metric(Space.CIRCLE, h.inverse(y), x) < 1e-12

    @given(
        mid=st.tuples(
            st.floats(min_value=0.05, max_value=0.95),
            st.floats(min_value=0.05, max_value=0.95),
        ),
        x=unit,
    )
    def test_piecewise_linear_roundtrip(self, mid, x):
        h = PiecewiseLinear([(0, 0), mid, (1, 1)])
        assert abs(h.inverse(h.forward(x)) - x) < 1e-9

    @given(x=circle_pt, y=circle_pt, z=circle_pt)
    def test_circle_metric_axioms(self, x, y, z):
        d = metric(Space.CIRCLE, x, y)
        assert 0 <= d <= 0.5
        assert d == metric(Space.CIRCLE, y, x)
        assert d <= metric(Space.CIRCLE, x, z) + metric(Space.CIRCLE, z, y) + 1e-12


class TestExactInvariants:
    @given(a=small_frac, b=small_frac)
    def test_angle_group_inverse(self, a, b):
        x, y = RationalAngle(a), RationalAngle(b)
        assert x + y - y == x
        assert (x + (-x)).is_zero

    @given(a=small_frac, b=small_frac)
    def test_angle_distance_matches_float_metric(self, a, b):
        x, y = RationalAngle(a), RationalAngle(b)
        d = x.distance(y)
        assert 0 <= d <= Fraction(1, 2)
        assert abs(float(d) - metric(Space.CIRCLE, float(x), float(y))) < 1e-12

    @given(q=st.integers(min_value=1, max_value=60))
    def test_density_gap_of_uniform_subgroup(self, q):
        angles = [RationalAngle(Fraction(m, q)) for m in range(q)]
        assert exact_density_gap(angles) == Fraction(1, q)


class TestFlowInvariants:
    @settings(max_examples=25, deadline=None)
    @given(name=corpus_name, x=interior, n=st.integers(min_value=-40, max_value=40))
    def test_cache_agrees_with_direct_evaluation(self, name, x, n):
        fam = corpus(name).family
        if fam.space is Space.CIRCLE:
            x = x % 1.0
        assert FlowCache(fam).omega(n, x) == omega(fam, n, x)

    @settings(max_examples=25, deadline=None)
    @given(name=corpus_name, x=interior, n=st.integers(min_value=1, max_value=40))
    def test_backward_undoes_forward(self, name, x, n):
        fam = corpus(name).family
        y = omega(fam, n, x)
        assert metric(fam.space, omega(fam, -n, y), x) < 1e-9

    @settings(max_examples=15, deadline=None)
    @given(name=corpus_name, x=interior, n_max=st.integers(min_value=1, max_value=15))
    def test_return_times_contain_zero_and_stay_sorted(self, name, x, n_max):
        rts = return_time_set(corpus(name).family, x, 0.25, n_max)
        assert 0 in rts.times
        assert rts.times == sorted(rts.times)
        assert all(-n_max <= t <= n_max for t in rts.times)

    @settings(max_examples=10, deadline=None)
    @given(
        name=st.sampled_from(["circle_settling", "circle_ex4", "circle_harmonic"]),
        x=interior,
        n_max=st.integers(min_value=1, max_value=15),
    )
    def test_rotation_return_times_are_symmetric(self, name, x, n_max):
        # the displacement at -n is the exact negation, so returns pair up
        rts = return_time_set(corpus(name).family, x, 0.2, n_max)
        assert sorted(-t for t in rts.times) == rts.times

    @settings(max_examples=10, deadline=None)
    @given(name=corpus_name, x=interior)
    def test_hull_contains_base_and_respects_dedup(self, name, x):
        fam = corpus(name).family
        hs = hull_sample(fam, x, order_k=2, depth=2, dedup_eps=1e-6)
        assert hs.points[0] == x
        for i, p in enumerate(hs.points):
            for q in hs.points[i + 1:]:
                assert metric(fam.space, p, q) >= 1e-6


class TestWitnessReplay:
    @settings(max_examples=20, deadline=None)
    @given(x=interior, y=interior)
    def test_li_yorke_witnesses_replay(self, x, y):
        fam = corpus("example2_powers").family
        rep = li_yorke_classify(fam, x, y, 40)
        for w in rep.witnesses:
            replayed = replay_witness(fam, w)
            assert all(
                abs(a - b) < 1e-12 for a, b in zip(replayed, w.distances)
            )

    @settings(max_examples=20, deadline=None)
    @given(x=circle_pt)
    def test_periodicity_refutation_witnesses_replay(self, x):
        fam = corpus("circle_settling").family
        rep = periodicity_check(fam, x, 2)
        assert rep.verdict is Verdict.REFUTED
        (w,) = rep.witnesses
        replayed = replay_witness(fam, w)
        assert all(abs(a - b) < 1e-12 for a, b in zip(replayed, w.distances))
