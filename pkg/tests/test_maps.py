"""Unit tests for the state spaces and the individual map types."""

import math
from fractions import Fraction

import pytest

from naads import (
    CircleRotation,
    Composite,
    ConstructionError,
    DomainError,
    PiecewiseLinear,
    PowerMap,
    Reflection,
    Space,
    contains,
    diameter,
    eval_map,
    metric,
    net_centers,
    normalize,
    uniform_grid,
    wrap_circle,
)


class TestSpace:
    def test_contains(self):
        assert contains(Space.UNIT_INTERVAL, 0) and contains(Space.UNIT_INTERVAL, 1)
        assert contains(Space.CIRCLE, 0) and not contains(Space.CIRCLE, 1)

    def test_normalize_clamps_roundoff(self):
        assert normalize(Space.UNIT_INTERVAL, 1 + 1e-12) == 1.0
        assert normalize(Space.UNIT_INTERVAL, -1e-12) == 0.0
        assert normalize(Space.CIRCLE, -1e-12) == pytest.approx(1 - 1e-12)
        with pytest.raises(DomainError):
            normalize(Space.UNIT_INTERVAL, 1.1)
        with pytest.raises(DomainError):
            normalize(Space.CIRCLE, 2.0)

    def test_wrap_circle(self):
        assert wrap_circle(1.25) == 0.25
        assert wrap_circle(-0.25) == 0.75
        assert wrap_circle(Fraction(5, 4)) == Fraction(1, 4)
        # guard against x % 1.0 returning 1.0 for tiny negatives
        assert 0 <= wrap_circle(-1e-18) < 1

    def test_metric(self):
        assert metric(Space.UNIT_INTERVAL, 0.2, 0.9) == pytest.approx(0.7)
        assert metric(Space.CIRCLE, 0.1, 0.9) == pytest.approx(0.2)
        # exact on Fractions
        assert metric(Space.CIRCLE, Fraction(1, 8), Fraction(7, 8)) == Fraction(1, 4)
        assert diameter(Space.CIRCLE) == 0.5
        assert diameter(Space.UNIT_INTERVAL) == 1.0

    def test_uniform_grid(self):
        g = uniform_grid(Space.UNIT_INTERVAL, 5)
        assert g == [0.0, 0.25, 0.5, 0.75, 1.0]
        g = uniform_grid(Space.CIRCLE, 4)
        assert g == [0.0, 0.25, 0.5, 0.75]
        with pytest.raises(ValueError):
            uniform_grid(Space.CIRCLE, 1)

    def test_net_centers_cover(self):
        for eps in (0.3, 0.1, 0.07):
            for space in Space:
                centers = net_centers(space, eps)
                # every point of a fine probe grid is within eps of a center
                for x in [i / 200 for i in range(200)]:
                    assert min(metric(space, x, c) for c in centers) <= eps


class TestPiecewiseLinear:
    def test_construction_validation(self):
        with pytest.raises(ConstructionError):
            PiecewiseLinear([(0, 0)])
        with pytest.raises(ConstructionError):
            PiecewiseLinear([(0, 0), (0.5, 0.6), (0.9, 1)])  # does not span
        with pytest.raises(ConstructionError):
            PiecewiseLinear([(0, 0), (0.5, 0.6), (1, 0.9)])  # not onto
        with pytest.raises(ConstructionError):
            PiecewiseLinear([(0, 0), (0.6, 0.5), (0.4, 0.7), (1, 1)])

    def test_values_and_inverse(self):
        h = PiecewiseLinear([(0, 0), (Fraction(1, 2), Fraction(1, 4)), (1, 1)])
        assert h.forward(0.5) == 0.25  # node value, exact
        assert h.forward(0.25) == 0.125
        assert h.forward(0.75) == pytest.approx(0.625)
        assert h.inverse(0.25) == 0.5
        for x in [i / 17 for i in range(18)]:
            assert h.inverse(h.forward(x)) == pytest.approx(x, abs=1e-15)

    def test_endpoints_fixed(self):
        h = PiecewiseLinear([(0, 0), (0.3, 0.7), (1, 1)])
        assert h.forward(0.0) == 0.0 and h.forward(1.0) == 1.0


class TestPowerMap:
    def test_exponent_validation(self):
        with pytest.raises(ConstructionError):
            PowerMap(0)
        with pytest.raises(ConstructionError):
            PowerMap(Fraction(-1, 2))

    def test_fixed_points_exact(self):
        h = PowerMap(Fraction(1, 2))
        assert h.forward(0.0) == 0.0 and h.forward(1.0) == 1.0
        assert h.inverse(0.0) == 0.0 and h.inverse(1.0) == 1.0

    def test_values(self):
        sq = PowerMap(2)
        assert sq.forward(0.5) == 0.25
        assert sq.inverse(0.25) == 0.5
        rt = PowerMap(Fraction(1, 2))
        assert rt.forward(0.25) == 0.5
        assert rt.forward(0.5) == pytest.approx(math.sqrt(0.5), abs=1e-16)

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            PowerMap(2).forward(1.5)


class TestCircleRotation:
    def test_rational_angle_stays_exact(self):
        r = CircleRotation(Fraction(1, 3))
        assert r.forward(Fraction(5, 6)) == Fraction(1, 6)
        assert r.inverse(Fraction(1, 6)) == Fraction(5, 6)

    def test_float_path_wraps(self):
        r = CircleRotation(0.75)
        assert r.forward(0.5) == pytest.approx(0.25)
        assert 0 <= r.forward(0.9999999999) < 1

    def test_inverse_roundtrip(self):
        r = CircleRotation(Fraction(2, 7))
        for x in [i / 13 for i in range(13)]:
            assert metric(Space.CIRCLE, r.inverse(r.forward(x)), x) < 1e-15


class TestReflectionComposite:
    def test_reflection_is_involution(self):
        h = Reflection()
        assert h.forward(0.3) == 0.7
        assert h.forward(h.forward(0.3)) == pytest.approx(0.3, abs=1e-15)
        assert h.forward(h.forward(0.25)) == 0.25  # exact on dyadics
        assert h.inverse(0.3) == 0.7

    def test_composite_order(self):
        # sqrt then reflect: x -> 1 - sqrt(x)
        h = Composite([PowerMap(Fraction(1, 2)), Reflection()])
        assert h.forward(0.25) == 0.5
        assert h.forward(0.0) == 1.0
        assert h.inverse(0.5) == 0.25
        for x in [i / 11 for i in range(12)]:
            assert h.inverse(h.forward(x)) == pytest.approx(x, abs=1e-12)

    def test_composite_needs_maps(self):
        with pytest.raises(ConstructionError):
            Composite([])

    def test_eval_map(self):
        h = PowerMap(2)
        assert eval_map(h, 0.5) == 0.25
        assert eval_map(h, 0.25, "inverse") == 0.5
        with pytest.raises(ValueError):
            eval_map(h, 0.5, "sideways")
