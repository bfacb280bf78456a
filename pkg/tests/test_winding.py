#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.errors import ArgumentError, DomainError
from src.torus import (
    TWO_PI,
    SurfacePoint,
    WindingLine,
    angular_distance,
    closure_period,
    density_coverage,
    lattice_samples,
    sample_winding,
    winding_point,
    wrap_map,
    wrap_turns,
)


def flat_distance_to_origin(x, y):
    """平坦正方形上（对边粘合）到原点的距离"""
    return math.hypot(min(x, 1 - x), min(y, 1 - y))


class TestWindingLine:

    def test_zero_slope_pair_rejected(self):
        with pytest.raises(ArgumentError):
            WindingLine(0, 0)

    def test_point(self):
        p = winding_point(WindingLine(1, 3), math.pi / 2)
        assert p.u == pytest.approx(math.pi / 2)
        assert p.v == pytest.approx(3 * math.pi / 2)

    def test_exactness_flag(self):
        assert WindingLine(1, Fraction(1, 3)).exact
        assert not WindingLine(1, math.sqrt(2)).exact


class TestClosure:

    @pytest.mark.parametrize("a, b, period", [
        (1, 1, TWO_PI),
        (1, 3, TWO_PI),
        (1, 5, TWO_PI),
        (2, 4, math.pi),
    ])
    def test_integer_slopes(self, a, b, period):
        closure = closure_period(WindingLine(a, b))
        assert closure.period == pytest.approx(period, rel=1e-15)
        assert not closure.heuristic

    def test_turn_counts(self):
        closure = closure_period(WindingLine(2, 4))
        assert (closure.u_turns, closure.v_turns) == (1, 2)
        closure = closure_period(WindingLine(Fraction(1, 2), Fraction(1, 3)))
        assert closure.period == pytest.approx(12 * math.pi)
        assert (closure.u_turns, closure.v_turns) == (3, 2)

    def test_negative_and_axis_slopes(self):
        assert closure_period(WindingLine(-1, 3)).period == pytest.approx(TWO_PI)
        closure = closure_period(WindingLine(0, 2))
        assert closure.period == pytest.approx(math.pi)
        assert (closure.u_turns, closure.v_turns) == (0, 1)

    def test_float_slopes_are_heuristic(self):
        closure = closure_period(WindingLine(1.0, 3.0))
        assert closure.heuristic
        assert closure.period == pytest.approx(TWO_PI)
        assert (closure.u_turns, closure.v_turns) == (1, 3)

    def test_irrational_ratio_never_closes(self):
        assert closure_period(WindingLine(1, math.sqrt(2))) is None
        assert closure_period(WindingLine(1.0, math.pi)) is None

    @given(st.integers(min_value=1, max_value=12), st.integers(min_value=-12, max_value=12))
    def test_returns_to_start(self, a, b):
        line = WindingLine(a, b, 0.3, 1.1)
        closure = closure_period(line)
        start = winding_point(line, 0.0)
        end = winding_point(line, closure.period)
        assert angular_distance(start.u, end.u) < 1e-9
        assert angular_distance(start.v, end.v) < 1e-9

    @given(st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=12))
    def test_period_is_minimal(self, a, b):
        line = WindingLine(a, b)
        period = closure_period(line).period
        # 更短的整数分之一周期都不能同时回到起点
        for m in range(2, 7):
            p = winding_point(line, period / m)
            assert angular_distance(p.u, 0.0) > 1e-6 or angular_distance(p.v, 0.0) > 1e-6

    @pytest.mark.parametrize("a, b", [(1, 1), (1, 3), (2, 3), (3, 5), (4, 6), (1, -2), (5, 12)])
    def test_no_earlier_return_on_fine_grid(self, a, b):
        line = WindingLine(a, b)
        period = closure_period(line).period
        for j in range(1, 10000):
            p = winding_point(line, period * j / 10000)
            assert angular_distance(p.u, 0.0) > 1e-6 or angular_distance(p.v, 0.0) > 1e-6


class TestWrapMap:

    def test_opposite_edges_glued(self):
        assert wrap_map(1.0, 1.0) == SurfacePoint(0.0, 0.0)
        assert wrap_map(0.5, 0.25) == SurfacePoint(math.pi, math.pi / 2)

    def test_exact_turns(self):
        assert wrap_turns(Fraction(3, 5), Fraction(4, 5)) == (Fraction(3, 5), Fraction(4, 5))
        assert wrap_turns(1, Fraction(1, 2)) == (0, Fraction(1, 2))

    def test_domain(self):
        with pytest.raises(DomainError):
            wrap_map(1.5, 0.0)
        with pytest.raises(DomainError):
            wrap_turns(Fraction(-1, 2), 0)


class TestSampling:

    def test_sample_winding_endpoints(self):
        samples = sample_winding(WindingLine(1, 3), TWO_PI, 101)
        assert len(samples) == 101
        assert samples[0][0] == 0.0
        assert samples[-1][0] == TWO_PI

    def test_lattice_samples_coincide_with_start(self):
        for x, y in lattice_samples(WindingLine(1, 3), 5):
            assert flat_distance_to_origin(x, y) < 1e-9

    def test_lattice_samples_need_closed_line(self):
        with pytest.raises(ArgumentError):
            lattice_samples(WindingLine(1, math.sqrt(2)), 3)

    def test_sampling_domain(self):
        with pytest.raises(DomainError):
            sample_winding(WindingLine(1, 1), 0.0, 10)
        with pytest.raises(DomainError):
            sample_winding(WindingLine(1, 1), 1.0, 1)


class TestDensity:

    def test_irrational_line_is_dense(self):
        assert density_coverage(WindingLine(1, math.sqrt(2)), 2000.0, 100) >= 0.99

    def test_closed_line_covers_a_thin_band(self):
        assert density_coverage(WindingLine(1, 3), TWO_PI, 100) < 0.05

    def test_coverage_grows_with_horizon(self):
        line = WindingLine(1, math.sqrt(3))
        short = density_coverage(line, 50.0, 50)
        long = density_coverage(line, 500.0, 50)
        assert 0 < short < long <= 1

    @pytest.mark.parametrize("t_max", [1.0, 10.0, 100.0])
    def test_coverage_strictly_larger_at_ten_times_horizon(self, t_max):
        line = WindingLine(1, math.sqrt(2))
        assert density_coverage(line, t_max, 100) < density_coverage(line, 10 * t_max, 100)

    def test_chunking_does_not_change_result(self):
        line = WindingLine(1, math.sqrt(5))
        assert density_coverage(line, 300.0, 60) == density_coverage(line, 300.0, 60, chunk=1000)

    def test_domain(self):
        with pytest.raises(DomainError):
            density_coverage(WindingLine(1, 1), -1.0, 10)
        with pytest.raises(DomainError):
            density_coverage(WindingLine(1, 1), 1.0, 1)
