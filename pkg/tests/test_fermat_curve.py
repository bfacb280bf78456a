#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.errors import DivergenceSignal, DomainError, SingularityError
from src.kinematics import (
    CurveParam,
    PhaseClass,
    acceleration,
    curve_y,
    finite_diff_oracle,
    kinematics_sample,
    phase_class,
    phase_scan,
    sample_curve,
    velocity,
    velocity_slope,
)

ORACLE_X = [round(0.05 * i, 2) for i in range(1, 20)]
ORACLE_N = [1.5, 1.9, 2.0, 2.1, 3.0, 4.0]


class TestCurve:

    def test_endpoints_are_exact(self):
        assert curve_y(0.0, 3.7) == 1.0
        assert curve_y(1.0, 3.7) == 0.0

    def test_line(self):
        assert curve_y(0.25, 1) == 0.75

    def test_circle(self):
        assert curve_y(0.6, 2) == pytest.approx(0.8, rel=1e-15)

    @given(st.floats(min_value=1e-6, max_value=1 - 1e-6), st.floats(min_value=1.0, max_value=12.0))
    def test_on_curve(self, x, n):
        y = curve_y(x, n)
        assert 0 <= y <= 1
        assert x ** n + y ** n == pytest.approx(1.0, abs=1e-12)

    @given(st.floats(min_value=1e-3, max_value=0.999), st.floats(min_value=1.0, max_value=8.0))
    def test_involution(self, t, n):
        # xⁿ 低于 ε 量级时 1 - xⁿ 舍入为 1，x 约小于 ε^(1/n) 时回代丢失精度；这里取 xⁿ ∈ [1e-3, 0.999]
        x = t ** (1 / n)
        assert curve_y(curve_y(x, n), n) == pytest.approx(x, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            curve_y(-0.1, 2)
        with pytest.raises(DomainError):
            curve_y(1.1, 2)
        with pytest.raises(DomainError):
            curve_y(0.5, 0)

    def test_sample_curve(self):
        points = sample_curve(3.0, 11)
        assert len(points) == 11
        assert points[0] == (0.0, 1.0)
        assert points[-1] == (1.0, 0.0)
        xs = [x for x, _ in points]
        assert xs == sorted(xs)

    def test_family_converges_to_square(self):
        # n 越大曲线越接近单位正方形的两条边
        heights = [curve_y(0.9, n) for n in range(1, 11)]
        assert heights == sorted(heights)
        assert curve_y(0.5, 50) > 0.98


class TestKinematics:

    def test_velocity_examples(self):
        assert velocity(0.0, 2) == 0.0
        assert velocity(0.6, 2) == pytest.approx(-0.75, rel=1e-14)
        assert velocity(0.3, 1) == -1.0

    def test_acceleration_phase_values_at_zero(self):
        assert acceleration(0.0, 2) == -1.0
        assert acceleration(0.0, 3) == 0.0
        assert acceleration(0.0, 2.1) == 0.0
        assert acceleration(0.5, 1) == 0.0

    def test_circle_acceleration_closed_form(self):
        for x in np.linspace(0.0, 0.99, 9901):
            x = float(x)
            assert acceleration(x, 2) == pytest.approx(-(1.0 - x * x) ** -1.5, abs=1e-12)

    @given(st.floats(min_value=1e-3, max_value=1 - 1e-3), st.floats(min_value=1.01, max_value=12.0))
    def test_velocity_and_acceleration_negative_inside(self, x, n):
        assert velocity(x, n) < 0
        assert acceleration(x, n) < 0

    def test_divergence_is_signal_not_domain_error(self):
        with pytest.raises(DivergenceSignal) as exc_info:
            acceleration(0.0, 1.9)
        assert not isinstance(exc_info.value, DomainError)
        assert exc_info.value.n == 1.9

    def test_singularity_at_one(self):
        with pytest.raises(SingularityError):
            velocity(1.0, 2)
        with pytest.raises(SingularityError):
            acceleration(1.0, 3)

    def test_kinematic_exponent_bound(self):
        with pytest.raises(DomainError):
            velocity(0.5, 0.5)

    def test_acceleration_below_two_follows_small_x_asymptote(self):
        values = []
        for k in range(5, 21):
            x = 10.0 ** -k
            acc = acceleration(x, 1.9)
            assert acc == pytest.approx(-0.9 * 10 ** (k / 10), rel=1e-6)
            values.append(acc)
        assert all(later < earlier for earlier, later in zip(values, values[1:]))

    def test_acceleration_above_two_vanishes(self):
        for k in range(5, 21):
            x = 10.0 ** -k
            assert abs(acceleration(x, 2.1)) < 10 ** (-k / 10) * 1.1 * 1.0001

    def test_no_transition_near_three(self):
        result = phase_scan([2.9, 3.0, 3.1], [1e-8, 0.5])
        assert set(result.classes.values()) == {PhaseClass.LIMIT_ZERO}
        for n in (2.9, 3.0, 3.1):
            assert abs(acceleration(1e-8, n)) < 1e-6

    def test_velocity_slope_near_zero(self):
        assert velocity_slope(1e-6, 2, 1e-7) == pytest.approx(-1.0, abs=1e-4)

        below = [abs(velocity_slope(10.0 ** -k, 1.9, 10.0 ** -(k + 1))) for k in (4, 6, 8, 10)]
        assert below == sorted(below)
        assert below[-1] > 5

        above = [abs(velocity_slope(10.0 ** -k, 2.1, 10.0 ** -(k + 1))) for k in (4, 6, 8, 10)]
        assert above == sorted(above, reverse=True)
        assert above[-1] < 0.2

    @pytest.mark.parametrize("n", ORACLE_N)
    def test_closed_forms_match_finite_differences(self, n):
        for x in ORACLE_X:
            vel_fd, _ = finite_diff_oracle(x, n, 1e-5)
            _, acc_fd = finite_diff_oracle(x, n, 1e-4)
            assert velocity(x, n) == pytest.approx(vel_fd, rel=1e-6)
            assert acceleration(x, n) == pytest.approx(acc_fd, rel=1e-4)

    def test_oracle_stencil_must_fit(self):
        with pytest.raises(DomainError):
            finite_diff_oracle(0.05, 2, 0.1)
        with pytest.raises(DomainError):
            finite_diff_oracle(0.5, 2, 0.0)

    def test_kinematics_sample(self):
        s = kinematics_sample(0.6, 2)
        assert (s.x, s.n) == (0.6, 2)
        assert s.y == pytest.approx(0.8)
        assert s.vel == pytest.approx(-0.75)
        assert s.acc == pytest.approx(-1 / 0.8 ** 3)

    def test_curve_param(self):
        p = CurveParam(2.5)
        assert p.y(0.5) == curve_y(0.5, 2.5)
        assert p.phase is PhaseClass.LIMIT_ZERO
        with pytest.raises(DomainError):
            CurveParam(0)
        with pytest.raises(DomainError):
            CurveParam(math.inf)


class TestPhase:

    @pytest.mark.parametrize("n, expected", [
        (1.0, PhaseClass.LIMIT_ZERO),
        (1.5, PhaseClass.DIVERGES_NEG),
        (1.999, PhaseClass.DIVERGES_NEG),
        (2.0, PhaseClass.FINITE_MINUS_ONE),
        (2.001, PhaseClass.LIMIT_ZERO),
        (7.0, PhaseClass.LIMIT_ZERO),
    ])
    def test_classes(self, n, expected):
        assert phase_class(n) is expected

    def test_scan_order_and_size(self):
        xs = list(np.linspace(0.01, 0.99, 7))
        result = phase_scan([1.9, 2.0, 2.1], xs)
        assert len(result.samples) == 21
        assert [(s.n, s.x) for s in result.samples] == [(n, x) for n in (1.9, 2.0, 2.1) for x in xs]
        assert len(result.samples_for(2.0)) == 7
        assert result.classes[1.9] is PhaseClass.DIVERGES_NEG
        assert result.classes[2.0] is PhaseClass.FINITE_MINUS_ONE

    def test_scan_rejects_bad_grids(self):
        with pytest.raises(DomainError):
            phase_scan([2.0, 1.9], [0.5])
        with pytest.raises(DomainError):
            phase_scan([2.0], [0.0, 0.5])
        with pytest.raises(DomainError):
            phase_scan([2.0], [0.5, 0.5])
        with pytest.raises(DomainError):
            phase_scan([], [0.5])
