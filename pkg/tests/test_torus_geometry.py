#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.errors import DomainError
from src.torus import (
    TWO_PI,
    SurfacePoint,
    Torus,
    angular_distance,
    christoffels,
    christoffels_numeric,
    christoffels_printed,
    cylinder_point,
    embed,
    first_fundamental_form,
    implicit_residual,
    wrap_angle,
)

angles = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)


class TestTorus:

    def test_requires_ring_torus(self):
        with pytest.raises(DomainError):
            Torus(1.0, 1.0)
        with pytest.raises(DomainError):
            Torus(1.0, 2.0)
        with pytest.raises(DomainError):
            Torus(2.0, 0.0)

    @given(angles)
    def test_wrap_angle_range(self, a):
        w = wrap_angle(a)
        assert 0.0 <= w < TWO_PI
        assert angular_distance(w, a) < 1e-12

    def test_wrap_angle_examples(self):
        assert wrap_angle(TWO_PI) == 0.0
        assert wrap_angle(-1e-300) == 0.0
        assert wrap_angle(-math.pi / 2) == pytest.approx(3 * math.pi / 2)

    def test_surface_point_wraps(self):
        p = SurfacePoint(5 * math.pi, -math.pi / 2)
        assert p.u == pytest.approx(math.pi)
        assert p.v == pytest.approx(3 * math.pi / 2)
        assert p.flat() == pytest.approx((0.5, 0.75))


class TestEmbedding:

    def test_embed_examples(self, torus):
        assert embed(torus, SurfacePoint(0.0, 0.0)) == pytest.approx((3.0, 0.0, 0.0))
        assert embed(torus, SurfacePoint(0.0, math.pi)) == pytest.approx((1.0, 0.0, 0.0), abs=1e-15)
        assert embed(torus, SurfacePoint(math.pi / 2, math.pi / 2)) == pytest.approx((0.0, 2.0, 1.0), abs=1e-15)

    @given(angles, angles)
    def test_on_implicit_surface(self, u, v):
        torus = Torus(2.0, 1.0)
        assert abs(implicit_residual(torus, embed(torus, SurfacePoint(u, v)))) < 1e-12

    def test_cylinder_view(self, torus):
        x, y, z = cylinder_point(torus, SurfacePoint(math.pi, math.pi / 2))
        assert x == pytest.approx(2.0 * math.pi)
        assert (y, z) == pytest.approx((0.0, 1.0), abs=1e-15)


class TestMetric:

    def test_fundamental_form(self, torus):
        assert first_fundamental_form(torus, 0.0) == (9.0, 0.0, 1.0)
        assert first_fundamental_form(torus, math.pi) == pytest.approx((1.0, 0.0, 1.0))

    @pytest.mark.parametrize("v", [0.0, 0.4, 1.3, 2.9, 4.0])
    def test_fundamental_form_matches_embedding(self, torus, v):
        h = 1e-6
        u = 0.7
        du = (np.array(embed(torus, SurfacePoint(u + h, v))) - np.array(embed(torus, SurfacePoint(u - h, v)))) / (2 * h)
        dv = (np.array(embed(torus, SurfacePoint(u, v + h))) - np.array(embed(torus, SurfacePoint(u, v - h)))) / (2 * h)
        e, f, g = first_fundamental_form(torus, v)
        assert du @ du == pytest.approx(e, rel=1e-8)
        assert du @ dv == pytest.approx(f, abs=1e-8)
        assert dv @ dv == pytest.approx(g, rel=1e-8)

    def test_closed_form_matches_metric_derivative(self, torus):
        for v in np.linspace(0.0, TWO_PI, 1000):
            closed = christoffels(torus, float(v))
            numeric = christoffels_numeric(torus, float(v))
            assert closed == pytest.approx(numeric, abs=1e-8)

    def test_printed_variant_disagrees(self, torus):
        v = 1.0
        assert christoffels_printed(torus, v)[0] != pytest.approx(christoffels(torus, v)[0], rel=1e-3)
        assert christoffels_printed(torus, v)[1] == christoffels(torus, v)[1]

    def test_symbols_vanish_on_equator(self, torus):
        assert christoffels(torus, 0.0) == (-0.0, 0.0)

    def test_symbols_on_outer_meridian_point(self, torus):
        assert christoffels(torus, math.pi / 2) == pytest.approx((-0.5, 2.0), rel=1e-12)
        assert christoffels_numeric(torus, math.pi / 2) == pytest.approx((-0.5, 2.0), abs=1e-8)

    def test_numeric_step_must_be_positive(self, torus):
        with pytest.raises(DomainError):
            christoffels_numeric(torus, 0.3, h=0.0)
