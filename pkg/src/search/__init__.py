#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .intersection import (
    SolutionRecord,
    CrossingRecord,
    rational_points_on_curve,
    rational_points_for_denominators,
    diophantine_triples,
    diophantine_triples_in_range,
    expand_multiples,
    rescale_check,
    line_curve_crossings,
)

__all__ = [
    'SolutionRecord',
    'CrossingRecord',
    'rational_points_on_curve',
    'rational_points_for_denominators',
    'diophantine_triples',
    'diophantine_triples_in_range',
    'expand_multiples',
    'rescale_check',
    'line_curve_crossings',
]
