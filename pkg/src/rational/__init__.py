#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .rational_core import (
    Rational,
    rat_new,
    rat_pow,
    integer_nth_root,
    nth_root_exact,
    farey_successor,
    farey_enumerate,
    fractions_with_denominator,
    rational_reconstruct,
)

__all__ = [
    'Rational',
    'rat_new',
    'rat_pow',
    'integer_nth_root',
    'nth_root_exact',
    'farey_successor',
    'farey_enumerate',
    'fractions_with_denominator',
    'rational_reconstruct',
]
