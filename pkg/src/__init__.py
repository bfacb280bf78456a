#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Fermat曲线与环面工具包
提供精确有理数运算、曲线运动学、环面几何与测地线积分、有理点搜索功能
"""

# 导入各子模块
from . import rational
from . import kinematics
from . import torus
from . import search

# 从各子模块导入常用组件用于方便访问
from .rational import Rational, farey_enumerate, nth_root_exact, rational_reconstruct
from .kinematics import CurveParam, PhaseClass, curve_y, velocity, acceleration, phase_scan
from .torus import Torus, SurfacePoint, GeodesicState, WindingLine, integrate_geodesic, integrate_geodesic_batch, closure_period
from .search import SolutionRecord, CrossingRecord, rational_points_on_curve, diophantine_triples
from .errors import FermatTorusError, ArgumentError, DomainError, DivergenceSignal, NumericalFailure

# 定义公开的API
__all__ = [
    # 子模块
    'rational',
    'kinematics',
    'torus',
    'search',

    # 有理数
    'Rational',
    'farey_enumerate',
    'nth_root_exact',
    'rational_reconstruct',

    # 曲线运动学
    'CurveParam',
    'PhaseClass',
    'curve_y',
    'velocity',
    'acceleration',
    'phase_scan',

    # 环面
    'Torus',
    'SurfacePoint',
    'GeodesicState',
    'WindingLine',
    'integrate_geodesic',
    'integrate_geodesic_batch',
    'closure_period',

    # 搜索
    'SolutionRecord',
    'CrossingRecord',
    'rational_points_on_curve',
    'diophantine_triples',

    # 异常
    'FermatTorusError',
    'ArgumentError',
    'DomainError',
    'DivergenceSignal',
    'NumericalFailure',
]
