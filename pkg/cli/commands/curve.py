#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""curve / kinematics 命令：曲线族与运动学采样"""

import math
import logging
from typing import List, Tuple

import numpy as np

from src.errors import ArgumentError, DivergenceSignal
from src.kinematics import CurveParam, acceleration, curve_y, sample_curve, velocity
from cli.arguments import add_output_arguments, float_list, positive_int, finite_float, resolve_format
from cli.emitters import PlotAxes, PlotSeries, emit_csv, emit_svg
from cli.workers import TaskRunner

logger = logging.getLogger(__name__)

CURVE_HEADER = ('x', 'n', 'y')
KINEMATICS_HEADER = ('x', 'n', 'y', 'vel', 'acc')

KinematicsRow = Tuple[float, float, float, float, float]


def _check_exponents(n_values: List[float]) -> None:
    for n in n_values:
        # CurveParam 负责 n > 0 的定义域检查
        CurveParam(n)
        if n < 1:
            raise ArgumentError(f"曲线族和运动学要求 n >= 1: n={n}")


def run_curve(args, config) -> None:
    """curve 命令：对每个 n 在 [0,1] 上等间距采样曲线"""
    fmt = resolve_format(args.out, args.format, ('csv', 'svg'), 'curve')
    _check_exponents(args.n)
    if args.samples < 2:
        raise ArgumentError(f"--samples 必须 >= 2: {args.samples}")

    runner = TaskRunner(config.THREADS)
    curves = runner.map(lambda n: sample_curve(n, args.samples), args.n)
    logger.info(f"曲线采样完成: {len(args.n)} 条曲线, 每条 {args.samples} 个点")

    if fmt == 'csv':
        rows = [(x, n, y) for n, points in zip(args.n, curves) for x, y in points]
        emit_csv(args.out, CURVE_HEADER, rows)
    else:
        series = [PlotSeries(f"n={n:g}", points) for n, points in zip(args.n, curves)]
        emit_svg(args.out, series, PlotAxes('x', 'y', x_range=(0.0, 1.0), y_range=(0.0, 1.0)))
    print(f"curves={len(args.n)},samples={args.samples}")


def _kinematics_rows(n: float, xs: List[float]) -> Tuple[List[KinematicsRow], int]:
    """单个 n 的全部样本；发散点的加速度记为 -inf"""
    rows = []
    divergent = 0
    for x in xs:
        try:
            acc = acceleration(x, n)
        except DivergenceSignal:
            acc = -math.inf
            divergent += 1
        rows.append((x, n, curve_y(x, n), velocity(x, n), acc))
    return rows, divergent


def run_kinematics(args, config) -> None:
    """kinematics 命令：在 [x_min, x_max] 上计算 y、速度、加速度"""
    fmt = resolve_format(args.out, args.format, ('csv', 'svg'), 'kinematics')
    _check_exponents(args.n)
    if not (0 <= args.x_min < args.x_max < 1):
        raise ArgumentError(f"要求 0 <= x_min < x_max < 1: x_min={args.x_min}, x_max={args.x_max}")
    if args.samples < 2:
        raise ArgumentError(f"--samples 必须 >= 2: {args.samples}")

    xs = [float(x) for x in np.linspace(args.x_min, args.x_max, args.samples)]
    runner = TaskRunner(config.THREADS)
    results = runner.map(lambda n: _kinematics_rows(n, xs), args.n)

    if fmt == 'csv':
        rows = []
        for n, (n_rows, divergent) in zip(args.n, results):
            if divergent:
                logger.warning(f"n={n:g} 有 {divergent} 个样本加速度发散到 -inf，CSV 中省略这些行")
            rows.extend(row for row in n_rows if math.isfinite(row[4]))
        count = emit_csv(args.out, KINEMATICS_HEADER, rows)
    else:
        column = 3 if args.plot == 'vel' else 4
        series = [
            PlotSeries(f"n={n:g}", [(row[0], row[column]) for row in n_rows])
            for n, (n_rows, _) in zip(args.n, results)
        ]
        emit_svg(args.out, series, PlotAxes('x', args.plot))
        count = sum(len(n_rows) for n_rows, _ in results)
    print(f"rows={count}")


def register(subparsers) -> None:
    """注册 curve 和 kinematics 两个命令"""
    parser = subparsers.add_parser('curve', help='曲线族 xⁿ + yⁿ = 1 的采样')
    parser.add_argument('--n', type=float_list, required=True, help='逗号分隔的指数列表，例如 1,2,3')
    parser.add_argument('--samples', type=positive_int, default=401, help='每条曲线的采样点数')
    add_output_arguments(parser, ('csv', 'svg'))
    parser.set_defaults(handler=run_curve)

    parser = subparsers.add_parser('kinematics', help='曲线的速度与加速度')
    parser.add_argument('--n', type=float_list, required=True, help='逗号分隔的指数列表，例如 1.9,2.0,2.1')
    parser.add_argument('--x-min', type=finite_float, default=0.001)
    parser.add_argument('--x-max', type=finite_float, default=0.999)
    parser.add_argument('--samples', type=positive_int, default=500)
    parser.add_argument('--plot', choices=('vel', 'acc'), default='acc', help='SVG 输出绘制的量')
    add_output_arguments(parser, ('csv', 'svg'))
    parser.set_defaults(handler=run_kinematics)
