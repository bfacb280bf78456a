#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""geodesic / map-line / density 命令：环面上的测地线与缠绕直线"""

import logging
from typing import List, Tuple

from src.errors import ArgumentError
from src.torus import (
    TWO_PI,
    GeodesicState,
    Torus,
    WindingLine,
    closure_period,
    cylinder_point,
    density_coverage,
    embed,
    integrate_geodesic,
    integrate_geodesic_batch,
    random_geodesic_states,
    sample_winding,
)
from cli.arguments import add_output_arguments, finite_float, positive_float, positive_int, resolve_format, slope
from cli.emitters import PlotAxes, PlotSeries, emit_csv, emit_obj, emit_svg
from cli.workers import TaskRunner

logger = logging.getLogger(__name__)

GEODESIC_HEADER = ('t', 'u', 'v', 'du', 'dv', 'x', 'y', 'z', 'k', 'energy')
GEODESIC_BATCH_HEADER = ('index', 'u0', 'v0', 'du0', 'dv0', 'k_drift', 'energy_drift')
MAP_LINE_HEADER = ('t', 'u', 'v', 'x', 'y', 'z')
DENSITY_HEADER = ('t_max', 'grid_n', 'coverage')


def run_geodesic(args, config) -> None:
    """geodesic 命令：RK4 积分测地线并报告守恒量漂移"""
    fmt = resolve_format(args.out, args.format, ('csv', 'obj'), 'geodesic')
    torus = Torus(args.R, args.r)
    s0 = GeodesicState(args.u0, args.v0, args.du, args.dv)
    if args.step > args.t_max:
        raise ArgumentError(f"--step 不能大于 --t-max: step={args.step}, t_max={args.t_max}")

    if args.random_states:
        _run_geodesic_batch(args, fmt, torus)
        return

    trajectory = integrate_geodesic(torus, s0, args.t_max, args.step, record_every=args.every)

    if fmt == 'csv':
        emit_csv(args.out, GEODESIC_HEADER, [tuple(float(v) for v in row) for row in trajectory.as_array()])
    else:
        emit_obj(args.out, [sample.point for sample in trajectory.samples])
    print(f"k_drift={trajectory.k_drift:.3e},energy_drift={trajectory.energy_drift:.3e}")


def _run_geodesic_batch(args, fmt: str, torus: Torus) -> None:
    """--random-states：批量积分随机初始状态，每个状态输出一行漂移"""
    if fmt != 'csv':
        raise ArgumentError("--random-states 只支持 CSV 输出")
    states = random_geodesic_states(args.random_states, args.seed)
    batch = integrate_geodesic_batch(torus, states, args.t_max, args.step)
    rows = [(i, s.u, s.v, s.du, s.dv, float(k), float(e))
            for i, (s, k, e) in enumerate(zip(states, batch.k_drift, batch.energy_drift))]
    emit_csv(args.out, GEODESIC_BATCH_HEADER, rows)
    print(f"k_drift={batch.max_k_drift:.3e},energy_drift={batch.max_energy_drift:.3e}")


def _segments_on_square(samples) -> List[List[Tuple[float, float]]]:
    """按平坦正方形上的跨边位置把轨迹切成若干段，避免折线横穿正方形"""
    segments: List[List[Tuple[float, float]]] = []
    current: List[Tuple[float, float]] = []
    previous = None
    for _, point in samples:
        flat = point.flat()
        if previous is not None and (abs(flat[0] - previous[0]) > 0.5 or abs(flat[1] - previous[1]) > 0.5):
            segments.append(current)
            current = []
        current.append(flat)
        previous = flat
    if current:
        segments.append(current)
    return segments


def run_map_line(args, config) -> None:
    """map-line 命令：把平坦正方形上的直线映射到环面（或圆柱、平面）"""
    fmt = resolve_format(args.out, args.format, ('csv', 'svg', 'obj'), 'map-line')
    line = WindingLine(args.a, args.b, args.u0, args.v0)
    torus = Torus(args.R, args.r)
    if args.samples < 2:
        raise ArgumentError(f"--samples 必须 >= 2: {args.samples}")
    if fmt == 'svg' and args.view != 'flat':
        raise ArgumentError("SVG 输出只支持 --view flat")

    closure = closure_period(line)
    if args.t_max is not None:
        t_max = args.t_max
    elif closure is not None:
        t_max = closure.period
    else:
        raise ArgumentError(f"直线 {line.ratio_label} 不闭合，必须指定 --t-max")

    if closure is not None:
        logger.info(f"直线闭合: 周期={closure.period:.6g}, u方向 {closure.u_turns} 圈, "
                    f"v方向 {closure.v_turns} 圈, 启发式={closure.heuristic}")

    samples = sample_winding(line, t_max, args.samples)

    if fmt == 'svg':
        segments = _segments_on_square(samples)
        series = [PlotSeries(line.ratio_label if i == 0 else None, segment) for i, segment in enumerate(segments)]
        emit_svg(args.out, series, PlotAxes('x', 'y', x_range=(0.0, 1.0), y_range=(0.0, 1.0)))
        print(f"samples={len(samples)},t_max={t_max:.17g}")
        return

    if args.view == 'torus':
        points = [embed(torus, p) for _, p in samples]
    elif args.view == 'cylinder':
        points = [cylinder_point(torus, p) for _, p in samples]
    else:
        points = [(p.u / TWO_PI, p.v / TWO_PI, 0.0) for _, p in samples]

    if fmt == 'csv':
        rows = [(t, p.u, p.v, *xyz) for (t, p), xyz in zip(samples, points)]
        emit_csv(args.out, MAP_LINE_HEADER, rows)
    else:
        emit_obj(args.out, points)
    print(f"samples={len(samples)},t_max={t_max:.17g}")


def run_density(args, config) -> None:
    """density 命令：直线在网格上的覆盖率，--sweep 时 t_max 逐次加倍"""
    resolve_format(args.out, args.format, ('csv',), 'density')
    line = WindingLine(args.a, args.b)
    if args.grid < 2:
        raise ArgumentError(f"--grid 必须 >= 2: {args.grid}")

    horizons = [args.t_max * 2 ** i for i in range(args.sweep)]
    runner = TaskRunner(config.THREADS)
    coverages = runner.map(lambda t_max: density_coverage(line, t_max, args.grid), horizons)

    emit_csv(args.out, DENSITY_HEADER, [(t, args.grid, c) for t, c in zip(horizons, coverages)])
    print(f"coverage={coverages[-1]:.6f}")


def register(subparsers) -> None:
    """注册 geodesic、map-line、density 三个命令"""
    parser = subparsers.add_parser('geodesic', help='环面测地线积分')
    parser.add_argument('--R', type=positive_float, default=2.0, help='大半径')
    parser.add_argument('--r', type=positive_float, default=1.0, help='小半径')
    parser.add_argument('--u0', type=finite_float, default=0.0)
    parser.add_argument('--v0', type=finite_float, default=0.0)
    parser.add_argument('--du', type=finite_float, default=1.0)
    parser.add_argument('--dv', type=finite_float, default=0.0)
    parser.add_argument('--t-max', type=positive_float, default=100.0)
    parser.add_argument('--step', type=positive_float, default=0.001)
    parser.add_argument('--every', type=positive_int, default=1, help='每隔多少步记录一个点')
    parser.add_argument('--random-states', type=positive_int, default=None, help='批量积分 N 个随机初始状态')
    parser.add_argument('--seed', type=int, default=0, help='随机初始状态的种子')
    add_output_arguments(parser, ('csv', 'obj'))
    parser.set_defaults(handler=run_geodesic)

    parser = subparsers.add_parser('map-line', help='缠绕直线映射到环面')
    parser.add_argument('--a', type=slope, required=True, help='u 方向斜率')
    parser.add_argument('--b', type=slope, required=True, help='v 方向斜率')
    parser.add_argument('--u0', type=finite_float, default=0.0)
    parser.add_argument('--v0', type=finite_float, default=0.0)
    parser.add_argument('--R', type=positive_float, default=2.0)
    parser.add_argument('--r', type=positive_float, default=1.0)
    parser.add_argument('--samples', type=positive_int, default=2001)
    parser.add_argument('--t-max', type=positive_float, default=None, help='默认取闭合周期')
    parser.add_argument('--view', choices=('torus', 'cylinder', 'flat'), default='torus')
    add_output_arguments(parser, ('csv', 'svg', 'obj'))
    parser.set_defaults(handler=run_map_line)

    parser = subparsers.add_parser('density', help='缠绕直线的稠密覆盖率')
    parser.add_argument('--a', type=slope, required=True)
    parser.add_argument('--b', type=slope, required=True)
    parser.add_argument('--t-max', type=positive_float, default=2000.0)
    parser.add_argument('--grid', type=positive_int, default=100)
    parser.add_argument('--sweep', type=positive_int, default=1, help='t_max 加倍的次数（输出行数）')
    add_output_arguments(parser, ('csv',))
    parser.set_defaults(handler=run_density)
