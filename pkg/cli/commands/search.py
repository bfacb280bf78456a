#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""search / triples / intersect 命令：有理点、整数三元组与交点"""

import logging
from typing import List, Sequence

from src.errors import ArgumentError
from src.search import (
    diophantine_triples_in_range,
    expand_multiples,
    line_curve_crossings,
    rational_points_for_denominators,
)
from cli.arguments import add_output_arguments, finite_float, positive_float, positive_int, resolve_format, slope
from cli.emitters import emit_csv
from cli.workers import TaskRunner

logger = logging.getLogger(__name__)

SEARCH_HEADER = ('x_num', 'x_den', 'y_num', 'y_den', 'n')
TRIPLES_HEADER = ('x', 'y', 'z')
INTERSECT_HEADER = ('x', 'y', 'rational', 'x_num', 'x_den', 'y_num', 'y_den')


def _strided_partitions(upper: int, parts: int) -> List[Sequence[int]]:
    """1..upper 按步长切分；大分母（开销大）均匀分布到各分区"""
    parts = max(1, min(parts, upper))
    return [range(start, upper + 1, parts) for start in range(1, parts + 1)]


def _range_partitions(upper: int, parts: int) -> List[range]:
    """1..upper 切成连续区间"""
    parts = max(1, min(parts, upper))
    size = -(-upper // parts)
    return [range(lo, min(lo + size, upper + 1)) for lo in range(1, upper + 1, size)]


def run_search(args, config) -> None:
    """search 命令：曲线上分母 <= max_den 的全部有理点"""
    resolve_format(args.out, args.format, ('csv',), 'search')

    runner = TaskRunner(config.THREADS)
    partitions = _strided_partitions(args.max_den, config.THREADS)
    results = runner.map(lambda dens: rational_points_for_denominators(args.n, dens), partitions)
    solutions = sorted((r for part in results for r in part), key=lambda r: r.sort_key)

    rows = [(r.x.numerator, r.x.denominator, r.y.numerator, r.y.denominator, r.n) for r in solutions]
    emit_csv(args.out, SEARCH_HEADER, rows)
    if not solutions:
        logger.info(f"n={args.n}, max_den={args.max_den} 范围内没有有理解")
    print(f"solutions={len(solutions)}")


def run_triples(args, config) -> None:
    """triples 命令：本原整数三元组，--expand 时包含倍数"""
    resolve_format(args.out, args.format, ('csv',), 'triples')

    runner = TaskRunner(config.THREADS)
    partitions = _range_partitions(args.max_z, config.THREADS)
    results = runner.map(lambda zs: diophantine_triples_in_range(args.n, zs.start, zs.stop - 1), partitions)
    triples = [t for part in results for t in part]
    if args.expand:
        triples = expand_multiples(triples, args.max_z)

    emit_csv(args.out, TRIPLES_HEADER, triples)
    print(f"triples={len(triples)}")


def run_intersect(args, config) -> None:
    """intersect 命令：缠绕直线与曲线的交点及有理性标注"""
    resolve_format(args.out, args.format, ('csv',), 'intersect')
    if args.a == 0 and args.b == 0:
        raise ArgumentError("斜率 (a, b) 不能同时为0")

    crossings = line_curve_crossings(args.n, args.a, args.b, args.max_den, args.tol, x0=args.x0, y0=args.y0)

    rows = []
    for c in crossings:
        if c.rational_label is None:
            rows.append((c.x, c.y, False, None, None, None, None))
        else:
            rx, ry = c.rational_label
            rows.append((c.x, c.y, True, rx.numerator, rx.denominator, ry.numerator, ry.denominator))
    emit_csv(args.out, INTERSECT_HEADER, rows)
    print(f"crossings={len(crossings)},rational={sum(c.is_rational for c in crossings)}")


def register(subparsers) -> None:
    """注册 search、triples、intersect 三个命令"""
    parser = subparsers.add_parser('search', help='曲线上的有理点')
    parser.add_argument('--n', type=positive_int, required=True)
    parser.add_argument('--max-den', type=positive_int, required=True)
    add_output_arguments(parser, ('csv',))
    parser.set_defaults(handler=run_search)

    parser = subparsers.add_parser('triples', help='本原整数三元组 xⁿ + yⁿ = zⁿ')
    parser.add_argument('--n', type=positive_int, required=True)
    parser.add_argument('--max-z', type=positive_int, required=True)
    parser.add_argument('--expand', action='store_true', help='同时输出倍数三元组')
    add_output_arguments(parser, ('csv',))
    parser.set_defaults(handler=run_triples)

    parser = subparsers.add_parser('intersect', help='缠绕直线与曲线的交点')
    parser.add_argument('--n', type=positive_int, required=True)
    parser.add_argument('--a', type=slope, required=True)
    parser.add_argument('--b', type=slope, required=True)
    parser.add_argument('--x0', type=finite_float, default=0.0)
    parser.add_argument('--y0', type=finite_float, default=0.0)
    parser.add_argument('--max-den', type=positive_int, default=10 ** 6)
    parser.add_argument('--tol', type=positive_float, default=1e-12)
    add_output_arguments(parser, ('csv',))
    parser.set_defaults(handler=run_intersect)
