#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
平坦环面上的直线缠绕（映射 ℳ）

平坦正方形 [0,1]² 对边粘合是内部的标准表示，三维嵌入只是视图。
直线 u = a·t + u0, v = b·t + v0 在 b/a 为有理数时闭合，周期 T 满足
a·T ≡ 0 且 b·T ≡ 0 (mod 2π)；b/a 为无理数时轨道在环面上稠密。
"""

import math
import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as RationalNumber
from typing import List, Optional, Tuple, Union

import numpy as np

from src.errors import ArgumentError, DomainError
from src.rational import Rational, rational_reconstruct
from .geometry import TWO_PI, SurfacePoint

logger = logging.getLogger(__name__)

Slope = Union[int, Fraction, float]

# 浮点斜率的闭合判定：比值的连分数重建上界与容差
CLOSURE_MAX_DEN = 10 ** 6
CLOSURE_TOL = 1e-13


def _is_exact(value: Slope) -> bool:
    return isinstance(value, RationalNumber)


@dataclass(frozen=True)
class WindingLine:
    """平坦环面上的直线：斜率 (a, b) 与初始角度 (u0, v0)"""
    a: Slope
    b: Slope
    u0: float = 0.0
    v0: float = 0.0

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ArgumentError("斜率 (a, b) 不能同时为0")
        for value in (self.a, self.b, self.u0, self.v0):
            if not math.isfinite(float(value)):
                raise ArgumentError(f"直线参数必须有限: {self}")

    @property
    def exact(self) -> bool:
        """两个斜率都是精确有理数（int / Fraction）"""
        return _is_exact(self.a) and _is_exact(self.b)

    @property
    def ratio_label(self) -> str:
        """b/a 的文字描述"""
        if self.exact and self.a != 0:
            return f"b/a={Fraction(self.b) / Fraction(self.a)}"
        return f"a={self.a}, b={self.b}"


@dataclass(frozen=True)
class ClosurePeriod:
    """
    闭合周期

    period: 最小正周期 T
    u_turns, v_turns: 一个周期内两个方向完成的整圈数
    heuristic: 由浮点数重建判定（非精确输入）时为 True
    """
    period: float
    u_turns: int
    v_turns: int
    heuristic: bool


def winding_point(line: WindingLine, t: float) -> SurfacePoint:
    """
    直线在参数 t 处的位置

    Args:
        line: 缠绕直线
        t: 参数

    Returns:
        SurfacePoint: (a·t + u0, b·t + v0) 约化到 [0, 2π)
    """
    return SurfacePoint(float(line.a) * t + line.u0, float(line.b) * t + line.v0)


def _rational_gcd(x: Fraction, y: Fraction) -> Fraction:
    """有理数的最大公约数：gcd(p1/q1, p2/q2) = gcd(p1 q2, p2 q1) / (q1 q2)"""
    return Fraction(math.gcd(x.numerator * y.denominator, y.numerator * x.denominator),
                    x.denominator * y.denominator)


def closure_period(line: WindingLine) -> Optional[ClosurePeriod]:
    """
    计算直线的最小闭合周期

    精确输入（int / Fraction）直接用有理数 gcd 计算：T = 2π / gcd(|a|, |b|)。
    浮点输入先把 min(|a|,|b|)/max(|a|,|b|) 用连分数重建为 p/q
    （分母上界 10⁶），结果标记为 heuristic。

    Args:
        line: 缠绕直线

    Returns:
        Optional[ClosurePeriod]: 比值为无理数（或重建失败）时返回 None
    """
    if line.exact:
        a, b = abs(Fraction(line.a)), abs(Fraction(line.b))
        g = _rational_gcd(a, b)
        tau = 1 / g
        u_turns, v_turns = a * tau, b * tau
        return ClosurePeriod(
            period=TWO_PI * float(tau),
            u_turns=int(u_turns),
            v_turns=int(v_turns),
            heuristic=False,
        )

    a, b = abs(float(line.a)), abs(float(line.b))
    larger, smaller = max(a, b), min(a, b)
    ratio = rational_reconstruct(smaller / larger, CLOSURE_MAX_DEN, CLOSURE_TOL)
    if ratio is None:
        logger.debug(f"斜率比值 {smaller / larger!r} 在分母 <= {CLOSURE_MAX_DEN} 内无有理重建，视为不闭合")
        return None

    p, q = ratio.numerator, ratio.denominator
    if a >= b:
        u_turns, v_turns = q, p
    else:
        u_turns, v_turns = p, q
    return ClosurePeriod(period=TWO_PI * q / larger, u_turns=u_turns, v_turns=v_turns, heuristic=True)


def wrap_map(x: float, y: float) -> SurfacePoint:
    """
    映射 ℳ：平坦正方形上的点到环面角度 (2πx, 2πy)

    Args:
        x: [0,1] 内的横坐标
        y: [0,1] 内的纵坐标

    Returns:
        SurfacePoint: 正方形的对边粘合，因此 (1, 1) 映射到 (0, 0)
    """
    if not (0 <= x <= 1 and 0 <= y <= 1):
        raise DomainError(f"坐标必须在[0,1]内: ({x}, {y})")
    return SurfacePoint(TWO_PI * float(x), TWO_PI * float(y))


def wrap_turns(x: Rational, y: Rational) -> Tuple[Rational, Rational]:
    """
    wrap_map 的精确版本：以 2π 为单位的角度（圈数）

    Args:
        x: [0,1] 内的有理数
        y: [0,1] 内的有理数

    Returns:
        Tuple[Rational, Rational]: (x mod 1, y mod 1)
    """
    x, y = Fraction(x), Fraction(y)
    if not (0 <= x <= 1 and 0 <= y <= 1):
        raise DomainError(f"坐标必须在[0,1]内: ({x}, {y})")
    return x % 1, y % 1


def sample_winding(line: WindingLine, t_max: float, samples: int) -> List[Tuple[float, SurfacePoint]]:
    """
    在 [0, t_max] 上等间距采样直线，最后一个样本恰好在 t_max

    Args:
        line: 缠绕直线
        t_max: 参数终点，> 0
        samples: 采样点数，>= 2

    Returns:
        List[Tuple[float, SurfacePoint]]: (t, 点) 列表
    """
    if not (t_max > 0):
        raise DomainError(f"t_max必须 > 0: {t_max}")
    if samples < 2:
        raise DomainError(f"采样点数必须 >= 2: {samples}")
    ts = np.linspace(0.0, t_max, samples)
    return [(float(t), winding_point(line, float(t))) for t in ts]


def lattice_samples(line: WindingLine, count: int) -> List[Tuple[float, float]]:
    """
    周期整数倍处 γ(kT) 在平坦正方形上的投影，k = 0..count-1

    闭合直线在每个周期末回到起点，因此所有样本都与起点重合。

    Args:
        line: 闭合的缠绕直线
        count: 样本数，>= 1

    Returns:
        List[Tuple[float, float]]: 平坦坐标 (x, y) 列表
    """
    if count < 1:
        raise DomainError(f"样本数必须 >= 1: {count}")
    closure = closure_period(line)
    if closure is None:
        raise ArgumentError(f"直线不闭合，周期未定义: {line.ratio_label}")
    return [winding_point(line, k * closure.period).flat() for k in range(count)]


def density_coverage(line: WindingLine, t_max: float, grid_n: int, chunk: int = 1_000_000) -> float:
    """
    直线在 [0, t_max] 内经过的网格单元比例

    (u, v) 正方形划分为 grid_n × grid_n 个单元；采样步长取半个单元除以最大角速度，
    相邻样本在两个方向上的移动都小于一个单元。

    Args:
        line: 缠绕直线
        t_max: 参数终点，> 0
        grid_n: 每个方向的单元数，>= 2
        chunk: 每批处理的样本数

    Returns:
        float: 被访问单元的比例，[0, 1]
    """
    if not (t_max > 0) or math.isinf(t_max):
        raise DomainError(f"t_max必须是正的有限数: {t_max}")
    if grid_n < 2:
        raise DomainError(f"grid_n必须 >= 2: {grid_n}")

    a, b = float(line.a), float(line.b)
    cell = TWO_PI / grid_n
    dt = 0.5 * cell / max(abs(a), abs(b))
    total = int(math.floor(t_max / dt)) + 1

    visited = np.zeros((grid_n, grid_n), dtype=bool)
    for start in range(0, total, chunk):
        ts = np.arange(start, min(start + chunk, total), dtype=float) * dt
        us = np.mod(a * ts + line.u0, TWO_PI)
        vs = np.mod(b * ts + line.v0, TWO_PI)
        iu = np.minimum((us / cell).astype(np.int64), grid_n - 1)
        iv = np.minimum((vs / cell).astype(np.int64), grid_n - 1)
        visited[iu, iv] = True

    coverage = float(visited.sum()) / (grid_n * grid_n)
    logger.debug(f"稠密覆盖: {line.ratio_label}, t_max={t_max}, 样本数={total}, 覆盖率={coverage:.4f}")
    return coverage
