#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Fermat曲线上的精确搜索

  - 有理点：枚举 Farey 序列中的 x，用精确 n 次方根判断 y 是否有理
  - 本原整数三元组 xⁿ + yⁿ = zⁿ
  - 平坦正方形上的缠绕直线与曲线的交点，二分求根后做有理性标注

有理点和三元组全部使用精确整数 / 有理数运算；交点是浮点数，
"有理"标注总是经过精确验证，"非有理"只表示在给定分母上界内找不到。
"""

import math
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Tuple, Union

from src.errors import ArgumentError, DomainError
from src.rational import (
    Rational,
    farey_enumerate,
    fractions_with_denominator,
    integer_nth_root,
    nth_root_exact,
    rational_reconstruct,
)

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]
SlopeValue = Union[int, Fraction, float]

# 单个分支上二分的最大迭代次数
MAX_BISECTION_STEPS = 200


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"指数必须是 >= 1 的整数: n={n!r}")


@dataclass(frozen=True)
class SolutionRecord:
    """
    曲线 xⁿ + yⁿ = 1 上的一个有理点

    witness 为整数三元组 (p, q, z)，满足 x = p/z, y = q/z
    """
    x: Rational
    y: Rational
    n: int
    witness: Optional[Triple] = None

    def __post_init__(self):
        _check_n(self.n)
        if self.x ** self.n + self.y ** self.n != 1:
            raise ArgumentError(f"({self.x}, {self.y}) 不满足 x^{self.n} + y^{self.n} = 1")
        if self.witness is not None:
            p, q, z = self.witness
            if z <= 0 or Fraction(p, z) != self.x or Fraction(q, z) != self.y:
                raise ArgumentError(f"见证三元组 {self.witness} 与 ({self.x}, {self.y}) 不一致")

    @property
    def sort_key(self) -> Tuple[Rational, Rational]:
        return self.x, self.y


@dataclass(frozen=True)
class CrossingRecord:
    """
    缠绕直线与曲线的一个交点

    rational_label 只在重建出的有理数对通过精确验证（在曲线上且在直线上）时才非空
    """
    x: float
    y: float
    rational_label: Optional[Tuple[Rational, Rational]]
    slope: Tuple[SlopeValue, SlopeValue]
    n: int
    branch: int

    @property
    def is_rational(self) -> bool:
        return self.rational_label is not None


def _witness(x: Fraction, y: Fraction) -> Triple:
    z = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
    return int(x * z), int(y * z), z


def _solution_for_x(x: Fraction, n: int) -> Optional[SolutionRecord]:
    """x 固定时精确求 y = (1 - xⁿ)^(1/n)，y 不是有理数或不在 (0,1) 内时返回 None"""
    y = nth_root_exact(1 - x ** n, n)
    if y is None or not (0 < y < 1):
        return None
    return SolutionRecord(x, y, n, witness=_witness(x, y))


def rational_points_on_curve(n: int, max_den: int) -> List[SolutionRecord]:
    """
    搜索曲线 xⁿ + yⁿ = 1 上 0 < x, y < 1 的全部有理点

    只枚举 x（F_max_den 中的项），y 由精确 n 次方根判定。曲线上有理点的
    两个坐标分母相同，因此结果就是分母 <= max_den 的全部解。

    Args:
        n: 指数，>= 1 的整数
        max_den: 分母上界，>= 1

    Returns:
        List[SolutionRecord]: 按 (x, y) 排序
    """
    _check_n(n)
    if max_den < 1:
        raise DomainError(f"max_den必须 >= 1: {max_den}")

    solutions = []
    for x in farey_enumerate(max_den):
        if x == 0 or x == 1:
            continue
        record = _solution_for_x(x, n)
        if record is not None:
            solutions.append(record)

    logger.debug(f"有理点搜索 n={n}, max_den={max_den}: 共 {len(solutions)} 个解")
    return sorted(solutions, key=lambda r: r.sort_key)


def rational_points_for_denominators(n: int, denominators: Iterable[int]) -> List[SolutionRecord]:
    """
    只检查分母属于 denominators 的 x（并行分区单元）

    对 1..max_den 的任意划分，各分区结果的并集排序后等于 rational_points_on_curve(n, max_den)。

    Args:
        n: 指数，>= 1 的整数
        denominators: x 的分母集合

    Returns:
        List[SolutionRecord]: 按 (x, y) 排序
    """
    _check_n(n)
    solutions = []
    for q in denominators:
        for x in fractions_with_denominator(q):
            if x == 0 or x == 1:
                continue
            record = _solution_for_x(x, n)
            if record is not None:
                solutions.append(record)
    return sorted(solutions, key=lambda r: r.sort_key)


def diophantine_triples_in_range(n: int, z_lo: int, z_hi: int) -> List[Triple]:
    """
    z ∈ [z_lo, z_hi] 内的本原三元组 xⁿ + yⁿ = zⁿ，0 < x <= y < z

    Args:
        n: 指数，>= 1 的整数
        z_lo: z 的下界（含）
        z_hi: z 的上界（含）

    Returns:
        List[Triple]: 按 (z, x) 排序
    """
    _check_n(n)
    triples = []
    for z in range(max(z_lo, 1), z_hi + 1):
        z_pow = z ** n
        # x <= y 等价于 xⁿ <= zⁿ / 2
        for x in range(1, integer_nth_root(z_pow // 2, n) + 1):
            rest = z_pow - x ** n
            y = integer_nth_root(rest, n)
            if y ** n != rest or y < x or y >= z:
                continue
            if math.gcd(math.gcd(x, y), z) == 1:
                triples.append((x, y, z))
    return triples


def diophantine_triples(n: int, max_z: int) -> List[Triple]:
    """
    全部本原三元组 xⁿ + yⁿ = zⁿ，0 < x <= y < z <= max_z

    Args:
        n: 指数，>= 1 的整数
        max_z: z 的上界，>= 1

    Returns:
        List[Triple]: 按 (z, x) 排序
    """
    _check_n(n)
    if max_z < 1:
        raise DomainError(f"max_z必须 >= 1: {max_z}")
    triples = diophantine_triples_in_range(n, 1, max_z)
    logger.debug(f"三元组搜索 n={n}, max_z={max_z}: 共 {len(triples)} 个本原解")
    return triples


def expand_multiples(triples: Iterable[Triple], max_z: int) -> List[Triple]:
    """
    把本原三元组扩展为倍数族 (kx, ky, kz)，kz <= max_z

    Args:
        triples: 本原三元组
        max_z: z 的上界

    Returns:
        List[Triple]: 按 (z, x) 排序
    """
    expanded = []
    for x, y, z in triples:
        k = 1
        while k * z <= max_z:
            expanded.append((k * x, k * y, k * z))
            k += 1
    return sorted(expanded, key=lambda t: (t[2], t[0]))


def rescale_check(triple: Triple, n: int) -> SolutionRecord:
    """
    整数解按 z 缩放为曲线上的有理点 (x/z, y/z)

    Args:
        triple: 整数三元组 (x, y, z)
        n: 指数

    Returns:
        SolutionRecord: 携带原三元组作为见证
    """
    _check_n(n)
    x, y, z = triple
    if z <= 0:
        raise ArgumentError(f"z必须 > 0: {triple}")
    if x ** n + y ** n != z ** n:
        raise ArgumentError(f"{triple} 不满足 x^{n} + y^{n} = z^{n}")
    return SolutionRecord(Fraction(x, z), Fraction(y, z), n, witness=(x, y, z))


def _branch_breakpoints(slope: Fraction, x0: Fraction, y0: Fraction) -> List[Fraction]:
    """直线 y = slope·(x - x0) + y0 在 [0,1] 上穿过整数高度的位置（含两端点）"""
    points = {Fraction(0), Fraction(1)}
    if slope != 0:
        g0 = slope * (0 - x0) + y0
        g1 = slope * (1 - x0) + y0
        lo, hi = min(g0, g1), max(g0, g1)
        for m in range(math.ceil(lo), math.floor(hi) + 1):
            x = (m - y0) / slope + x0
            if 0 < x < 1:
                points.add(x)
    return sorted(points)


def _bisect(f: Callable[[float], float], lo: float, hi: float, f_lo: float, tol: float) -> float:
    for _ in range(MAX_BISECTION_STEPS):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _label(x: float, y: float, n: int, slope: Fraction, x0: Fraction, y0: Fraction, k: int,
           max_den: int, tol: float) -> Optional[Tuple[Fraction, Fraction]]:
    """重建 (x, y) 的有理数对，并在曲线和直线上精确验证"""
    label_tol = 2 * (1 + abs(float(slope))) * tol + 1e-15
    rx = rational_reconstruct(min(max(x, 0.0), 1.0), max_den, label_tol)
    ry = rational_reconstruct(min(max(y, 0.0), 1.0), max_den, label_tol)
    if rx is None or ry is None:
        return None
    if rx ** n + ry ** n != 1:
        return None
    if slope * (rx - x0) + y0 - k != ry:
        return None
    return rx, ry


def _crossings_on_square(n: int, slope: Fraction, x0: Fraction, y0: Fraction,
                         max_den: int, tol: float, subdivisions: int
                         ) -> List[Tuple[float, float, Optional[Tuple[Fraction, Fraction]], int]]:
    """在 x 为参数的方向上求 xⁿ + (slope·(x-x0) + y0 mod 1)ⁿ = 1 的全部根"""
    slope_f, x0_f, y0_f = float(slope), float(x0), float(y0)
    found = []
    breakpoints = _branch_breakpoints(slope, x0, y0)

    for branch, (left, right) in enumerate(zip(breakpoints, breakpoints[1:])):
        k = math.floor(slope * ((left + right) / 2 - x0) + y0)

        def f(x: float, k=k) -> float:
            y = slope_f * (x - x0_f) + y0_f - k
            return x ** n + y ** n - 1

        lo_branch, hi_branch = float(left), float(right)
        grid = [lo_branch + (hi_branch - lo_branch) * i / subdivisions for i in range(subdivisions + 1)]
        grid[-1] = hi_branch
        values = [f(x) for x in grid]

        roots = []
        for i in range(subdivisions):
            a, b = grid[i], grid[i + 1]
            fa, fb = values[i], values[i + 1]
            if fa == 0:
                roots.append(a)
            elif (fa < 0) != (fb < 0) and fb != 0:
                roots.append(_bisect(f, a, b, fa, tol))
        if values[-1] == 0:
            roots.append(grid[-1])

        if not roots:
            logger.debug(f"分支 {branch} [{left}, {right}] 上没有变号，跳过")
            continue

        for x in roots:
            y = slope_f * (x - x0_f) + y0_f - k
            label = _label(x, y, n, slope, x0, y0, k, max_den, tol)
            found.append((x, y, label, branch))
    return found


def line_curve_crossings(n: int, a: SlopeValue, b: SlopeValue, max_den: int, tol: float,
                         x0: SlopeValue = 0, y0: SlopeValue = 0,
                         subdivisions: int = 64) -> List[CrossingRecord]:
    """
    平坦正方形上斜率为 b/a 的缠绕直线与曲线 xⁿ + yⁿ = 1 的交点

    直线经过 (x0, y0)，纵坐标按 1 取模后分成若干分支；每个分支再均分为
    subdivisions 段寻找变号区间，然后二分到区间宽度 <= tol。
    a = 0（竖直线）时交换两个坐标的角色求解，曲线本身关于 x, y 对称。

    Args:
        n: 指数，>= 1 的整数
        a: u 方向斜率
        b: v 方向斜率
        max_den: 有理性标注的分母上界
        tol: 二分容差，> 0
        x0: 直线经过点的横坐标
        y0: 直线经过点的纵坐标
        subdivisions: 每个分支的扫描段数

    Returns:
        List[CrossingRecord]: 按 (x, y) 排序
    """
    _check_n(n)
    if a == 0 and b == 0:
        raise ArgumentError("斜率 (a, b) 不能同时为0")
    if not (tol > 0):
        raise DomainError(f"tol必须 > 0: tol={tol}")
    if max_den < 1:
        raise DomainError(f"max_den必须 >= 1: {max_den}")
    if subdivisions < 1:
        raise DomainError(f"subdivisions必须 >= 1: {subdivisions}")

    fa, fb, fx0, fy0 = Fraction(a), Fraction(b), Fraction(x0), Fraction(y0)
    swapped = fa == 0
    if swapped:
        raw = _crossings_on_square(n, fa / fb, fy0, fx0, max_den, tol, subdivisions)
        raw = [(y, x, None if label is None else (label[1], label[0]), branch)
               for x, y, label, branch in raw]
    else:
        raw = _crossings_on_square(n, fb / fa, fx0, fy0, max_den, tol, subdivisions)

    records = []
    seen = set()
    for x, y, label, branch in raw:
        if (x, y) in seen:
            continue
        seen.add((x, y))
        records.append(CrossingRecord(x=x, y=y, rational_label=label, slope=(a, b), n=n, branch=branch))

    records.sort(key=lambda r: (r.x, r.y))
    logger.debug(f"交点搜索 n={n}, 斜率=({a}, {b}): {len(records)} 个交点, "
                 f"{sum(r.is_rational for r in records)} 个有理")
    return records
