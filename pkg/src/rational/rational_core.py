#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
精确有理数运算

Rational 直接使用 fractions.Fraction：构造时自动约分、分母恒为正、
不可变、加乘幂运算全部精确。本模块在其上补充：
  - 带参数校验的构造 rat_new
  - 整数 n 次方根（整数二分）与精确 n 次方根判定
  - 有界分母的 Farey 序列枚举（可从任意一项重新开始）
  - 浮点数到有理数的连分数重建
"""

import math
from fractions import Fraction
from typing import Iterator, Optional

from src.errors import ArgumentError, DomainError

Rational = Fraction


def rat_new(p: int, q: int) -> Rational:
    """
    构造约分后的有理数 p/q

    Args:
        p: 分子
        q: 分母，不能为0

    Returns:
        Rational: 分母为正的最简分数
    """
    if q == 0:
        raise ArgumentError(f"分母不能为0: {p}/{q}")
    return Fraction(p, q)


def rat_pow(r: Rational, n: int) -> Rational:
    """精确整数次幂"""
    return Fraction(r) ** n


def integer_nth_root(m: int, n: int) -> int:
    """
    整数n次方根（向下取整）

    在由比特长度确定的区间 [2^⌊(b-1)/n⌋, 2^(⌊(b-1)/n⌋+1)) 内做整数二分，
    全程不经过浮点数。

    Args:
        m: 非负整数
        n: 次数，n >= 1

    Returns:
        int: 满足 r^n <= m 的最大整数 r
    """
    if n < 1:
        raise DomainError(f"次数必须 >= 1: n={n}")
    if m < 0:
        raise DomainError(f"被开方数必须非负: m={m}")
    if m < 2 or n == 1:
        return m

    shift = (m.bit_length() - 1) // n
    lo, hi = 1 << shift, 1 << (shift + 1)
    # 不变量: lo^n <= m < hi^n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** n <= m:
            lo = mid
        else:
            hi = mid
    return lo


def nth_root_exact(r: Rational, n: int) -> Optional[Rational]:
    """
    判断 r 是否为 [0,1] 内某个有理数的 n 次幂

    分子、分母分别做整数开方。r 已是最简分数，因此 r 是有理数的 n 次幂
    当且仅当分子和分母都是整数的 n 次幂。

    Args:
        r: [0,1] 内的有理数
        n: 次数，n >= 1

    Returns:
        Optional[Rational]: s^n == r 的 s，不存在时返回 None
    """
    r = Fraction(r)
    if n < 1:
        raise DomainError(f"次数必须 >= 1: n={n}")
    if r < 0 or r > 1:
        raise DomainError(f"r必须在[0,1]内: r={r}")

    num_root = integer_nth_root(r.numerator, n)
    if num_root ** n != r.numerator:
        return None
    den_root = integer_nth_root(r.denominator, n)
    if den_root ** n != r.denominator:
        return None
    return Fraction(num_root, den_root)


def farey_successor(x: Rational, max_den: int) -> Optional[Rational]:
    """
    Farey序列 F_max_den 中 x 的下一项

    相邻项 a/b < c/d 满足 bc - ad = 1，因此 d ≡ -a⁻¹ (mod b)，
    取不超过 max_den 的最大 d。

    Args:
        x: F_max_den 中的一项（分母 <= max_den）
        max_den: 分母上界

    Returns:
        Optional[Rational]: 下一项，x = 1 时返回 None
    """
    x = Fraction(x)
    if max_den < 1:
        raise DomainError(f"max_den必须 >= 1: {max_den}")
    if x < 0 or x > 1 or x.denominator > max_den:
        raise DomainError(f"{x} 不在 F_{max_den} 中")
    if x == 1:
        return None

    a, b = x.numerator, x.denominator
    if b == 1:
        return Fraction(1, max_den)
    d0 = (-pow(a, -1, b)) % b
    d = d0 + b * ((max_den - d0) // b)
    c = (1 + a * d) // b
    return Fraction(c, d)


def farey_enumerate(max_den: int, start: Optional[Rational] = None) -> Iterator[Rational]:
    """
    按升序枚举 [0,1] 内分母不超过 max_den 的全部最简分数

    使用相邻两项递推下一项，每步只保存两项。

    Args:
        max_den: 分母上界，>= 1
        start: 起始项（必须属于 F_max_den），默认从 0/1 开始

    Yields:
        Rational: 严格递增、每个恰好出现一次
    """
    if max_den < 1:
        raise DomainError(f"max_den必须 >= 1: {max_den}")

    first = Fraction(0) if start is None else Fraction(start)
    second = farey_successor(first, max_den)
    yield first
    if second is None:
        return

    a, b = first.numerator, first.denominator
    c, d = second.numerator, second.denominator
    while c <= max_den:
        yield Fraction(c, d)
        if c == d:
            return
        k = (max_den + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b


def fractions_with_denominator(q: int) -> Iterator[Rational]:
    """
    [0,1] 内分母恰为 q 的全部最简分数（并行分区扫描的基本单元）

    Args:
        q: 分母，>= 1

    Yields:
        Rational: 按分子递增
    """
    if q < 1:
        raise DomainError(f"分母必须 >= 1: {q}")
    for p in range(0, q + 1):
        if math.gcd(p, q) == 1:
            yield Fraction(p, q)


def rational_reconstruct(x: float, max_den: int, tol: float) -> Optional[Rational]:
    """
    用连分数渐近分数重建浮点数对应的有理数

    连分数展开基于浮点数的精确二进制值，渐近分数按分母递增依次检查，
    返回第一个（分母最小的）满足 |x - p/q| <= tol 的渐近分数。

    Args:
        x: [0,1] 内的实数
        max_den: 分母上界
        tol: 容差，> 0

    Returns:
        Optional[Rational]: 满足条件的渐近分数，不存在时返回 None
    """
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"x必须在[0,1]内: x={x}")
    if max_den < 1:
        raise DomainError(f"max_den必须 >= 1: {max_den}")
    if not tol > 0:
        raise DomainError(f"tol必须 > 0: tol={tol}")

    exact = Fraction(x)
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    remainder = exact
    while True:
        term = math.floor(remainder)
        h_prev, h = h, term * h + h_prev
        k_prev, k = k, term * k + k_prev
        if k > max_den:
            return None
        if abs(exact - Fraction(h, k)) <= tol:
            return Fraction(h, k)
        frac_part = remainder - term
        if frac_part == 0:
            return None
        remainder = 1 / frac_part
