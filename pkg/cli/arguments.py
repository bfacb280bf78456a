#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""命令行参数的类型转换与公共校验"""

import argparse
import math
import os
import re
from fractions import Fraction
from typing import Iterable, List, Union

from src.errors import ArgumentError

FORMATS = ('csv', 'svg', 'obj')

_SQRT_PATTERN = re.compile(r'^sqrt\((\d+)\)$')


def positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"需要正整数: {raw!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"需要正整数: {raw!r}")
    return value


def finite_float(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"需要实数: {raw!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"需要有限实数: {raw!r}")
    return value


def positive_float(raw: str) -> float:
    value = finite_float(raw)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"需要正实数: {raw!r}")
    return value


def float_list(raw: str) -> List[float]:
    """逗号分隔的实数列表，例如 `1.9,2.0,2.1`"""
    items = [item.strip() for item in raw.split(',')]
    if not items or any(item == '' for item in items):
        raise argparse.ArgumentTypeError(f"需要逗号分隔的实数列表: {raw!r}")
    return [finite_float(item) for item in items]


def slope(raw: str) -> Union[Fraction, float]:
    """
    斜率：`p/q`、整数、小数保持为精确的 Fraction，`sqrt(k)` 在 k 不是完全平方数时为浮点数

    Args:
        raw: 命令行文本

    Returns:
        Union[Fraction, float]: 斜率
    """
    text = raw.strip()
    match = _SQRT_PATTERN.match(text)
    if match:
        k = int(match.group(1))
        root = math.isqrt(k)
        if root * root == k:
            return Fraction(root)
        return math.sqrt(k)
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"无法解析的斜率: {raw!r}（支持 p/q、整数、小数、sqrt(k)）") from None
    return value


def resolve_format(out: str, requested: Union[str, None], allowed: Iterable[str], verb: str) -> str:
    """
    确定输出格式：显式指定优先，否则按扩展名推断，最后默认 csv

    Args:
        out: 输出路径
        requested: --format 的值
        allowed: 该命令允许的格式
        verb: 命令名，用于错误信息

    Returns:
        str: 输出格式
    """
    allowed = tuple(allowed)
    if requested:
        fmt = requested
    else:
        ext = os.path.splitext(out)[1].lower().lstrip('.')
        fmt = ext if ext in FORMATS else 'csv'
    if fmt not in allowed:
        raise ArgumentError(f"命令 {verb} 不支持输出格式 {fmt}，可用: {', '.join(allowed)}")
    return fmt


def add_output_arguments(parser: argparse.ArgumentParser, allowed: Iterable[str]) -> None:
    """--out / --format 两个公共参数"""
    parser.add_argument('--out', required=True, help='输出文件路径')
    parser.add_argument('--format', choices=tuple(allowed), default=None,
                        help='输出格式，默认按扩展名推断')
