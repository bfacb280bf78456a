#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
工具包异常定义

所有异常都保留内置异常作为基类（ValueError / ArithmeticError / RuntimeError），
调用方直接捕获内置异常也能正常工作。
"""

from typing import Optional


class FermatTorusError(Exception):
    """工具包异常基类"""


class ArgumentError(FermatTorusError, ValueError):
    """参数错误：零分母、(a, b) = (0, 0)、三元组不满足方程、命令行参数非法等"""


class DomainError(ArgumentError):
    """取值超出数学定义域"""


class SingularityError(DomainError):
    """恰好落在奇点上（例如 x = 1 处的速度）"""


class DivergenceSignal(FermatTorusError, ArithmeticError):
    """
    极限发散信号

    x → 0⁺ 且 1 < n < 2 时加速度趋于 -∞。这不是定义域错误，
    而是一个需要调用方单独处理的结果。
    """

    def __init__(self, message: str, x: float, n: float):
        super().__init__(message)
        self.x = x
        self.n = n


class NumericalFailure(FermatTorusError, RuntimeError):
    """数值积分过程中出现 NaN 或溢出"""

    def __init__(self, message: str, step_index: Optional[int] = None):
        super().__init__(message)
        self.step_index = step_index

    def __str__(self):
        base = super().__str__()
        if self.step_index is None:
            return base
        return f"{base} (step={self.step_index})"


__all__ = [
    'FermatTorusError',
    'ArgumentError',
    'DomainError',
    'SingularityError',
    'DivergenceSignal',
    'NumericalFailure',
]
