#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Fermat曲线 xⁿ + yⁿ = 1（第一象限）的运动学

以 x 本身作为参数（等价于 u̇ = 1 的归一化），给出：
  - 曲线 y(x) = (1 - xⁿ)^(1/n)
  - 速度 vel = dy/dx 与加速度 acc = d²y/dx²
  - 中心差分对照
  - x → 0⁺ 时加速度极限的相变分类（n < 2 发散，n = 2 为 -1，n > 2 趋于 0）

所有幂运算统一写成 exp(c·ln(·))，x = 0 处直接返回精确极限。
"""

import math
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.errors import DomainError, SingularityError, DivergenceSignal

logger = logging.getLogger(__name__)


class PhaseClass(Enum):
    """x → 0⁺ 时加速度的极限类型"""
    DIVERGES_NEG = "diverges_neg"
    FINITE_MINUS_ONE = "finite_minus_one"
    LIMIT_ZERO = "limit_zero"


@dataclass(frozen=True)
class CurveParam:
    """曲线指数 n（运动学允许实数 n）"""
    n: float

    def __post_init__(self):
        if not (self.n > 0) or math.isinf(self.n):
            raise DomainError(f"指数必须为正的有限实数: n={self.n}")

    def y(self, x: float) -> float:
        return curve_y(x, self.n)

    def vel(self, x: float) -> float:
        return velocity(x, self.n)

    def acc(self, x: float) -> float:
        return acceleration(x, self.n)

    @property
    def phase(self) -> 'PhaseClass':
        return phase_class(self.n)


@dataclass(frozen=True)
class KinematicsSample:
    """曲线上一点的位置、速度、加速度"""
    x: float
    y: float
    vel: float
    acc: float
    n: float


@dataclass
class PhaseScanResult:
    """相变扫描结果：按 (n, x) 排序的样本，以及每个 n 的解析分类"""
    samples: List[KinematicsSample] = field(default_factory=list)
    classes: Dict[float, PhaseClass] = field(default_factory=dict)

    def samples_for(self, n: float) -> List[KinematicsSample]:
        """获取指定 n 的全部样本"""
        return [s for s in self.samples if s.n == n]


def _check_x(x: float, upper_open: bool = False) -> None:
    if math.isnan(x) or x < 0 or x > 1:
        raise DomainError(f"x必须在[0,1]内: x={x}")
    if upper_open and x == 1:
        raise SingularityError("x = 1 处导数奇异")


def _check_kinematic_n(n: float) -> None:
    if math.isnan(n) or n < 1 or math.isinf(n):
        raise DomainError(f"运动学要求 n >= 1: n={n}")


def curve_y(x: float, n: float) -> float:
    """
    曲线高度 y = (1 - xⁿ)^(1/n)

    Args:
        x: [0,1] 内的横坐标
        n: 指数，> 0

    Returns:
        float: 曲线高度；x = 0 时精确返回 1，x = 1 时精确返回 0
    """
    _check_x(x)
    if not (n > 0):
        raise DomainError(f"指数必须 > 0: n={n}")
    if x == 0:
        return 1.0
    if x == 1:
        return 0.0
    if n == 1:
        return 1.0 - x
    x_pow = math.exp(n * math.log(x))
    return math.exp(math.log1p(-x_pow) / n)


def velocity(x: float, n: float) -> float:
    """
    速度 vel = dy/dx = -(x / y)^(n-1)

    Args:
        x: [0,1) 内的横坐标
        n: 指数，>= 1

    Returns:
        float: 速度（x ∈ (0,1) 且 n > 1 时为负）
    """
    _check_x(x, upper_open=True)
    _check_kinematic_n(n)
    if n == 1:
        return -1.0
    if x == 0:
        return 0.0
    y = curve_y(x, n)
    return -math.exp((n - 1) * (math.log(x) - math.log(y)))


def acceleration(x: float, n: float) -> float:
    """
    加速度 acc = d²y/dx² = -(n-1)·x^(n-2) / (1 - xⁿ)^(2 - 1/n)

    x = 0 处返回精确极限：n = 2 为 -1，n > 2 为 0；1 < n < 2 时极限为 -∞，
    抛出 DivergenceSignal（不是定义域错误）。

    Args:
        x: [0,1) 内的横坐标
        n: 指数，>= 1

    Returns:
        float: 加速度
    """
    _check_x(x, upper_open=True)
    _check_kinematic_n(n)
    if n == 1:
        # 直线 y = 1 - x
        return 0.0
    if n == 2:
        # 单位圆：acc = -(1 - x²)^(-3/2)
        return -(1.0 - x * x) ** -1.5
    if x == 0:
        if n < 2:
            raise DivergenceSignal(f"x → 0⁺ 时加速度发散到 -∞ (n={n})", x=x, n=n)
        return 0.0
    log_x = math.log(x)
    x_pow = math.exp(n * log_x)
    return -(n - 1) * math.exp((n - 2) * log_x - (2 - 1 / n) * math.log1p(-x_pow))


def kinematics_sample(x: float, n: float) -> KinematicsSample:
    """计算单个运动学样本"""
    return KinematicsSample(
        x=x,
        y=curve_y(x, n),
        vel=velocity(x, n),
        acc=acceleration(x, n),
        n=n,
    )


def finite_diff_oracle(x: float, n: float, h: float) -> Tuple[float, float]:
    """
    曲线的中心差分，用来独立验证速度和加速度的解析式

    Args:
        x: 中心点
        n: 指数
        h: 步长，要求 [x-h, x+h] ⊂ (0, 1)

    Returns:
        Tuple[float, float]: (vel, acc) 的差分近似
    """
    if not (h > 0):
        raise DomainError(f"步长必须 > 0: h={h}")
    if not (x - h > 0 and x + h < 1):
        raise DomainError(f"差分模板 [{x - h}, {x + h}] 超出 (0, 1)")

    y_minus = curve_y(x - h, n)
    y_mid = curve_y(x, n)
    y_plus = curve_y(x + h, n)
    vel = (y_plus - y_minus) / (2 * h)
    acc = (y_plus - 2 * y_mid + y_minus) / (h * h)
    return vel, acc


def velocity_slope(x: float, n: float, h: float) -> float:
    """
    速度曲线的斜率（速度的中心差分）

    Args:
        x: 中心点
        n: 指数
        h: 步长，要求 x - h >= 0 且 x + h < 1

    Returns:
        float: (vel(x+h) - vel(x-h)) / 2h
    """
    if not (h > 0):
        raise DomainError(f"步长必须 > 0: h={h}")
    if x - h < 0 or x + h >= 1:
        raise DomainError(f"差分模板 [{x - h}, {x + h}] 超出 [0, 1)")
    return (velocity(x + h, n) - velocity(x - h, n)) / (2 * h)


def phase_class(n: float) -> PhaseClass:
    """
    x → 0⁺ 时加速度极限的解析分类

    n = 1 是直线，加速度恒为0，归为 LIMIT_ZERO。
    """
    _check_kinematic_n(n)
    if n == 1:
        return PhaseClass.LIMIT_ZERO
    if n < 2:
        return PhaseClass.DIVERGES_NEG
    if n == 2:
        return PhaseClass.FINITE_MINUS_ONE
    return PhaseClass.LIMIT_ZERO


def _check_increasing(values: Sequence[float], name: str) -> None:
    if len(values) == 0:
        raise DomainError(f"{name} 不能为空")
    for prev, cur in zip(values, values[1:]):
        if not cur > prev:
            raise DomainError(f"{name} 必须严格递增: {prev} >= {cur}")


def phase_scan(n_values: Sequence[float], x_grid: Sequence[float]) -> PhaseScanResult:
    """
    在 (n, x) 网格上计算运动学样本，并给出每个 n 的相变分类

    Args:
        n_values: 严格递增的指数列表
        x_grid: 严格递增、位于 (0,1) 内的横坐标列表

    Returns:
        PhaseScanResult: 按 (n, x) 排序的样本和分类
    """
    _check_increasing(n_values, "n_values")
    _check_increasing(x_grid, "x_grid")
    if x_grid[0] <= 0 or x_grid[-1] >= 1:
        raise DomainError(f"x_grid 必须位于 (0,1) 内: [{x_grid[0]}, {x_grid[-1]}]")

    result = PhaseScanResult()
    for n in n_values:
        result.classes[n] = phase_class(n)
        for x in x_grid:
            result.samples.append(kinematics_sample(x, n))
        logger.debug(f"相变扫描 n={n}: 分类={result.classes[n].name}, 样本数={len(x_grid)}")
    return result


def sample_curve(n: float, m: int) -> List[Tuple[float, float]]:
    """
    在 [0,1] 上等间距采样曲线

    Args:
        n: 指数，>= 1
        m: 采样点数，>= 2

    Returns:
        List[Tuple[float, float]]: (x, y) 列表，端点精确为 (0,1) 和 (1,0)
    """
    _check_kinematic_n(n)
    if m < 2:
        raise DomainError(f"采样点数必须 >= 2: m={m}")
    xs = np.linspace(0.0, 1.0, m)
    return [(float(x), curve_y(float(x), n)) for x in xs]
