#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
环面的嵌入与内蕴几何

参数化 σ(u, v) = ((R + r cos v) cos u, (R + r cos v) sin u, r sin v)，R > r > 0。
小半径统一记作 r。度量为对角阵 diag((R + r cos v)², r²)，
非零的 Christoffel 符号只有 Γᵘ_uv 与 Γᵛ_uu。
"""

import math
from dataclasses import dataclass
from typing import Tuple

from src.errors import DomainError

TWO_PI = 2.0 * math.pi

Point3 = Tuple[float, float, float]


def wrap_angle(angle: float) -> float:
    """把角度约化到 [0, 2π)"""
    wrapped = math.fmod(angle, TWO_PI)
    if wrapped < 0:
        wrapped += TWO_PI
    # 负的极小值加 2π 后会舍入成 2π
    if wrapped >= TWO_PI:
        wrapped = 0.0
    return wrapped


def angular_distance(alpha: float, beta: float) -> float:
    """两个角度在圆周上的距离，取值 [0, π]"""
    diff = wrap_angle(alpha - beta)
    return min(diff, TWO_PI - diff)


@dataclass(frozen=True)
class Torus:
    """环面，大半径 R，小半径 r"""
    R: float
    r: float

    def __post_init__(self):
        if not (self.r > 0 and self.R > self.r) or math.isinf(self.R):
            raise DomainError(f"环面要求 R > r > 0: R={self.R}, r={self.r}")


@dataclass(frozen=True)
class SurfacePoint:
    """环面上的点，两个角度都约化到 [0, 2π)"""
    u: float
    v: float

    def __post_init__(self):
        object.__setattr__(self, 'u', wrap_angle(self.u))
        object.__setattr__(self, 'v', wrap_angle(self.v))

    def flat(self) -> Tuple[float, float]:
        """平坦正方形 [0,1)² 上的坐标"""
        return self.u / TWO_PI, self.v / TWO_PI


def embed(torus: Torus, p: SurfacePoint) -> Point3:
    """
    环面上的点嵌入三维空间

    Args:
        torus: 环面
        p: 环面上的点

    Returns:
        Point3: (x, y, z)
    """
    ring = torus.R + torus.r * math.cos(p.v)
    return ring * math.cos(p.u), ring * math.sin(p.u), torus.r * math.sin(p.v)


def cylinder_point(torus: Torus, p: SurfacePoint) -> Point3:
    """
    平坦正方形卷成开口圆柱后的点（u 方向展开为长度 2πR 的轴）

    Args:
        torus: 提供圆柱半径 r 和轴长 2πR
        p: 环面上的点

    Returns:
        Point3: (x, y, z)，x 为轴向
    """
    return torus.R * p.u, torus.r * math.cos(p.v), torus.r * math.sin(p.v)


def implicit_residual(torus: Torus, point: Point3) -> float:
    """隐式方程残差 (√(x²+y²) − R)² + z² − r²"""
    x, y, z = point
    return (math.hypot(x, y) - torus.R) ** 2 + z * z - torus.r ** 2


def first_fundamental_form(torus: Torus, v: float) -> Tuple[float, float, float]:
    """
    第一基本形式系数

    Args:
        torus: 环面
        v: 小圆方向的角度

    Returns:
        Tuple[float, float, float]: (E, F, G) = ((R + r cos v)², 0, r²)
    """
    ring = torus.R + torus.r * math.cos(v)
    return ring * ring, 0.0, torus.r * torus.r


def christoffels(torus: Torus, v: float) -> Tuple[float, float]:
    """
    非零的 Christoffel 符号（第二类）

    由度量直接推出：
        Γᵘ_uv = -r sin v / (R + r cos v)
        Γᵛ_uu = sin v (R + r cos v) / r

    Args:
        torus: 环面
        v: 小圆方向的角度

    Returns:
        Tuple[float, float]: (Γᵘ_uv, Γᵛ_uu)
    """
    ring = torus.R + torus.r * math.cos(v)
    sin_v = math.sin(v)
    return -torus.r * sin_v / ring, sin_v * ring / torus.r


def christoffels_printed(torus: Torus, v: float) -> Tuple[float, float]:
    """
    分母取平方的 Γᵘ_uv 版本 -r sin v / (R + r cos v)²

    与度量不一致，用它积分测地线时 k = u̇(R + r cos v)² 不守恒。
    仅用于对照测试。
    """
    ring = torus.R + torus.r * math.cos(v)
    sin_v = math.sin(v)
    return -torus.r * sin_v / (ring * ring), sin_v * ring / torus.r


def christoffels_numeric(torus: Torus, v: float, h: float = 1e-6) -> Tuple[float, float]:
    """
    由度量按定义 Γⁱ_kl = ½ gⁱᵐ(g_mk,l + g_ml,k − g_kl,m) 数值计算 Christoffel 符号

    度量只依赖 v 且为对角阵，因此只需要 ∂E/∂v（中心差分）：
        Γᵘ_uv = ½ E⁻¹ ∂E/∂v,  Γᵛ_uu = −½ G⁻¹ ∂E/∂v

    Args:
        torus: 环面
        v: 小圆方向的角度
        h: 差分步长

    Returns:
        Tuple[float, float]: (Γᵘ_uv, Γᵛ_uu)
    """
    if not (h > 0):
        raise DomainError(f"步长必须 > 0: h={h}")
    e_plus, _, _ = first_fundamental_form(torus, v + h)
    e_minus, _, _ = first_fundamental_form(torus, v - h)
    e_mid, _, g_mid = first_fundamental_form(torus, v)
    de_dv = (e_plus - e_minus) / (2 * h)
    return 0.5 * de_dv / e_mid, -0.5 * de_dv / g_mid
