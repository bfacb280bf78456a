#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
环面测地线的数值积分

测地线方程
    ü = -2 Γᵘ_uv u̇ v̇
    v̈ = -Γᵛ_uu u̇²
用定步长经典四阶 Runge-Kutta 积分，全程监测两个守恒量：
    k = u̇ (R + r cos v)²                 （Clairaut 型常数）
    l = (R + r cos v)² u̇² + r² v̇²        （能量形式）
两者的最大相对漂移就是积分精度的度量。

多个初始状态可以用 integrate_geodesic_batch 一起积分：状态存成 (4, N) 的
numpy 数组，每一步对所有状态做同一组向量运算。
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Callable, List, NamedTuple, Sequence, Tuple

import numpy as np

from src.errors import DomainError, NumericalFailure
from .geometry import Torus, SurfacePoint, Point3, christoffels, embed, wrap_angle

logger = logging.getLogger(__name__)

SymbolsFn = Callable[[Torus, float], Tuple[float, float]]


@dataclass(frozen=True)
class GeodesicState:
    """测地线状态：角位置 (u, v) 和角速度 (u̇, v̇)，角度不做约化"""
    u: float
    v: float
    du: float
    dv: float

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (self.u, self.v, self.du, self.dv)):
            raise DomainError(f"状态分量必须有限: {self}")

    @property
    def position(self) -> SurfacePoint:
        return SurfacePoint(self.u, self.v)

    def wrapped(self) -> 'GeodesicState':
        """角度约化到 [0, 2π) 的副本"""
        return GeodesicState(wrap_angle(self.u), wrap_angle(self.v), self.du, self.dv)


class StateDerivative(NamedTuple):
    """状态导数 (u̇, v̇, ü, v̈)"""
    du: float
    dv: float
    ddu: float
    ddv: float


@dataclass(frozen=True)
class TrajectorySample:
    """轨迹上的一个记录点"""
    t: float
    state: GeodesicState
    point: Point3
    k: float
    energy: float


@dataclass
class Trajectory:
    """积分结果：记录点、两个守恒量的最大相对漂移"""
    samples: List[TrajectorySample] = field(default_factory=list)
    k_drift: float = 0.0
    energy_drift: float = 0.0
    steps: int = 0

    @property
    def final(self) -> TrajectorySample:
        return self.samples[-1]

    def as_array(self) -> np.ndarray:
        """按列 t,u,v,du,dv,x,y,z,k,energy 导出为数组"""
        return np.array([
            (s.t, s.state.u, s.state.v, s.state.du, s.state.dv, *s.point, s.k, s.energy)
            for s in self.samples
        ], dtype=float)


@dataclass
class GeodesicBatch:
    """批量积分结果：每个状态的末态和两个守恒量的最大相对漂移"""
    initial: List[GeodesicState]
    final: np.ndarray
    k_drift: np.ndarray
    energy_drift: np.ndarray
    steps: int = 0

    @property
    def max_k_drift(self) -> float:
        return float(self.k_drift.max())

    @property
    def max_energy_drift(self) -> float:
        return float(self.energy_drift.max())

    def final_states(self) -> List[GeodesicState]:
        return [GeodesicState(*(float(c) for c in row)) for row in self.final]


def _accelerations(torus: Torus, v: float, du: float, dv: float, symbols: SymbolsFn) -> Tuple[float, float]:
    gamma_u_uv, gamma_v_uu = symbols(torus, v)
    return -2.0 * gamma_u_uv * du * dv, -gamma_v_uu * du * du


def geodesic_rhs(torus: Torus, s: GeodesicState, symbols: SymbolsFn = christoffels) -> StateDerivative:
    """
    测地线方程右端

    Args:
        torus: 环面
        s: 当前状态
        symbols: Christoffel 符号函数，默认由度量推出的闭式

    Returns:
        StateDerivative: (u̇, v̇, ü, v̈)
    """
    ddu, ddv = _accelerations(torus, s.v, s.du, s.dv, symbols)
    return StateDerivative(s.du, s.dv, ddu, ddv)


def conserved_quantities(torus: Torus, s: GeodesicState) -> Tuple[float, float]:
    """
    沿测地线守恒的两个量

    Args:
        torus: 环面
        s: 状态

    Returns:
        Tuple[float, float]: (k, l)，k = u̇(R + r cos v)²，l = (R + r cos v)²u̇² + r²v̇²
    """
    ring = torus.R + torus.r * math.cos(s.v)
    ring_sq = ring * ring
    return s.du * ring_sq, ring_sq * s.du * s.du + torus.r * torus.r * s.dv * s.dv


def _relative_drift(value: float, reference: float) -> float:
    if reference == 0:
        return abs(value)
    return abs(value - reference) / abs(reference)


def _check_integration(t_max: float, h: float, record_every: int = 1) -> int:
    """检查积分参数，返回步数"""
    if not (t_max > 0) or math.isinf(t_max):
        raise DomainError(f"t_max必须是正的有限数: {t_max}")
    if not (0 < h <= t_max):
        raise DomainError(f"步长必须满足 0 < h <= t_max: h={h}, t_max={t_max}")
    if record_every < 1:
        raise DomainError(f"record_every必须 >= 1: {record_every}")
    return max(1, math.ceil(t_max / h - 1e-9))


def integrate_geodesic(torus: Torus, s0: GeodesicState, t_max: float, h: float,
                       symbols: SymbolsFn = christoffels, record_every: int = 1) -> Trajectory:
    """
    定步长 RK4 积分测地线

    最后一步缩短到恰好落在 t_max。漂移按每一步计算，与 record_every 无关。
    任何一步出现溢出或 NaN 都抛出带步号的 NumericalFailure。

    Args:
        torus: 环面
        s0: 初始状态
        t_max: 积分终点，> 0
        h: 步长，0 < h <= t_max
        symbols: Christoffel 符号函数
        record_every: 每隔多少步记录一个点（首末点总会记录）

    Returns:
        Trajectory: 轨迹与守恒量漂移
    """
    n_steps = _check_integration(t_max, h, record_every)

    def record(t: float, u: float, v: float, du: float, dv: float) -> None:
        state = GeodesicState(u, v, du, dv)
        k, energy = conserved_quantities(torus, state)
        trajectory.samples.append(TrajectorySample(t, state, embed(torus, state.position), k, energy))

    trajectory = Trajectory(steps=n_steps)
    k0, l0 = conserved_quantities(torus, s0)
    u, v, du, dv = s0.u, s0.v, s0.du, s0.dv
    record(0.0, u, v, du, dv)

    logger.debug(f"开始积分测地线: R={torus.R}, r={torus.r}, 步数={n_steps}, 步长={h}")
    k_drift = 0.0
    energy_drift = 0.0
    t = 0.0
    for step in range(1, n_steps + 1):
        t_next = t_max if step == n_steps else step * h
        dt = t_next - t
        try:
            a1, b1 = _accelerations(torus, v, du, dv, symbols)
            u2, v2, du2, dv2 = u + 0.5 * dt * du, v + 0.5 * dt * dv, du + 0.5 * dt * a1, dv + 0.5 * dt * b1
            a2, b2 = _accelerations(torus, v2, du2, dv2, symbols)
            u3, v3, du3, dv3 = u + 0.5 * dt * du2, v + 0.5 * dt * dv2, du + 0.5 * dt * a2, dv + 0.5 * dt * b2
            a3, b3 = _accelerations(torus, v3, du3, dv3, symbols)
            u4, v4, du4, dv4 = u + dt * du3, v + dt * dv3, du + dt * a3, dv + dt * b3
            a4, b4 = _accelerations(torus, v4, du4, dv4, symbols)
        except (OverflowError, ValueError) as e:
            # 浮点溢出先变成 inf，下一阶段的 cos(inf) 才报 ValueError
            raise NumericalFailure(f"测地线积分溢出: {e}", step_index=step) from e

        u += dt / 6.0 * (du + 2.0 * du2 + 2.0 * du3 + du4)
        v += dt / 6.0 * (dv + 2.0 * dv2 + 2.0 * dv3 + dv4)
        du, dv = du + dt / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4), dv + dt / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        t = t_next

        if not (math.isfinite(u) and math.isfinite(v) and math.isfinite(du) and math.isfinite(dv)):
            raise NumericalFailure("测地线积分出现 NaN/Inf", step_index=step)

        ring = torus.R + torus.r * math.cos(v)
        ring_sq = ring * ring
        k_drift = max(k_drift, _relative_drift(du * ring_sq, k0))
        energy_drift = max(energy_drift,
                           _relative_drift(ring_sq * du * du + torus.r * torus.r * dv * dv, l0))

        if step % record_every == 0 or step == n_steps:
            record(t, u, v, du, dv)

    trajectory.k_drift = k_drift
    trajectory.energy_drift = energy_drift
    logger.info(f"测地线积分完成: t_max={t_max}, k漂移={k_drift:.3e}, 能量漂移={energy_drift:.3e}")
    return trajectory


def integrate_geodesic_batch(torus: Torus, states: Sequence[GeodesicState], t_max: float,
                             h: float) -> GeodesicBatch:
    """
    用同一步长批量 RK4 积分多条测地线（闭式 Christoffel 符号）

    状态存成 (4, N) 数组 [u, v, u̇, v̇]，中间量预先分配、原地更新，
    每一步的 numpy 调用次数与状态个数无关。只保留末态和漂移，不记录轨迹点。
    步长划分、漂移定义与 integrate_geodesic 相同。

    Args:
        torus: 环面
        states: 初始状态，至少一个
        t_max: 积分终点，> 0
        h: 步长，0 < h <= t_max

    Returns:
        GeodesicBatch: 末态与每个状态的守恒量漂移
    """
    n_steps = _check_integration(t_max, h)
    if not states:
        raise DomainError("批量积分至少需要一个初始状态")

    y = np.array([[s.u for s in states], [s.v for s in states],
                  [s.du for s in states], [s.dv for s in states]], dtype=float)
    count = y.shape[1]
    stage = np.empty_like(y)
    k1, k2, k3, k4 = (np.empty_like(y) for _ in range(4))
    sin_v, neg_ring, tmp, k_now, l_now, scratch = (np.empty(count) for _ in range(6))
    # neg_ring = -(R + r cos v) / r；守恒量都按 r² 缩放
    neg_R_over_r = -torus.R / torus.r

    def rows(a: np.ndarray):
        return a[1], a[2], a[3], a[2:4]

    def out_rows(a: np.ndarray):
        return a[2], a[3], a[0:2]

    y_rows, stage_rows = rows(y), rows(stage)
    y_du, y_dv = y[2], y[3]
    k_rows = [out_rows(k) for k in (k1, k2, k3, k4)]

    def derivative(state_rows, derivative_rows) -> None:
        v, du, dv, velocity = state_rows
        ddu, ddv, out_velocity = derivative_rows
        np.sin(v, out=sin_v)
        np.cos(v, out=neg_ring)
        np.subtract(neg_R_over_r, neg_ring, out=neg_ring)
        np.multiply(sin_v, du, out=tmp)
        np.multiply(tmp, du, out=ddv)
        ddv *= neg_ring
        np.multiply(tmp, dv, out=ddu)
        ddu /= neg_ring
        ddu *= -2.0
        np.copyto(out_velocity, velocity)

    def scaled_invariants() -> None:
        # 用最近一次 derivative 的 neg_ring
        np.multiply(neg_ring, neg_ring, out=scratch)
        np.multiply(scratch, y_du, out=k_now)
        np.multiply(k_now, y_du, out=l_now)
        np.multiply(y_dv, y_dv, out=scratch)
        np.add(l_now, scratch, out=l_now)

    step = 0
    try:
        with np.errstate(over='raise', invalid='raise', divide='raise'):
            derivative(y_rows, k_rows[0])
            scaled_invariants()
            k_ref, l_ref = k_now.copy(), l_now.copy()
            k_hi, k_lo, l_hi, l_lo = k_ref.copy(), k_ref.copy(), l_ref.copy(), l_ref.copy()

            logger.debug(f"开始批量积分测地线: 状态数={count}, 步数={n_steps}, 步长={h}")
            dt = h
            for step in range(1, n_steps + 1):
                if step == n_steps:
                    dt = t_max - (n_steps - 1) * h
                half = 0.5 * dt

                derivative(y_rows, k_rows[0])
                scaled_invariants()
                np.maximum(k_hi, k_now, out=k_hi)
                np.minimum(k_lo, k_now, out=k_lo)
                np.maximum(l_hi, l_now, out=l_hi)
                np.minimum(l_lo, l_now, out=l_lo)

                np.multiply(k1, half, out=stage)
                stage += y
                derivative(stage_rows, k_rows[1])
                np.multiply(k2, half, out=stage)
                stage += y
                derivative(stage_rows, k_rows[2])
                np.multiply(k3, dt, out=stage)
                stage += y
                derivative(stage_rows, k_rows[3])

                k2 += k3
                k2 *= 2.0
                k1 += k2
                k1 += k4
                k1 *= dt / 6.0
                y += k1

            derivative(y_rows, k_rows[0])
            scaled_invariants()
            np.maximum(k_hi, k_now, out=k_hi)
            np.minimum(k_lo, k_now, out=k_lo)
            np.maximum(l_hi, l_now, out=l_hi)
            np.minimum(l_lo, l_now, out=l_lo)
    except FloatingPointError as e:
        raise NumericalFailure(f"批量测地线积分溢出或出现 NaN: {e}", step_index=step) from e

    batch = GeodesicBatch(
        initial=list(states),
        final=y.T.copy(),
        k_drift=_batch_relative_drift(k_hi, k_lo, k_ref, torus.r),
        energy_drift=_batch_relative_drift(l_hi, l_lo, l_ref, torus.r),
        steps=n_steps,
    )
    logger.info(f"批量测地线积分完成: 状态数={count}, 最大k漂移={batch.max_k_drift:.3e}, "
                f"最大能量漂移={batch.max_energy_drift:.3e}")
    return batch


def _batch_relative_drift(hi: np.ndarray, lo: np.ndarray, reference: np.ndarray, r: float) -> np.ndarray:
    """按 r² 缩放的守恒量的上下界换算成相对漂移；参考值为 0 时取绝对漂移"""
    deviation = np.maximum(hi - reference, reference - lo)
    scale = np.where(reference != 0, np.abs(reference), 1.0 / (r * r))
    return deviation / scale


def random_geodesic_states(count: int, seed: int = 0) -> List[GeodesicState]:
    """
    可复现的随机初始状态：角度在 [0, 2π) 均匀分布，|u̇| ∈ [0.3, 1]，v̇ ∈ [-1, 1]

    Args:
        count: 状态个数，>= 1
        seed: 随机数种子

    Returns:
        List[GeodesicState]: 初始状态
    """
    if count < 1:
        raise DomainError(f"状态个数必须 >= 1: {count}")
    rng = np.random.default_rng(seed)
    states = []
    for _ in range(count):
        u0, v0 = rng.uniform(0.0, 2 * math.pi, size=2)
        du = rng.uniform(0.3, 1.0) * rng.choice([-1.0, 1.0])
        dv = rng.uniform(-1.0, 1.0)
        states.append(GeodesicState(float(u0), float(v0), float(du), float(dv)))
    return states
