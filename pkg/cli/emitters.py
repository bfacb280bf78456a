#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
输出文件：CSV、SVG、OBJ

所有输出先写到目标目录下的临时文件再改名，中断的运行不会留下半个文件。
同样的输入总是得到逐字节相同的输出（固定格式、固定顺序、不含时间戳）。
"""

import csv
import io
import math
import os
import re
import tempfile
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import matplotlib
matplotlib.use('Agg')
from matplotlib.figure import Figure

from src.errors import ArgumentError

logger = logging.getLogger(__name__)

# SVG 以 pt 为单位（72 pt/英寸），viewBox 固定为 0 0 1000 1000
VIEWBOX_SIZE = 1000
FIGURE_SIZE = (VIEWBOX_SIZE / 72, VIEWBOX_SIZE / 72)

SVG_PARAMS = {
    'svg.fonttype': 'none',
    'svg.hashsalt': 'fermat_torus',
    'font.size': 12,
    'axes.labelsize': 14,
    'legend.fontsize': 11,
    'lines.linewidth': 1.5,
    'axes.grid': True,
    'grid.alpha': 0.3,
}

# matplotlib 输出的序列分组：<g id="series-i"> 内一条 <path d="M x y L x y ..."/>
_SERIES_PATH = re.compile(r'(<g id="series-\d+">\s*)<path d="([^"]*)"([^>]*?)\s*/>')


@dataclass
class PlotSeries:
    """一条折线；label 为 None 时不进入图例"""
    label: Optional[str]
    points: List[Tuple[float, float]] = field(default_factory=list)


@dataclass
class PlotAxes:
    """坐标轴标题和可选的固定范围（None 时按有限数据自动计算）"""
    x_label: str
    y_label: str
    x_range: Optional[Tuple[float, float]] = None
    y_range: Optional[Tuple[float, float]] = None


def format_real(value: float) -> str:
    """实数统一保留17位有效数字"""
    return '%.17g' % value


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return '1' if value else '0'
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_real(value)
    if value is None:
        return ''
    return str(value)


def atomic_write(path: str, text: str) -> None:
    """
    写文本文件：先写同目录的临时文件，再原子替换

    Args:
        path: 目标路径
        text: 文件内容（行尾已经是 LF）
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(prefix='.tmp_', dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    logger.info(f"已写入文件: {path}")


def emit_csv(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> int:
    """
    写 CSV 文件：首行表头，`.` 作小数点，实数17位有效数字，LF 行尾

    Args:
        path: 输出路径
        header: 列名
        rows: 数据行；bool 写成 0/1，None 写成空字段

    Returns:
        int: 数据行数（不含表头）
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    count = 0
    for row in rows:
        if len(row) != len(header):
            raise ArgumentError(f"数据行列数 {len(row)} 与表头 {len(header)} 不一致")
        writer.writerow([_format_cell(v) for v in row])
        count += 1
    atomic_write(path, buffer.getvalue())
    return count


def _finite_range(values: Iterable[float]) -> Tuple[float, float]:
    finite = [v for v in values if math.isfinite(v)]
    if not finite:
        return 0.0, 1.0
    lo, hi = min(finite), max(finite)
    if lo == hi:
        lo, hi = lo - 1.0, hi + 1.0
    return lo, hi


def _clip_series(points: Sequence[Tuple[float, float]], y_lo: float, y_hi: float):
    """把发散或超出纵轴范围的样本压到边缘，返回 (xs, ys, 截断数, 是否含 -inf)"""
    xs, ys = [], []
    clipped = 0
    negative_inf = False
    for x, y in points:
        if not math.isfinite(x):
            continue
        if not math.isfinite(y) or y < y_lo or y > y_hi:
            clipped += 1
            negative_inf = negative_inf or y == -math.inf
            y = y_lo if (math.isnan(y) or y < y_lo) else y_hi
        xs.append(x)
        ys.append(y)
    return xs, ys, clipped, negative_inf


def emit_svg(path: str, series: Sequence[PlotSeries], axes: PlotAxes) -> None:
    """
    用 matplotlib 写 SVG 文件

    viewBox 固定为 0 0 1000 1000，每条序列写成 id 为 series-<i> 的分组里的 <polyline>，
    带坐标刻度和图例。发散（±inf）或超出纵轴范围的样本被截断在绘图区边缘，
    在图中注明并写入注释。

    Args:
        path: 输出路径
        series: 非空的序列列表
        axes: 坐标轴设置
    """
    if not series or all(len(s.points) == 0 for s in series):
        raise ArgumentError("SVG 输出需要至少一条非空序列")

    x_lo, x_hi = axes.x_range or _finite_range(x for s in series for x, _ in s.points)
    y_lo, y_hi = axes.y_range or _finite_range(y for s in series for _, y in s.points)

    with matplotlib.rc_context(SVG_PARAMS):
        fig = Figure(figsize=FIGURE_SIZE)
        ax = fig.add_subplot(1, 1, 1)
        ax.set_xlim(x_lo, x_hi)
        ax.set_ylim(y_lo, y_hi)
        ax.set_xlabel(axes.x_label)
        ax.set_ylabel(axes.y_label)

        notes = []
        color_index = -1
        for i, s in enumerate(series):
            if not s.points:
                continue
            # 无标签的序列沿用上一条带标签序列的颜色
            if s.label is not None or color_index < 0:
                color_index += 1
            xs, ys, clipped, negative_inf = _clip_series(s.points, y_lo, y_hi)
            line, = ax.plot(xs, ys, color=f'C{color_index % 10}', label=s.label)
            line.set_gid(f'series-{i}')

            if clipped:
                note = f"{s.label or '-'}: {clipped} samples clipped"
                if negative_inf:
                    note += ' (-inf)'
                notes.append(note)
                logger.warning(f"序列 {s.label or '-'} 有 {clipped} 个样本超出绘图区，已截断")

        if any(s.label is not None and s.points for s in series):
            ax.legend(loc='upper right')
        for k, note in enumerate(notes):
            ax.text(0.02, 0.02 + 0.035 * k, note, transform=ax.transAxes, fontsize=10)

        buffer = io.StringIO()
        fig.savefig(buffer, format='svg', metadata={'Date': None})

    atomic_write(path, _insert_comments(_paths_to_polylines(buffer.getvalue()), notes))


def _path_to_polylines(d: str, attributes: str) -> Optional[str]:
    """把只含 M/L 命令的路径改写成 polyline，每个 M 开始一条；含其他命令时返回 None"""
    runs: List[List[str]] = []
    tokens = d.split()
    i = 0
    while i < len(tokens):
        command = tokens[i]
        if command not in ('M', 'L') or i + 2 >= len(tokens):
            return None
        if command == 'M' or not runs:
            runs.append([])
        runs[-1].append(f'{tokens[i + 1]},{tokens[i + 2]}')
        i += 3
    return '\n'.join(f'<polyline points="{" ".join(run)}"{attributes}/>' for run in runs)


def _paths_to_polylines(svg_text: str) -> str:
    """序列分组里的折线路径写成 <polyline> 元素"""
    def replace(match: re.Match) -> str:
        polylines = _path_to_polylines(match.group(2), match.group(3))
        if polylines is None:
            logger.warning("序列路径含 M/L 以外的命令，保留为 <path>")
            return match.group(0)
        return match.group(1) + polylines

    return _SERIES_PATH.sub(replace, svg_text)


def _insert_comments(svg_text: str, notes: Sequence[str]) -> str:
    """在根元素开头写入截断说明的注释"""
    if not notes:
        return svg_text
    root_end = svg_text.index('>', svg_text.index('<svg')) + 1
    comments = ''.join(f'\n<!-- {note} at the viewport -->' for note in notes)
    return svg_text[:root_end] + comments + svg_text[root_end:]


def emit_obj(path: str, points: Sequence[Tuple[float, float, float]]) -> None:
    """
    写 Wavefront 风格的 OBJ 文件：每个点一行 `v x y z`，然后按顺序写 `l i j` 线段

    Args:
        path: 输出路径
        points: 三维点列表，至少2个
    """
    if len(points) < 2:
        raise ArgumentError(f"OBJ 输出至少需要2个点: {len(points)}")
    lines = [f'v {format_real(x)} {format_real(y)} {format_real(z)}' for x, y, z in points]
    lines.extend(f'l {i} {i + 1}' for i in range(1, len(points)))
    atomic_write(path, '\n'.join(lines) + '\n')
