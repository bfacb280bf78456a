#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math
import xml.etree.ElementTree as ET

import pytest

from src.errors import ArgumentError
from cli.emitters import (
    VIEWBOX_SIZE, PlotAxes, PlotSeries, _path_to_polylines, emit_csv, emit_obj, emit_svg, format_real,
)

SVG_NS = '{http://www.w3.org/2000/svg}'


class TestCsv:

    def test_header_and_formatting(self, tmp_path):
        path = tmp_path / 'out.csv'
        count = emit_csv(str(path), ('x', 'n', 'flag', 'label'), [(0.1, 2, True, None), (1 / 3, 3, False, 'a,b')])
        assert count == 2
        data = path.read_bytes()
        assert b'\r' not in data
        assert data.decode('utf-8').splitlines() == [
            'x,n,flag,label',
            '0.10000000000000001,2,1,',
            '0.33333333333333331,3,0,"a,b"',
        ]

    def test_header_only(self, tmp_path):
        path = tmp_path / 'empty.csv'
        assert emit_csv(str(path), ('x_num', 'x_den'), []) == 0
        assert path.read_text() == 'x_num,x_den\n'

    def test_row_width_checked(self, tmp_path):
        with pytest.raises(ArgumentError):
            emit_csv(str(tmp_path / 'bad.csv'), ('a', 'b'), [(1,)])

    def test_unwritable_path(self, tmp_path):
        with pytest.raises(OSError):
            emit_csv(str(tmp_path / 'missing' / 'out.csv'), ('a',), [(1,)])

    def test_no_temporary_files_left(self, tmp_path):
        emit_csv(str(tmp_path / 'a.csv'), ('a',), [(1,)])
        assert [p.name for p in tmp_path.iterdir()] == ['a.csv']

    def test_format_real_round_trips(self):
        for value in (0.1, 1 / 3, math.pi, 1e-300, -2.5):
            assert float(format_real(value)) == value


class TestSvg:

    def test_structure(self, tmp_path):
        path = tmp_path / 'plot.svg'
        series = [PlotSeries(f'n={n}', [(0.0, 1.0), (0.5, 0.5), (1.0, 0.0)]) for n in range(1, 4)]
        emit_svg(str(path), series, PlotAxes('x', 'y', (0.0, 1.0), (0.0, 1.0)))
        root = ET.parse(path).getroot()
        assert root.get('viewBox') == '0 0 1000 1000'
        groups = [g.get('id') for g in root.iter(f'{SVG_NS}g') if (g.get('id') or '').startswith('series-')]
        assert groups == ['series-0', 'series-1', 'series-2']
        legend = [t.text for t in root.iter(f'{SVG_NS}text')]
        assert {'n=1', 'n=2', 'n=3'} <= set(legend)

    def test_series_drawn_as_polylines(self, tmp_path):
        path = tmp_path / 'poly.svg'
        series = [PlotSeries(f'n={n}', [(0.0, 1.0), (0.5, 0.2 + 0.5 / n), (1.0, 0.0)]) for n in range(1, 4)]
        emit_svg(str(path), series, PlotAxes('x', 'y', (0.0, 1.0), (0.0, 1.0)))
        root = ET.parse(path).getroot()
        groups = [g for g in root.iter(f'{SVG_NS}g') if (g.get('id') or '').startswith('series-')]
        assert len(groups) == 3
        for group in groups:
            assert list(group.iter(f'{SVG_NS}path')) == []
            polylines = list(group.iter(f'{SVG_NS}polyline'))
            assert len(polylines) == 1
            points = [tuple(float(c) for c in pair.split(',')) for pair in polylines[0].get('points').split()]
            assert len(points) == 3
            assert all(0.0 <= c <= VIEWBOX_SIZE for point in points for c in point)
            assert 'fill: none' in polylines[0].get('style')
        assert path.read_text().count('<polyline') == 3

    def test_path_commands_converted(self):
        d = 'M 1 2 \nL 3 4 \nL 5 6 \nM 7 8 \nL 9 10 '
        assert _path_to_polylines(d, ' style="fill: none"').splitlines() == [
            '<polyline points="1,2 3,4 5,6" style="fill: none"/>',
            '<polyline points="7,8 9,10" style="fill: none"/>',
        ]
        assert _path_to_polylines('M 0 0 C 1 1 2 2 3 3', '') is None

    def test_divergent_samples_are_clipped_with_note(self, tmp_path):
        path = tmp_path / 'acc.svg'
        series = [PlotSeries('n=1.9', [(0.0, -math.inf), (0.5, -1.0), (1.0, -2.0)])]
        emit_svg(str(path), series, PlotAxes('x', 'acc'))
        text = path.read_text()
        assert '-inf' in text
        assert '<!-- n=1.9: 1 samples clipped (-inf) at the viewport -->' in text
        for p in ET.parse(path).getroot().iter(f'{SVG_NS}path'):
            d = (p.get('d') or '').lower()
            assert 'inf' not in d and 'nan' not in d
        for p in ET.parse(path).getroot().iter(f'{SVG_NS}polyline'):
            values = [float(c) for pair in p.get('points').split() for c in pair.split(',')]
            assert all(math.isfinite(c) for c in values)

    def test_empty_series_rejected(self, tmp_path):
        with pytest.raises(ArgumentError):
            emit_svg(str(tmp_path / 'e.svg'), [], PlotAxes('x', 'y'))
        with pytest.raises(ArgumentError):
            emit_svg(str(tmp_path / 'e.svg'), [PlotSeries('a', [])], PlotAxes('x', 'y'))

    def test_deterministic(self, tmp_path):
        series = [PlotSeries('a', [(0.0, 0.0), (1.0, 2.0)])]
        emit_svg(str(tmp_path / '1.svg'), series, PlotAxes('x', 'y'))
        emit_svg(str(tmp_path / '2.svg'), series, PlotAxes('x', 'y'))
        assert (tmp_path / '1.svg').read_bytes() == (tmp_path / '2.svg').read_bytes()


class TestObj:

    def test_vertices_then_segments(self, tmp_path):
        path = tmp_path / 'line.obj'
        emit_obj(str(path), [(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (1.0, 1.0, 0.5)])
        assert path.read_text().splitlines() == [
            'v 0 0 0',
            'v 1 0 0',
            'v 1 1 0.5',
            'l 1 2',
            'l 2 3',
        ]

    def test_needs_two_points(self, tmp_path):
        with pytest.raises(ArgumentError):
            emit_obj(str(tmp_path / 'p.obj'), [(0.0, 0.0, 0.0)])
