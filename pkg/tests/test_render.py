"""Deterministic SVG and TSV rendering."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from motivic_stems.charts import lift_to_motivic
from motivic_stems.regions import resolve_group
from motivic_stems.render import (
    REGION_FILL,
    ChartStyle,
    RenderError,
    bidegree_window,
    fmt3,
    groups_tsv,
    motivic_chart_svg,
    region_chart_svg,
)


@pytest.mark.parametrize(
    "value, text",
    [
        (Fraction(1, 8), "0.125"),
        (Fraction(-7, 2), "-3.500"),
        (2, "2.000"),
        (0, "0.000"),
        (Fraction(1, 3), "0.333"),
        (Fraction(-1, 3), "-0.333"),
        (Fraction(1, 16), "0.062"),  # ties round to even, no float involved
    ],
)
def test_fmt3(value, text):
    assert fmt3(value) == text


def test_chart_style_validation():
    with pytest.raises(RenderError, match="empty chart range"):
        ChartStyle(s_min=5, s_max=4, w_min=0, w_max=1)
    with pytest.raises(RenderError, match="scale must be positive"):
        ChartStyle(scale=0)
    with pytest.raises(RenderError, match="unknown family overlays"):
        ChartStyle(family_overlays=("nope",))
    ChartStyle(family_overlays=("eta_powers", "tau_powers"))  # all builtin names pass


def test_region_chart_is_deterministic_and_well_formed(sample_stems):
    style = ChartStyle(s_min=-2, s_max=12, w_min=-4, w_max=13, group_dots=True, family_overlays=("eta_powers",))
    svg = region_chart_svg(style, stems_table=sample_stems)
    assert svg == region_chart_svg(style, stems_table=sample_stems)
    assert svg.startswith("<svg ") and svg.endswith("</svg>\n")
    ET.fromstring(svg)  # well-formed XML
    for gid in ("regions", "axes", "boundaries", "groups", "families", "legend"):
        assert f'<g id="{gid}">' in svg
    for fill in REGION_FILL.values():
        assert fill in svg
    assert "eta_powers" in svg
    assert "w = 3s/5 + 1" in svg


def test_region_chart_layers_can_be_switched_off():
    style = ChartStyle(s_min=0, s_max=4, w_min=0, w_max=4, shade_regions=False, boundary_lines=False)
    svg = region_chart_svg(style)
    assert '<g id="regions">' not in svg
    assert '<g id="boundaries">' not in svg
    assert '<g id="groups">' not in svg  # dots default to off


def test_bidegree_window():
    assert list(bidegree_window(0, 1, 0, 1)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(RenderError, match="empty window"):
        list(bidegree_window(1, 0, 0, 0))


def test_groups_tsv_rows(sample_stems):
    out = groups_tsv(bidegree_window(-1, 7, -1, 5), stems_table=sample_stems)
    lines = out.splitlines()
    assert lines[0] == "# s\tw\tregion\tgroup\tgenerator"
    assert "0\t0\tTauLocal\tZ2\t1" in lines
    assert "3\t1\tTauLocal\tZ/8\t-" in lines
    assert "7\t4\tTauLocal\tZ/16\t-" in lines
    assert "5\t5\tEtaLocal\tZ/2\teta^5" in lines
    assert "-1\t-1\tZero\t0\t-" in lines
    data = lines[1:]
    assert data == sorted(data, key=lambda row: (int(row.split("\t")[0]), int(row.split("\t")[1])))
    assert len(data) == 9 * 7


def test_groups_tsv_dedupes_and_accepts_custom_resolver():
    calls = []

    def resolver(s, w):
        calls.append((s, w))
        return resolve_group(s, w)

    out = groups_tsv([(0, 0), (0, 0), (2, 1)], resolver=resolver)
    assert len(out.splitlines()) == 3
    assert calls == [(0, 0), (2, 1)]
    assert "2\t1\tTauLocal\tpi_2\t-" in out


def test_motivic_chart_tooltips(sample_chart):
    lift = lift_to_motivic(sample_chart)
    style = ChartStyle(s_min=0, s_max=15, w_min=0, w_max=15, scale=24)
    svg = motivic_chart_svg(lift, style)
    assert svg == motivic_chart_svg(lift, style)
    ET.fromstring(svg)
    assert "<title>alpha1: w &lt;= 1 (Z/2)</title>" in svg
    assert "<title>1: w &lt;= 0 (Z2)</title>" in svg
    assert "<title>alpha2/2: w &lt;= 2 (Z/4)</title>" in svg
    assert svg.count("<line ") >= 13  # eta-edge segments along the alpha1 spine
    assert '<g id="eta-edges">' in svg and '<g id="classes">' in svg


def test_motivic_chart_default_style(sample_chart):
    svg = motivic_chart_svg(lift_to_motivic(sample_chart))
    ET.fromstring(svg)
    assert "alpha1^9*alpha3" in svg
