import xml.etree.ElementTree as ET

from greendex import run_pipeline
from greendex.chart import GROUP_COLORS, render_chart
from conftest import make_matrix

NS = {"s": "http://www.w3.org/2000/svg"}


def chart_for(values, units):
    result = run_pipeline(make_matrix(values, units=units))
    return result, render_chart(result, "test chart")


def test_valid_svg_with_one_bar_per_unit():
    result, svg = chart_for(
        [[2.0, 10.0], [4.0, 20.0], [10.0, 40.0]], ["A", "B", "C"])
    root = ET.fromstring(svg)
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    bars = [r for r in root.findall(".//s:rect", NS)
            if r.get("class") == "bar"]
    assert len(bars) == 3
    assert [b.get("data-unit") for b in bars] == list(result.ranking())


def test_bars_carry_group_and_color():
    result, svg = chart_for(
        [[2.0, 10.0], [4.0, 20.0], [10.0, 40.0]], ["A", "B", "C"])
    root = ET.fromstring(svg)
    groups = result.classification.assignments
    for bar in root.findall(".//s:rect", NS):
        if bar.get("class") != "bar":
            continue
        unit = bar.get("data-unit")
        assert bar.get("data-group") == groups[unit].value
        assert bar.get("fill") == GROUP_COLORS[groups[unit].value]


def test_three_threshold_lines():
    _, svg = chart_for([[2.0, 10.0], [4.0, 20.0], [10.0, 40.0]],
                       ["A", "B", "C"])
    root = ET.fromstring(svg)
    lines = [ln for ln in root.findall(".//s:line", NS)
             if ln.get("class") == "threshold"]
    assert len(lines) == 3
    for line in lines:
        assert line.get("stroke-dasharray")


def test_title_present():
    _, svg = chart_for([[1.0, 3.0], [2.0, 5.0]], ["A", "B"])
    assert "test chart" in svg


def test_bar_widths_monotone_in_w():
    result, svg = chart_for(
        [[2.0, 10.0], [4.0, 20.0], [10.0, 40.0]], ["A", "B", "C"])
    root = ET.fromstring(svg)
    widths = [float(b.get("width")) for b in root.findall(".//s:rect", NS)
              if b.get("class") == "bar"]
    assert widths == sorted(widths, reverse=True)
