"""Static SVG bar chart of the synthetic measure.

One horizontal bar per unit, sorted by w descending, colored by group,
with dashed vertical lines at the three classification cuts. Pure
ElementTree output, no plotting dependency.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .measure import AnalysisResult
from .report import sig6

GROUP_COLORS = {"I": "#1a7832", "II": "#7fbf7b", "III": "#fdae61", "IV": "#d7301f"}

_WIDTH = 820
_MARGIN_LEFT = 56
_MARGIN_RIGHT = 96
_MARGIN_TOP = 52
_MARGIN_BOTTOM = 16
_BAR_HEIGHT = 16
_BAR_GAP = 6


def render_chart(result: AnalysisResult, title: str) -> str:
    """Return the chart as an SVG document string."""
    scores = result.scores
    c = result.classification
    groups = c.assignments

    lo = min(0.0, c.lower, *(s.w for s in scores))
    hi = max(1.0, c.upper, *(s.w for s in scores))
    plot_w = _WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT

    def x(v: float) -> float:
        return _MARGIN_LEFT + (v - lo) / (hi - lo) * plot_w

    height = _MARGIN_TOP + len(scores) * (_BAR_HEIGHT + _BAR_GAP) + _MARGIN_BOTTOM
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(_WIDTH), "height": str(height),
        "viewBox": f"0 0 {_WIDTH} {height}",
        "font-family": "sans-serif", "font-size": "11",
    })
    ET.SubElement(svg, "rect", {"x": "0", "y": "0", "width": str(_WIDTH),
                                "height": str(height), "fill": "white"})
    title_el = ET.SubElement(svg, "text", {"x": str(_MARGIN_LEFT), "y": "20",
                                           "font-size": "14", "font-weight": "bold"})
    title_el.text = title

    plot_top = _MARGIN_TOP - 8
    plot_bottom = height - _MARGIN_BOTTOM
    for value, label in ((c.upper, "mean+sd"), (c.mean_w, "mean"),
                         (c.lower, "mean-sd")):
        lx = x(value)
        ET.SubElement(svg, "line", {
            "class": "threshold",
            "x1": f"{lx:.2f}", "x2": f"{lx:.2f}",
            "y1": str(plot_top), "y2": str(plot_bottom),
            "stroke": "#555", "stroke-dasharray": "4 3", "stroke-width": "1",
        })
        text = ET.SubElement(svg, "text", {"x": f"{lx:.2f}", "y": str(plot_top - 4),
                                           "text-anchor": "middle", "fill": "#555"})
        text.text = f"{label} {sig6(value)}"

    for i, score in enumerate(scores):
        y = _MARGIN_TOP + i * (_BAR_HEIGHT + _BAR_GAP)
        group = groups[score.unit].value
        ET.SubElement(svg, "rect", {
            "class": "bar",
            "data-unit": score.unit,
            "data-group": group,
            "x": f"{x(0.0):.2f}", "y": str(y),
            "width": f"{max(x(score.w) - x(0.0), 0.0):.2f}",
            "height": str(_BAR_HEIGHT),
            "fill": GROUP_COLORS[group],
        })
        label = ET.SubElement(svg, "text", {
            "x": str(_MARGIN_LEFT - 6), "y": str(y + _BAR_HEIGHT - 4),
            "text-anchor": "end",
        })
        label.text = score.unit
        value = ET.SubElement(svg, "text", {
            "x": f"{x(score.w) + 4:.2f}", "y": str(y + _BAR_HEIGHT - 4),
            "fill": "#333",
        })
        value.text = f"{sig6(score.w)} ({group})"

    return ET.tostring(svg, encoding="unicode") + "\n"
