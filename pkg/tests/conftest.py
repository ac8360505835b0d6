import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from greendex import Direction, IndicatorSpec, ObservationMatrix  # noqa: E402


@pytest.fixture
def hand_matrix():
    """The worked 3x2 example: units A/B/C, two stimulant indicators."""
    return ObservationMatrix(
        units=("A", "B", "C"),
        indicators=(IndicatorSpec("x1", "first", 1, Direction.STIMULANT),
                    IndicatorSpec("x2", "second", 2, Direction.STIMULANT)),
        values=((2.0, 10.0), (4.0, 20.0), (10.0, 40.0)),
        year=2019)


def make_matrix(values, directions=None, units=None, year=2019):
    """Small helper: build a matrix from a list of rows."""
    n = len(values)
    m = len(values[0]) if values else 0
    units = units or [f"U{i}" for i in range(n)]
    directions = directions or [Direction.STIMULANT] * m
    specs = [IndicatorSpec(f"x{j + 1}", f"indicator {j + 1}", j + 1, d)
             for j, d in enumerate(directions)]
    return ObservationMatrix(units=units, indicators=specs,
                             values=values, year=year)
