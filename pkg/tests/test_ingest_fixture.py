import pytest

from greendex import (
    Direction,
    FormatError,
    IndicatorSpec,
    bundled_snapshot_path,
    parse_fixture_csv,
    serialize_fixture_csv,
)
from greendex.ingest.fixture import format_number
from conftest import make_matrix

SAMPLE = b"geo,tin00111,tin00110\nAT,63,12.5\nBE,68.5,\n"


class TestParse:
    def test_basic(self):
        m = parse_fixture_csv(SAMPLE, year=2019)
        assert m.units == ("AT", "BE")
        assert m.codes() == ("tin00111", "tin00110")
        assert m.values == ((63.0, 12.5), (68.5, None))
        assert m.year == 2019

    def test_specs_supply_direction_and_label(self):
        specs = [IndicatorSpec("tin00110", "turnover", 2, Direction.DESTIMULANT)]
        m = parse_fixture_csv(SAMPLE, specs=specs, year=2019)
        by_code = {s.code: s for s in m.indicators}
        assert by_code["tin00110"].direction is Direction.DESTIMULANT
        assert by_code["tin00110"].label == "turnover"
        # unmatched header code gets a synthesized stimulant spec
        assert by_code["tin00111"].direction is Direction.STIMULANT

    def test_empty_cell_is_missing(self):
        m = parse_fixture_csv(SAMPLE, year=2019)
        assert m.missing_cells() == (("BE", "tin00110"),)

    def test_header_must_start_with_geo(self):
        with pytest.raises(FormatError) as exc:
            parse_fixture_csv(b"country,x1\nAT,1\nBE,2\n", year=2019)
        assert exc.value.line == 1 and exc.value.column == 1

    def test_duplicate_code_rejected(self):
        with pytest.raises(FormatError, match="duplicate indicator"):
            parse_fixture_csv(b"geo,x1,x1\nAT,1,2\nBE,3,4\n", year=2019)

    def test_duplicate_geo_rejected(self):
        with pytest.raises(FormatError) as exc:
            parse_fixture_csv(b"geo,x1\nAT,1\nAT,2\n", year=2019)
        assert exc.value.line == 3

    def test_non_numeric_cell_rejected_with_position(self):
        with pytest.raises(FormatError) as exc:
            parse_fixture_csv(b"geo,x1,x2\nAT,1,abc\nBE,2,3\n", year=2019)
        assert exc.value.line == 2 and exc.value.column == 3

    def test_nan_and_underscores_rejected(self):
        for bad in (b"nan", b"inf", b"1_000"):
            with pytest.raises(FormatError):
                parse_fixture_csv(b"geo,x1\nAT," + bad + b"\nBE,2\n", year=2019)

    def test_ragged_row_rejected(self):
        with pytest.raises(FormatError) as exc:
            parse_fixture_csv(b"geo,x1,x2\nAT,1\nBE,2,3\n", year=2019)
        assert exc.value.line == 2

    def test_empty_file_rejected(self):
        with pytest.raises(FormatError, match="empty"):
            parse_fixture_csv(b"", year=2019)

    def test_not_utf8_rejected(self):
        with pytest.raises(FormatError, match="UTF-8"):
            parse_fixture_csv(b"geo,x1\nAT,\xff\xfe\nBE,2\n", year=2019)

    def test_scientific_notation_accepted(self):
        m = parse_fixture_csv(b"geo,x1\nAT,1.5e1\nBE,2\n", year=2019)
        assert m.values[0][0] == 15.0


class TestFormatNumber:
    def test_integral_drops_point_zero(self):
        assert format_number(63.0) == "63"
        assert format_number(-4.0) == "-4"

    def test_fractional_uses_shortest_repr(self):
        assert format_number(68.5) == "68.5"
        assert format_number(0.1) == "0.1"


class TestRoundTrip:
    def test_parse_serialize_is_byte_stable(self):
        data = b"geo,x1,x2\nAT,63,12.5\nBE,68.5,\n"
        m = parse_fixture_csv(data, year=2019)
        assert serialize_fixture_csv(m) == data

    def test_missing_trailing_newline_is_restored(self):
        data = b"geo,x1\nAT,1\nBE,2"
        m = parse_fixture_csv(data, year=2019)
        assert serialize_fixture_csv(m) == data + b"\n"

    def test_serialize_parse_preserves_matrix(self):
        m = make_matrix([[1.5, None], [2.0, 3.25]], units=["AT", "BE"])
        again = parse_fixture_csv(serialize_fixture_csv(m),
                                  specs=m.indicators, year=m.year)
        assert again.units == m.units
        assert again.values == m.values
        assert again.codes() == m.codes()

    def test_bundled_snapshot_round_trips_exactly(self):
        data = bundled_snapshot_path().read_bytes()
        m = parse_fixture_csv(data, year=2019)
        assert serialize_fixture_csv(m) == data
        assert m.n_units == 28 and m.n_indicators == 7
        assert not m.missing_cells()
