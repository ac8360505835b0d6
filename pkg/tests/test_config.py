import pytest

from greendex import (
    ConfigError,
    ConstantColumnPolicy,
    DEFAULT_BASE_URL,
    Direction,
    ENV_BASE_URL,
    EurostatApi,
    EurostatTsv,
    FixtureCsv,
    MissingPolicy,
    TiePolicy,
    bundled_snapshot_path,
    default_config,
    load_config,
)

MINIMAL = """
name = "panel"
year = 2019
geos = ["AT", "BE"]

[[indicators]]
code = "tin00111"

[source]
kind = "fixture"
path = "snap.csv"
"""


def write(tmp_path, text):
    path = tmp_path / "run.toml"
    path.write_text(text, encoding="utf-8")
    return path


class TestDefaults:
    def test_default_config_points_at_bundled_snapshot(self):
        config = default_config()
        assert isinstance(config.source, FixtureCsv)
        assert config.source.path == bundled_snapshot_path()
        assert config.year == 2019
        assert len(config.geos) == 28
        assert len(config.indicators) == 7
        assert bundled_snapshot_path().exists()

    def test_settings_bundle(self):
        s = default_config().settings()
        assert s.missing is MissingPolicy.FAIL
        assert s.tie is TiePolicy.HIGHER_GROUP
        assert s.constant_column is ConstantColumnPolicy.ERROR


class TestLoad:
    def test_minimal(self, tmp_path):
        config = load_config(write(tmp_path, MINIMAL), env={})
        assert config.name == "panel"
        assert config.geos == ("AT", "BE")
        assert config.indicators[0].code == "tin00111"
        assert config.indicators[0].direction is Direction.STIMULANT
        assert isinstance(config.source, FixtureCsv)
        assert config.source.path == tmp_path / "snap.csv"

    def test_full_knobs(self, tmp_path):
        # Top-level keys must precede the [[indicators]] table to stay
        # top-level in TOML.
        knobs = ('missing_policy = "impute_column_mean"\n'
                 'tie_policy = "lower_group"\n'
                 'constant_column_policy = "drop_indicator"\n')
        text = MINIMAL.replace('geos = ["AT", "BE"]\n',
                               'geos = ["AT", "BE"]\n' + knobs)
        assert knobs in text
        config = load_config(write(tmp_path, text), env={})
        assert config.missing_policy is MissingPolicy.IMPUTE_COLUMN_MEAN
        assert config.tie_policy is TiePolicy.LOWER_GROUP
        assert config.constant_column_policy is ConstantColumnPolicy.DROP_INDICATOR

    def test_destimulant_direction(self, tmp_path):
        text = MINIMAL.replace('code = "tin00111"',
                               'code = "tin00111"\ndirection = "destimulant"')
        config = load_config(write(tmp_path, text), env={})
        assert config.indicators[0].direction is Direction.DESTIMULANT

    def test_tsv_source_paths_resolve_against_config_dir(self, tmp_path):
        text = MINIMAL.replace(
            'kind = "fixture"\npath = "snap.csv"',
            'kind = "tsv"\n[source.paths]\ntin00111 = "data/a.tsv"')
        config = load_config(write(tmp_path, text), env={})
        assert isinstance(config.source, EurostatTsv)
        assert config.source.paths["tin00111"] == tmp_path / "data" / "a.tsv"

    def test_api_source_defaults(self, tmp_path):
        text = MINIMAL.replace('kind = "fixture"\npath = "snap.csv"',
                               'kind = "api"')
        config = load_config(write(tmp_path, text), env={})
        assert isinstance(config.source, EurostatApi)
        assert config.source.base_url == DEFAULT_BASE_URL
        assert config.source.cache_dir == tmp_path / ".greendex-cache"

    def test_env_base_url(self, tmp_path):
        text = MINIMAL.replace('kind = "fixture"\npath = "snap.csv"',
                               'kind = "api"')
        config = load_config(write(tmp_path, text),
                             env={ENV_BASE_URL: "https://mirror.example/api"})
        assert config.source.base_url == "https://mirror.example/api"

    def test_base_url_in_both_places_is_ambiguous(self, tmp_path):
        text = MINIMAL.replace(
            'kind = "fixture"\npath = "snap.csv"',
            'kind = "api"\nbase_url = "https://a.example/api"')
        with pytest.raises(ConfigError, match="remove one"):
            load_config(write(tmp_path, text),
                        env={ENV_BASE_URL: "https://b.example/api"})


class TestRejections:
    @pytest.mark.parametrize("key,snippet", [
        ("name", 'name = "panel"\n'),
        ("year", "year = 2019\n"),
        ("geos", 'geos = ["AT", "BE"]\n'),
        ("indicators", '[[indicators]]\ncode = "tin00111"\n'),
        ("source", '[source]\nkind = "fixture"\npath = "snap.csv"\n'),
    ])
    def test_missing_required_key(self, tmp_path, key, snippet):
        assert snippet in MINIMAL  # guard against template drift
        with pytest.raises(ConfigError, match=key):
            load_config(write(tmp_path, MINIMAL.replace(snippet, "")), env={})

    def test_file_not_found(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            load_config(tmp_path / "absent.toml", env={})

    def test_invalid_toml(self, tmp_path):
        with pytest.raises(ConfigError, match="TOML"):
            load_config(write(tmp_path, "name = [unclosed"), env={})

    def test_duplicate_geos(self, tmp_path):
        with pytest.raises(ConfigError, match="duplicates"):
            load_config(write(tmp_path, MINIMAL.replace(
                '["AT", "BE"]', '["AT", "AT"]')), env={})

    def test_duplicate_indicator_codes(self, tmp_path):
        text = MINIMAL + '\n[[indicators]]\ncode = "tin00111"\n'
        with pytest.raises(ConfigError, match="duplicates"):
            load_config(write(tmp_path, text), env={})

    def test_bad_enum_value(self, tmp_path):
        text = MINIMAL.replace('geos = ["AT", "BE"]\n',
                               'geos = ["AT", "BE"]\nmissing_policy = "panic"\n')
        with pytest.raises(ConfigError, match="missing_policy"):
            load_config(write(tmp_path, text), env={})

    def test_bad_source_kind(self, tmp_path):
        with pytest.raises(ConfigError, match="kind"):
            load_config(write(tmp_path, MINIMAL.replace(
                'kind = "fixture"', 'kind = "ftp"')), env={})

    def test_fixture_without_path(self, tmp_path):
        with pytest.raises(ConfigError, match="source.path"):
            load_config(write(tmp_path, MINIMAL.replace(
                'path = "snap.csv"', "")), env={})
