"""Tests for run configuration, config files and package-level settings."""

import pytest

import holoquant as hq
from holoquant.config import global_config
from holoquant.exceptions import ConfigFileError, ConfigurationError
from holoquant.models import RunConfig
from holoquant.settings import ENV_PREFIX, ConfigFileReader, ConfigResolver


class TestRunConfig:
    """Validated run settings."""

    def test_defaults(self):
        config = RunConfig()
        assert config.cutoff == 40
        assert config.seed == 0
        assert config.truncation().cutoffs == (40,)
        assert config.grid_spec().resolution == 81

    def test_unknown_fields_are_rejected(self):
        with pytest.raises(ValueError):
            RunConfig(cutof=3)

    @pytest.mark.parametrize("selection", ["all", "nonnegative", "1,-1", " 2 "])
    def test_k_selection(self, selection):
        RunConfig(k_selection=selection)

    def test_bad_k_selection(self):
        with pytest.raises(ValueError):
            RunConfig(k_selection="positive")

    def test_lattice_from_selection(self):
        lat = RunConfig(lattice_sites=8, k_selection="1,-1").lattice()
        assert lat.mode_count == 2

    def test_digest_is_stable(self):
        assert RunConfig(seed=3).digest() == RunConfig(seed=3).digest()
        assert RunConfig(seed=3).digest() != RunConfig(seed=4).digest()
        assert len(RunConfig().digest()) == 16


class TestConfigFileReader:
    """Flat YAML config files."""

    def test_load(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("cutoff: 12\nk_selection: nonnegative\n")
        assert ConfigFileReader(path).load() == {"cutoff": 12, "k_selection": "nonnegative"}

    def test_empty_file(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("")
        assert ConfigFileReader(path).load() == {}

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigFileError, match="not found"):
            ConfigFileReader(tmp_path / "absent.yaml").load()

    @pytest.mark.parametrize(
        "text, message",
        [
            ("- 1\n- 2\n", "key: value"),
            ("cutof: 3\n", "Unknown key"),
            ("cutoff: [1, 2]\n", "scalars"),
            ("cutoff: [1, 2\n", "not valid"),
        ],
    )
    def test_malformed(self, tmp_path, text, message):
        path = tmp_path / "run.yaml"
        path.write_text(text)
        with pytest.raises(ConfigFileError, match=message):
            ConfigFileReader(path).load()

    def test_file_errors_are_configuration_errors(self):
        assert issubclass(ConfigFileError, ConfigurationError)


class TestConfigResolver:
    """Priority: flags over file over environment over defaults."""

    def test_defaults_without_sources(self):
        assert ConfigResolver(environ={}).resolve() == RunConfig()

    def test_environment(self):
        config = ConfigResolver(environ={ENV_PREFIX + "CUTOFF": "7", ENV_PREFIX + "MASS": "0.5"}).resolve()
        assert config.cutoff == 7
        assert config.mass == 0.5
        assert "cutoff" in config.model_fields_set

    def test_file_beats_environment(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("cutoff: 9\n")
        config = ConfigResolver(environ={"HOLOQUANT_CUTOFF": "7", "HOLOQUANT_SEED": "5"}).resolve(path)
        assert config.cutoff == 9
        assert config.seed == 5

    def test_flags_beat_file(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("cutoff: 9\nseed: 2\n")
        config = ConfigResolver(environ={}).resolve(path, cutoff=11, seed=None)
        assert config.cutoff == 11
        assert config.seed == 2

    def test_unset_fields_stay_unset(self):
        config = ConfigResolver(environ={}).resolve(seed=1)
        assert config.model_fields_set == {"seed"}

    def test_invalid_values(self):
        with pytest.raises(ConfigurationError, match="Invalid configuration"):
            ConfigResolver(environ={"HOLOQUANT_CUTOFF": "many"}).resolve()


class TestPackageSettings:
    """Module-level access to global tolerances."""

    def test_read_through_module(self):
        assert hq.tail_fraction == global_config.tail_fraction

    def test_assignment_updates_global_config(self):
        hq.tail_fraction = 1e-3
        assert global_config.tail_fraction == 1e-3
        assert hq.tail_fraction == 1e-3

    def test_unknown_attribute(self):
        with pytest.raises(AttributeError):
            hq.no_such_setting

    def test_public_names(self):
        for name in hq.__all__:
            assert hasattr(hq, name)
