"""Tests for the ConfigManager class and the limits."""

import os

import pytest

from certilab.config import ConfigManager, Limits, get_debug, get_limits, set_limits
from certilab.config.manager import default_config_path


@pytest.fixture
def config_file(tmp_path):
    """Write a config file and return its path."""
    def write(content):
        path = tmp_path / "certilab.conf"
        path.write_text(content)
        return str(path)
    return write


class TestConfigManager:
    """Tests for ConfigManager class."""

    def test_read_config_file_with_comments(self, mock_console, config_file):
        """Test reading a config file with comments and inline comments."""
        path = config_file(
            "# certilab limits\n"
            "\n"
            "BRR_VERTEX_CAP=120  # greedy stays small\n"
            "WORKERS = 8\n"
            "not a setting\n"
        )
        config_vars = ConfigManager(mock_console, path).load_config()
        assert config_vars == {"BRR_VERTEX_CAP": "120", "WORKERS": "8"}

    def test_missing_file_gives_nothing(self, mock_console, tmp_path):
        """Test that a missing config file loads as empty."""
        assert ConfigManager(mock_console, str(tmp_path / "absent.conf")).load_config() == {}

    def test_resolve_limits(self, mock_console, config_file, temp_env):
        """Test file values, environment overrides and rejected entries."""
        path = config_file("BRR_VERTEX_CAP=120\nWORKERS=8\nGRID_VERTEX_CAP=lots\nRP_SIZE_CAP=-4\nCOLOR=blue\n")
        os.environ["CERTILAB_WORKERS"] = "2"
        manager = ConfigManager(mock_console, path)
        manager.load_config()
        limits = manager.resolve_limits()
        assert limits.brr_vertex_cap == 120
        assert limits.workers == 2
        assert limits.grid_vertex_cap == Limits().grid_vertex_cap
        assert limits.rp_size_cap == Limits().rp_size_cap

    def test_apply_installs_limits(self, mock_console, config_file, temp_env):
        """Test that apply installs the resolved limits."""
        os.environ.pop("CERTILAB_SCHEDULE_MAX_RETRIES", None)
        path = config_file("SCHEDULE_MAX_RETRIES=9\n")
        installed = ConfigManager(mock_console, path).apply()
        assert installed.schedule_max_retries == 9
        assert get_limits() == installed

    def test_default_config_path(self, temp_env):
        """Test that CERTILAB_CONFIG overrides the default location."""
        os.environ["CERTILAB_CONFIG"] = "/tmp/other.conf"
        assert default_config_path() == "/tmp/other.conf"
        del os.environ["CERTILAB_CONFIG"]
        assert default_config_path().endswith(os.path.join(".config", "certilab.conf"))


class TestLimits:
    """Tests for Limits and the debug switch."""

    def test_keys_map_to_fields(self):
        """Test upper-case config keys."""
        keys = Limits.keys()
        assert keys["BRUTE_FORCE_VERTEX_CAP"] == "brute_force_vertex_cap"
        assert len(keys) == 9

    def test_defaults(self):
        """Test the default caps."""
        limits = Limits()
        assert limits.hop_diameter_vertex_cap == 100000
        assert limits.brute_force_closure_cap == 30
        assert limits.updated({"workers": 1}).workers == 1

    def test_set_limits(self):
        """Test that set_limits replaces the active limits."""
        set_limits(Limits(workers=3))
        assert get_limits().workers == 3

    def test_get_debug(self, temp_env):
        """Test the accepted debug spellings."""
        os.environ["CERTILAB_DEBUG"] = "yes"
        assert get_debug()
        os.environ["CERTILAB_DEBUG"] = "0"
        assert not get_debug()
        del os.environ["CERTILAB_DEBUG"]
        assert not get_debug()
