"""
Unit tests for settings resolution
"""
import pytest

from src.core.config import ToolkitSettings, get_settings
from src.core.exceptions import ConfigurationError, InputError


class TestToolkitSettings:
    """Defaults and DEFCONN_* overrides"""

    def test_defaults(self):
        settings = ToolkitSettings()
        assert settings.tol == 1e-9
        assert settings.identity_tol == 1e-12
        assert settings.grid_n == 64
        assert settings.refine_iters == 50
        assert (settings.r_min, settings.r_max, settings.r_points) == (0.05, 8.0, 160)
        assert settings.seed == 42

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("DEFCONN_TOL", "1e-6")
        monkeypatch.setenv("DEFCONN_GRID", "32")
        monkeypatch.setenv("DEFCONN_SEED", "7")
        settings = ToolkitSettings.from_env()
        assert settings.tol == 1e-6
        assert settings.grid_n == 32
        assert settings.seed == 7

    def test_blank_variable_keeps_default(self, monkeypatch):
        monkeypatch.setenv("DEFCONN_TOL", "  ")
        assert ToolkitSettings.from_env().tol == 1e-9

    def test_unparseable_value(self, monkeypatch):
        monkeypatch.setenv("DEFCONN_GRID", "many")
        with pytest.raises(ConfigurationError):
            ToolkitSettings.from_env()

    def test_non_positive_tolerance(self, monkeypatch):
        monkeypatch.setenv("DEFCONN_TOL", "0")
        with pytest.raises(InputError):
            ToolkitSettings.from_env()

    def test_small_grid(self, monkeypatch):
        monkeypatch.setenv("DEFCONN_GRID", "8")
        with pytest.raises(ConfigurationError):
            ToolkitSettings.from_env()

    def test_dotenv_file(self, tmp_path):
        env_file = tmp_path / ".env"
        env_file.write_text("DEFCONN_SEED=99\n")
        assert ToolkitSettings.from_env(str(env_file)).seed == 99

    def test_cached(self):
        assert get_settings() is get_settings()

    def test_immutable(self):
        with pytest.raises(AttributeError):
            ToolkitSettings().tol = 1.0
