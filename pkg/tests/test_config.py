"""Tests for settings loading."""

from heapknot.config import Settings, get_settings, reset_settings, set_settings


def test_defaults():
    """Test that the documented defaults are in place."""
    settings = Settings()
    assert settings.state_budget == 10**8
    assert settings.workers is None
    assert settings.enumeration.chunk_size == 4096
    assert settings.complex.max_tuple_count == 8**7
    assert settings.complex.verify_complex is False
    assert settings.output.json_indent == 2


def test_environment_override(monkeypatch):
    """Test that HEAPKNOT_ variables override defaults."""
    monkeypatch.setenv("HEAPKNOT_STATE_BUDGET", "1000")
    monkeypatch.setenv("HEAPKNOT_ENUMERATION__CHUNK_SIZE", "64")
    settings = Settings()
    assert settings.state_budget == 1000
    assert settings.enumeration.chunk_size == 64


def test_from_yaml(tmp_path):
    """Test that a YAML file fills nested sections."""
    path = tmp_path / "heapknot.yaml"
    path.write_text(
        "state_budget: 500\n"
        "workers: 2\n"
        "complex:\n"
        "  verify_complex: true\n"
        "output:\n"
        "  sort_keys: false\n",
        encoding="utf-8",
    )
    settings = Settings.from_yaml(path)
    assert settings.state_budget == 500
    assert settings.workers == 2
    assert settings.complex.verify_complex is True
    assert settings.complex.max_tuple_count == 8**7
    assert settings.output.sort_keys is False


def test_empty_yaml(tmp_path):
    """Test that an empty file gives the defaults."""
    path = tmp_path / "empty.yaml"
    path.write_text("", encoding="utf-8")
    assert Settings.from_yaml(path).state_budget == 10**8


def test_global_instance(monkeypatch):
    """Test get, set and reset of the cached settings."""
    first = get_settings()
    assert get_settings() is first
    custom = Settings(state_budget=7)
    set_settings(custom)
    assert get_settings() is custom
    monkeypatch.setenv("HEAPKNOT_STATE_BUDGET", "9")
    reset_settings()
    assert get_settings().state_budget == 9
