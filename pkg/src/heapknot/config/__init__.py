"""Configuration management for heapknot."""

from .settings import Settings, get_settings, reset_settings, set_settings

__all__ = ["Settings", "get_settings", "reset_settings", "set_settings"]
