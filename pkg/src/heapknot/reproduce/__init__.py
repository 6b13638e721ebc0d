"""Reproduction of the shipped acceptance targets."""

from .loader import TargetLoader
from .runner import ReproduceRunner, expectations_met, link_from_params

__all__ = ["ReproduceRunner", "TargetLoader", "expectations_met", "link_from_params"]
