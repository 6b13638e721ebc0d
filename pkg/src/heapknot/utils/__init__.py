"""Shared helpers."""

from .parallel import apply_pool, pbar, resolve_workers

__all__ = ["apply_pool", "pbar", "resolve_workers"]
