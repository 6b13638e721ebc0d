"""Heap colorings, ribbon cocycle invariants and fundamental heaps of framed links."""

__version__ = "0.1.0"
__author__ = "heapknot developers"

__all__ = ["__version__"]
