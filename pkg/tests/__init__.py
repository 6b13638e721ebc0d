"""Tests for heapknot."""
