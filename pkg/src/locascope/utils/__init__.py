"""Utility helpers: atomic output and the worker pool."""

from .output import emit, render_csv, render_json, write_text_atomic
from .parallel import ordered_map

__all__ = ["emit", "render_csv", "render_json", "write_text_atomic", "ordered_map"]
