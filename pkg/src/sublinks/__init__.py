"""Independent sets as trivial sublinks: graphs to braid words to link
diagrams, with verification and rendering."""

from __future__ import annotations

from .braids import CONVENTION

__all__ = ["CONVENTION"]
__version__ = "0.1.0"
