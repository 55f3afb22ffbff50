"""Brush numbers of graphs.

Graphs are built with the make_* helpers or Graph(n, edges). Configurations
and sequences are plain lists indexed by vertex id.
"""

from ._core import *  # noqa: F401,F403
from ._core import BrushError, Graph

__all__ = [name for name in dir() if not name.startswith("_")]
