"""Certifying checks for subdivision, linkage and planarity statements on small graphs."""

__version__ = "0.1.0"

from .graph import Graph, Separation  # noqa: E402,F401
