"""Greedy search and exact verification toolkit for line arrangements."""

__version__ = "0.1.0"
