"""Exact verification toolkit for principal-level W-algebra certificates on the
Deligne exceptional series."""

__version__ = "0.1.0"
