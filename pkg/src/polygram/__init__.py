"""Exact enumeration of parallelogram polyominoes, polycubes and polyhypercubes."""

__version__ = "0.1.0"
