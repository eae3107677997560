"""Exact arithmetic and claim verification for polynomial composite rings A + X·B[X]."""

__version__ = "0.1.0"
