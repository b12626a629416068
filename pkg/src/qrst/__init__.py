"""Exact (q, t)-deformed Robinson-Schensted correspondences via growth diagrams."""

__version__ = "0.1.0"
