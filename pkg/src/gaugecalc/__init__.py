"""Homotopy classification of gauge groups over Riemann surfaces."""

__version__ = "0.1.0"
