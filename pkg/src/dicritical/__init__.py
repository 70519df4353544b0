"""Exact computations with valuations, monomial ideals and plane pencils."""

__version__ = "0.1.0"
