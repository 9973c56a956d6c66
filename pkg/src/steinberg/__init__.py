"""Exact-arithmetic checks for the Steinberg component of the GL3 parameter space."""

__version__ = "0.1.0"
