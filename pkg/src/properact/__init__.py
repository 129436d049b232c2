"""Exact-arithmetic criteria for properly discontinuous actions on
homogeneous spaces of reductive type, plus a small HTTP service and CLI."""

__version__ = "0.1.0"
