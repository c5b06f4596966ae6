"""Exact barycentric kernel for generalized Apollonius circles and their coaxality theorems."""

__version__ = "0.1.0"
