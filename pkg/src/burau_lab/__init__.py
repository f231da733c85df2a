"""Braid and truncated Galois actions on the homology of cyclic covers of P^1."""

__version__ = "0.1.0"
