"""Exact picture invariants of mixed tensor spaces over Lie color algebras."""

__version__ = "0.1.0"
