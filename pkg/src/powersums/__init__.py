"""Exact computations with algebras of generalized power sums and quasi-invariants."""

__version__ = "0.1.0"
