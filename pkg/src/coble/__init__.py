"""Exact computations with Coble covariants of Del Pezzo surfaces of degree 2 to 5."""

__version__ = "0.1.0"
