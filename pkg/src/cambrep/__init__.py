"""Representation type of incidence algebras of Coxeter-theoretic lattices."""

__version__ = "0.1.0"
