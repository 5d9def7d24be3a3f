"""Exact construction of pointed Hopf algebras u(D,0,0), their duals and
Drinfeld doubles, with verification of ribbon structure."""

__version__ = "0.1.0"
