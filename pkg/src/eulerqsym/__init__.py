"""Cycle-type Eulerian quasisymmetric functions and (q,p)-Eulerian polynomials."""

__version__ = "0.1.0"
