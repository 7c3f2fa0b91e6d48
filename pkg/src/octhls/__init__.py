"""Octonionic Heisenberg group geometry, bispherical spectra, and the
sharp constants of the HLS / Sobolev / Log-Sobolev family, with
independent quadrature and Monte Carlo cross-checks."""

from .nilgroup import Q

__all__ = ["Q"]
__version__ = "0.1.0"
