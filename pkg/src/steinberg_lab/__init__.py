"""Exact-arithmetic lab for root systems, apartments and harmonic cochains."""

from .rootsys import RootSystem, RootSystemType, build

__all__ = ["RootSystem", "RootSystemType", "build"]
__version__ = "0.1.0"
