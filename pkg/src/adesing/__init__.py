"""Invariants of simple hypersurface singularities and ADE Weyl group checks."""

__version__ = "0.1.0"
