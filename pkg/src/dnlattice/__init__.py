"""Exact integral representation toolkit for dihedral-group lattices."""

__version__ = "0.1.0"
