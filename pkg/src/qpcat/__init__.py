"""Ginzburg dg categories of graded quivers with superpotential, their zeroth
homology, and type-A higher cluster orbit categories."""

__version__ = "0.1.0"
