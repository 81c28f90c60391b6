"""Exact toolkit for graded Lie algebras and Dehn functions of solvable groups."""

__version__ = "0.1.0"
