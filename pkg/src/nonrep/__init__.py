"""Nonrepetitive graph colouring: constructions, oracles and exact solvers."""

__version__ = "0.1.0"
