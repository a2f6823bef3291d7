"""Exact verification of the line configuration on the Maschke octic."""

__version__ = "0.1.0"
