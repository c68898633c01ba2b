"""Integration of nilpotent L-infinity algebras to Kan complexes, with exact bookkeeping."""
__version__ = "0.1.0"
