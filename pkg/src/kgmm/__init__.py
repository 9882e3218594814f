"""KGMM: graded maturity assessment for human-machine curated knowledge graphs."""

__version__ = "0.1.0"
