"""Exact enumeration workbench for domino and lozenge tilings."""

__version__ = "0.1.0"
