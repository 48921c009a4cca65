"""Algebraic (Groebner-basis) cryptanalysis of LWE at desk scale."""

__version__ = "0.1.0"
