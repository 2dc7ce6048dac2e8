"""Exact tools for tame-type weight combinatorics, deformation ring
presentations with higher Hodge-Tate weights, and lattice valuation profiles.

Everything here computes over exact rationals. Floating point is never used.
"""

__version__ = "0.1.0"
