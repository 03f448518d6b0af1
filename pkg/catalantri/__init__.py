"""
catalantri - exact Catalan-family triangles, identity verification and
lattice-path bijections.
"""

__version__ = "0.1.0"
