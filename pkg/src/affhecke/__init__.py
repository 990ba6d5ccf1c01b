"""
Exact-arithmetic tools for the extended affine symmetric group of type A,
its Hecke algebra, the affine q-Schur algebra, and word-bimodule
categorification data, with mechanical verification suites.
"""

__version__ = "0.1.0"

__all__ = ["ratq", "poly", "weyl", "hecke", "schur", "soergel",
           "relations", "rouquier", "singular", "cli"]
