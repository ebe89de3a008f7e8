"""Exact computational workbench for functor homology and stable homology
of orthogonal and symplectic groups over finite fields.

Everything here is exact arithmetic over GF(q); there is no floating point
anywhere in the package.
"""

__version__ = "0.1.0"
