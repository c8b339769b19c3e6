"""Exact verification of special orthogonal moment maps and the exceptional
Lie superalgebras built from them.

The library works over the rational function field Q(l1, l2, l3, a) with no
floating point: octonion algebras with symbolic structure constants, their
derivation algebra acting on imaginary octonions, the spin representation of
so(7) on the full octonions, a two-parameter family on a tensor product of
symplectic planes, the covariants psi and Q attached to a special moment map,
Hodge duality between spaces of alternating covariants, and the superalgebra
constructions these feed (one-parameter family, 31-dimensional, and
40-dimensional).  Every identity is checked as an exact equality of
multivariate rational functions.
"""

from .scalars import ALPHA, Frac, L1, L2, L3, ONE, ZERO, parse, rat, var

__all__ = [
    "ALPHA",
    "Frac",
    "L1",
    "L2",
    "L3",
    "ONE",
    "ZERO",
    "parse",
    "rat",
    "var",
]

__version__ = "0.1.0"
