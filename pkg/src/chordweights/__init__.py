"""Exact weight-system computations on chord diagrams.

The package computes the universal sl2 weight polynomial of chord diagrams by
the memoized deletion/surgery recursion, builds the Genocchi- and
Kreweras-family triangles (integer and polynomial), expands the matching
continued fractions, and mechanically verifies the identities tying all of
these together.
"""

from .diagrams import (
    ChordDiagram,
    canonical_key,
    delete_chord,
    enumerate_diagrams,
    four_term_quadruples,
    make_A,
    make_B,
    make_Dn,
    reflect,
    rotate,
    surgery_split,
)
from .polyring import IntPoly, PolySeries
from .weights import WeightCache, family_weight, phi, phi_lambda

__all__ = [
    "ChordDiagram",
    "IntPoly",
    "PolySeries",
    "WeightCache",
    "canonical_key",
    "delete_chord",
    "enumerate_diagrams",
    "family_weight",
    "four_term_quadruples",
    "make_A",
    "make_B",
    "make_Dn",
    "phi",
    "phi_lambda",
    "reflect",
    "rotate",
    "surgery_split",
]

__version__ = "0.1.0"
