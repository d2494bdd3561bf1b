"""Finite carrier universes shared by the exhaustive tests.

``UPTO2`` is every HF set of rank at most 2 with at most two elements, and
``UPTO3`` every HF set of rank at most 3 with at most three elements.  Both
contain several distinct sets of the same cardinality, so the code under test
cannot get away with assuming carriers are ordinals.
"""

from stratcat.hfset import small_sets, von_neumann

UPTO2 = small_sets(2, 2)
UPTO3 = small_sets(3, 3)
ORDINALS3 = [von_neumann(n) for n in range(4)]
