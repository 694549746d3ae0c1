"""Combinatorics of tau-tilting theory for Nakayama algebras.

The package computes support tau-tilting pairs, two-term simple-minded
collections via two-coloured arc patterns, the brick-labelled lattice of
torsion classes, picture group presentations, and the cube complex of the
tau-cluster morphism category.
"""

from .serial import AlgebraSpec, Indec, SignedIndec, SpecError, validate_spec

__all__ = ["AlgebraSpec", "Indec", "SignedIndec", "SpecError", "validate_spec"]
__version__ = "0.1.0"
