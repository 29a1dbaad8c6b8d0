"""Dessins d'enfants as permutation triples: groups, character tables,
enumeration, Möbius inversion and named constructions."""

from .dessin import Dessin, Passport, coset_dessin, cover_genus, isomorphic, regular_cover
from .errors import CapExceeded, NotSubgroupError, NotTransitiveError, VerificationError
from .groups import BlockSystem, ConjClass, PermGroup
from .perm import CycleType, Permutation, compose, inverse, parse, render

__version__ = "0.1.0"

__all__ = [
    "BlockSystem", "CapExceeded", "ConjClass", "CycleType", "Dessin", "NotSubgroupError",
    "NotTransitiveError", "Passport", "PermGroup", "Permutation", "VerificationError",
    "compose", "coset_dessin", "cover_genus", "inverse", "isomorphic", "parse",
    "regular_cover", "render",
]
