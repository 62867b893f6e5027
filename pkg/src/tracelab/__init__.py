"""Trace ideals, syzygies and Ulrich modules over numerical semigroup rings and Artinian algebras."""

from .artinian import (
    ArtinianAlgebra,
    FreeResolution,
    IdealSubspace,
    PresentedModule,
    hom_to_ring,
    minimal_resolution,
    monomial_quotient,
    trace,
)
from .errors import GuardError, ParseError
from .gfp import get_backend, set_backend
from .ideals import ModuleSum, ValueIdeal, canonical_ideal, enumerate_normalized_ideals, maximal_ideal
from .koszul import KoszulComplex
from .semigroup import NumericalSemigroup, enumerate_semigroups

__version__ = "0.1.0"

__all__ = [
    "ArtinianAlgebra",
    "FreeResolution",
    "GuardError",
    "IdealSubspace",
    "KoszulComplex",
    "ModuleSum",
    "NumericalSemigroup",
    "ParseError",
    "PresentedModule",
    "ValueIdeal",
    "canonical_ideal",
    "enumerate_normalized_ideals",
    "enumerate_semigroups",
    "get_backend",
    "hom_to_ring",
    "maximal_ideal",
    "minimal_resolution",
    "monomial_quotient",
    "set_backend",
    "trace",
]
