"""Specular sets: tree sets of characteristic 2 closed under a letter involution."""

from .core import (
    EMPTY,
    FactorSet,
    HorizonError,
    SpecularError,
    SymmetricAlphabet,
    invert,
    reduce,
)

__all__ = [
    "EMPTY",
    "FactorSet",
    "HorizonError",
    "SpecularError",
    "SymmetricAlphabet",
    "invert",
    "reduce",
]

__version__ = "0.1.0"
