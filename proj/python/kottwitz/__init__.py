"""Exact Kottwitz-set, weight, character-ladder, tilting and averaging computations."""

from ._core import (
    averaging,
    bgmu,
    check_character,
    describe,
    tilting,
    tilting_table,
    weights,
)

__all__ = [
    "averaging",
    "bgmu",
    "check_character",
    "describe",
    "tilting",
    "tilting_table",
    "weights",
]

__version__ = "0.1.0"
