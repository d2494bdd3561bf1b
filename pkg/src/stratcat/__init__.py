"""Stratified set theory workbench: a stratification checker and a finite model
of the categorical constructions available under stratified comprehension."""

from .formula import PairingConvention, ParseError, parse, render
from .hfset import HFSet, from_text, to_text
from .stratifier import check_comprehension, explain, is_stratified, solve, stratify

__version__ = "0.1.0"

__all__ = [
    "HFSet",
    "PairingConvention",
    "ParseError",
    "check_comprehension",
    "explain",
    "from_text",
    "is_stratified",
    "parse",
    "render",
    "solve",
    "stratify",
    "to_text",
]
