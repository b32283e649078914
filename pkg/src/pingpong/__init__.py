"""Ping-pong actions of free groups on the circle, their circular orders,
and the boundary-count test for isolation."""

from pingpong.freegroup import Letter, Word, ball, multiply, reduce
from pingpong.config import Configuration, InvalidConfiguration, canonical_form, validate
from pingpong.surface import Verdict, classify
from pingpong.realize import Realization, standard_realization

__all__ = [
    "Letter",
    "Word",
    "ball",
    "multiply",
    "reduce",
    "Configuration",
    "InvalidConfiguration",
    "canonical_form",
    "validate",
    "Verdict",
    "classify",
    "Realization",
    "standard_realization",
]
