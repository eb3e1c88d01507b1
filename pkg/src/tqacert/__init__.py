"""Exact link-diagram invariants and two-fold quasi-alternating certificates."""

from .diagram import (
    ArcMarking, DiagramError, LinkDiagram, component_count, components,
    empty_unknot, is_alternating, is_connected, mirror, simplify, smooth,
    to_json, from_json, validate,
)
from .families import (
    INF, EvenContinuedFraction, cf_to_fraction, fraction_to_even_cf,
    lfamily, lnk, parse_spec, pretzel, two_bridge, twobridge_lift,
)
from .goeritz import determinant, goeritz, h1_double_cover
from .intlinalg import AbelianGroupPresentation, IntegerMatrix
from .laurent import LaurentPolynomial
from .tangles import Tangle, cyclic_closure, stack

__all__ = [
    "ArcMarking", "DiagramError", "LinkDiagram", "component_count",
    "components", "empty_unknot", "is_alternating", "is_connected", "mirror",
    "simplify", "smooth", "to_json", "from_json", "validate",
    "INF", "EvenContinuedFraction", "cf_to_fraction", "fraction_to_even_cf",
    "lfamily", "lnk", "parse_spec", "pretzel", "two_bridge", "twobridge_lift",
    "determinant", "goeritz", "h1_double_cover",
    "AbelianGroupPresentation", "IntegerMatrix", "LaurentPolynomial",
    "Tangle", "cyclic_closure", "stack",
]
