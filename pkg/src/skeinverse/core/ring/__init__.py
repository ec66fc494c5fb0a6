"""Presented rings, their normal forms, and specializations into Laurent polynomials."""

from .element import DISPLAY_ORDER, RingElement
from .homomorphism import (
    BUILTIN_HOMS,
    Homomorphism,
    HomReport,
    Residual,
    check_hom,
    from_spec,
    get_hom,
    load_hom,
    specialize,
)
from .laurent import LaurentPoly
from .presentation import B1, B1A, B2, PRESENTATIONS, Monomial, Presentation, Rule, get_presentation
from .rewriting import ConfluenceReport, Relation, equal, normalize, random_element, relations, sample_confluence

__all__ = [
    "DISPLAY_ORDER",
    "RingElement",
    "BUILTIN_HOMS",
    "Homomorphism",
    "HomReport",
    "Residual",
    "check_hom",
    "from_spec",
    "get_hom",
    "load_hom",
    "specialize",
    "LaurentPoly",
    "B1",
    "B1A",
    "B2",
    "PRESENTATIONS",
    "Monomial",
    "Presentation",
    "Rule",
    "get_presentation",
    "Relation",
    "equal",
    "normalize",
    "random_element",
    "relations",
    "ConfluenceReport",
    "sample_confluence",
]
