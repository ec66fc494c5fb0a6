"""skeinverse.core.oracle.bracket
==============================
Kauffman bracket by brute-force state sum, and the Jones polynomial from it.

Independent of the ring machinery: every one of the 2^c states is smoothed
at once and its circles are counted, so the cost is exponential and a
crossing cap guards the entry point.

    <D> = sum over states  A^(#I - #II) * d^(loops - 1),   d = -A^2 - A^-2
    V(D) = (-A^3)^(-w) <D>, reported in q = A = t^(-1/4)
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass

import sympy as sp

from ..diagram import LinkDiagram, Smoothing, classify, state_loop_count
from ..errors import CapExceededError
from ..ring import LaurentPoly

__all__ = ["BRACKET_CAP", "BracketState", "bracket_state_sum", "jones_from_bracket"]

logger = logging.getLogger(__name__)

BRACKET_CAP = 16


@dataclass(frozen=True, slots=True)
class BracketState:
    smoothings: tuple[Smoothing, ...]
    loops: int

    @property
    def a_exponent(self) -> int:
        n_i = sum(1 for s in self.smoothings if s is Smoothing.I)
        return n_i - (len(self.smoothings) - n_i)


def _states(D: LinkDiagram):
    for state in itertools.product((Smoothing.I, Smoothing.II), repeat=D.crossing_count):
        yield BracketState(state, state_loop_count(D, state))


def bracket_state_sum(D: LinkDiagram, cap: int = BRACKET_CAP) -> LaurentPoly:
    """Bracket polynomial in A with the unknot normalized to 1."""
    if D.crossing_count > cap:
        raise CapExceededError(D.crossing_count, cap, "bracket state sum")
    tally: Counter[tuple[int, int]] = Counter()      # (A exponent, loops) -> states
    for st in _states(D):
        tally[(st.a_exponent, st.loops)] += 1
    A = sp.Symbol("A")
    delta = -A**2 - A**-2
    expr = sp.Add(*(n * A**e * delta ** (loops - 1) for (e, loops), n in tally.items()))
    logger.debug("bracket: %d states, %d classes", 2 ** D.crossing_count, len(tally))
    return LaurentPoly(expr, ("A",))


def jones_from_bracket(D: LinkDiagram, cap: int = BRACKET_CAP) -> LaurentPoly:
    w = classify(D).writhe
    A = sp.Symbol("A")
    normalized = LaurentPoly((-A**3) ** (-w), ("A",)) * bracket_state_sum(D, cap)
    return normalized.substitute({"A": LaurentPoly.variable("q")}, ("q",))
