"""skeinverse.core.oracle.qpoly
============================
Q polynomial from its own skein recursion, without any presented ring.

    L+ + L- = x (L0 + Linf),   unknot = 1

Resolved at the first bad crossing of the canonical traversal; a diagram
with no bad crossing is an unlink of mu circles and is worth
(2/x - 1)^(mu - 1) (two kinks of one circle force the loop value).
"""

from __future__ import annotations

import logging

from ..diagram import LinkDiagram, Smoothing, canonical_code, classify, smooth, switch
from ..errors import CapExceededError
from ..ring import LaurentPoly

__all__ = ["Q_CAP", "q_oracle"]

logger = logging.getLogger(__name__)

# tighter than BRACKET_CAP: the switch branch keeps c
Q_CAP = 12


def _loop_value(mu: int) -> LaurentPoly:
    x = LaurentPoly.variable("x")
    return (2 * x ** -1 - 1) ** (mu - 1)


def _q(D: LinkDiagram, cache: dict) -> LaurentPoly:
    key = canonical_code(D)
    if key in cache:
        return cache[key]
    x = LaurentPoly.variable("x")
    report = classify(D)
    p = report.first_bad
    if p is None:
        value = _loop_value(D.component_count)
    else:
        value = (
            -_q(switch(D, p), cache)
            + x * _q(smooth(D, p, Smoothing.I), cache)
            + x * _q(smooth(D, p, Smoothing.II), cache)
        )
    cache[key] = value
    return value


def q_oracle(D: LinkDiagram, cache: dict | None = None, cap: int = Q_CAP) -> LaurentPoly:
    """Q polynomial in x; `cache` may be shared between calls."""
    if D.crossing_count > cap:
        raise CapExceededError(D.crossing_count, cap, "Q recursion")
    return _q(D, {} if cache is None else cache)
