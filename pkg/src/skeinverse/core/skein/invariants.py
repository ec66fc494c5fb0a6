"""skeinverse.core.skein.invariants
===============================
Skein-recursive link invariants with values in the presented rings.

Type 1 (B1, and its writhe form over B1A)
    Resolve at the first bad crossing of the traversal:
        f(D) = -e f(D_switch) - a f(D_I) - ea f(D_II)           self-crossing
        f(D) = -e' f(D_switch) - a' f(D_I) - e'a' f(D_II)       between components
    A diagram with no bad crossing is worth v_mu (B1) or A^w v_mu (B1A);
    the writhe form reports F = A^-w f.

Type 2 (B2, and its writhe form in a Laurent target)
    Resolve at any crossing, no switching:
        f(D) = a f(D_I) + b f(D_II)       (a', b' between components)
    The writhe form evaluates the same recursion straight in the target of a
    homomorphism and reports F = h(A)^w f. With the Jones homomorphism this
    is the Jones polynomial.

The switched diagram keeps the caller's traversal; smoothed diagrams are
walked canonically.
"""

from __future__ import annotations

# --------------------------------------------------------------------- #
# Std-lib imports
# --------------------------------------------------------------------- #
import logging
import random
from dataclasses import dataclass
from typing import Hashable, Union

# --------------------------------------------------------------------- #
# Internal imports
# --------------------------------------------------------------------- #
from ..diagram import (
    LinkDiagram,
    Locality,
    Smoothing,
    TraversalContext,
    classify,
    smooth,
    switch,
)
from ..errors import HomomorphismError, InvalidCrossingError
from ..ring import (
    LaurentPoly,
    RingElement,
    check_hom,
    get_hom,
    normalize,
    specialize,
)
from ..ring.homomorphism import Homomorphism
from ..util.random import rng_int
from .memo import SkeinMemo

__all__ = [
    "InvariantValue",
    "SHARED_MEMO",
    "invariant_b1",
    "invariant_b1_writhe",
    "invariant_b2",
    "invariant_b2_writhe",
    "jones",
    "q_polynomial",
    "INVARIANTS",
    "compute_invariant",
]

logger = logging.getLogger(__name__)

SHARED_MEMO = SkeinMemo()

Value = Union[RingElement, LaurentPoly]


@dataclass(frozen=True, slots=True)
class InvariantValue:
    invariant: str
    value: Value
    crossings: int
    components: int
    bad: int
    writhe: int

    def render(self) -> str:
        if self.invariant == "jones" and isinstance(self.value, LaurentPoly):
            return self.value.render_t("q")
        return self.value.render()

    def as_dict(self) -> dict:
        data = {
            "invariant": self.invariant,
            "crossings": self.crossings,
            "components": self.components,
            "bad": self.bad,
            "writhe": self.writhe,
            "text": self.render(),
        }
        if isinstance(self.value, RingElement):
            data["value"] = self.value.to_json()
        else:
            data["value"] = self.value.as_dict()
        return data


def _gate(memo: SkeinMemo | None, D: LinkDiagram) -> SkeinMemo | None:
    """Apply the crossing threshold to the input diagram only.

    Once an input qualifies, every subdiagram its recursion reaches is cached,
    however small.
    """
    if memo is None or not memo.wants(D.crossing_count):
        return None
    return memo


def _memoized(memo: SkeinMemo | None, tag: Hashable, D: LinkDiagram, compute):
    if memo is None:
        return compute()
    return memo.lookup_diagram(tag, D, compute)


# --------------------------------------------------------------------- #
# Type 1
# --------------------------------------------------------------------- #
def _b1(D: LinkDiagram, ctx: TraversalContext | None, pres: str, memo: SkeinMemo | None) -> RingElement:
    def compute() -> RingElement:
        report = classify(D, ctx)
        x = report.first_bad
        if x is None:
            base = RingElement.v(pres, D.component_count)
            if pres == "B1A":
                base = RingElement.gen(pres, "A", report.writhe) * base
            return base
        inter = report.records[x].locality is Locality.INTER
        e = RingElement.gen(pres, "e'" if inter else "e")
        a = RingElement.gen(pres, "a'" if inter else "a")
        logger.debug("%s resolve c=%d d=%d at %d (%s)", pres, D.crossing_count,
                     report.bad_count, x, "inter" if inter else "self")
        # d drops by one on the switch branch, c on the smoothings
        f_sw = _b1(switch(D, x), ctx, pres, memo)
        f_i = _b1(smooth(D, x, Smoothing.I), None, pres, memo)
        f_ii = _b1(smooth(D, x, Smoothing.II), None, pres, memo)
        return normalize(-(e * f_sw) - a * f_i - e * a * f_ii)

    if ctx is not None:
        return compute()
    return _memoized(memo, pres, D, compute)


def invariant_b1(
    D: LinkDiagram,
    ctx: TraversalContext | None = None,
    memo: SkeinMemo | None = SHARED_MEMO,
) -> InvariantValue:
    """Type 1 invariant in B1, in normal form."""
    report = classify(D, ctx)
    value = _b1(D, ctx, "B1", _gate(memo, D))
    return InvariantValue("b1", value, D.crossing_count, D.component_count, report.bad_count, report.writhe)


def invariant_b1_writhe(
    D: LinkDiagram,
    ctx: TraversalContext | None = None,
    memo: SkeinMemo | None = SHARED_MEMO,
) -> tuple[InvariantValue, InvariantValue]:
    """(f, F) over B1A: f is the raw writhe-weighted value, F = A^-w f."""
    report = classify(D, ctx)
    f = _b1(D, ctx, "B1A", _gate(memo, D))
    F = normalize(RingElement.gen("B1A", "A", -report.writhe) * f)
    common = (D.crossing_count, D.component_count, report.bad_count, report.writhe)
    return InvariantValue("b1w-f", f, *common), InvariantValue("b1w", F, *common)


# --------------------------------------------------------------------- #
# Type 2
# --------------------------------------------------------------------- #
def _site(D: LinkDiagram, rnd: random.Random | None) -> int:
    return 0 if rnd is None else rng_int(rnd, 0, D.crossing_count - 1)


def _b2(
    D: LinkDiagram,
    rnd: random.Random | None,
    memo: SkeinMemo | None,
    first: int | None = None,
) -> RingElement:
    def compute() -> RingElement:
        if not D.crossings:
            return normalize(RingElement.v("B2", D.component_count))
        x = _site(D, rnd) if first is None else first
        inter = not D.is_self_crossing(x)
        a = RingElement.gen("B2", "a'" if inter else "a")
        b = RingElement.gen("B2", "b'" if inter else "b")
        f_i = _b2(smooth(D, x, Smoothing.I), rnd, memo)
        f_ii = _b2(smooth(D, x, Smoothing.II), rnd, memo)
        return normalize(a * f_i + b * f_ii)

    if rnd is not None or first is not None:
        return compute()
    return _memoized(memo, "B2", D, compute)


def invariant_b2(
    D: LinkDiagram,
    rnd: random.Random | None = None,
    memo: SkeinMemo | None = SHARED_MEMO,
    *,
    first: int | None = None,
) -> InvariantValue:
    """Type 2 invariant in B2.

    `first` forces the top-level resolution site; `rnd` picks the sites below
    it (and the top one too when `first` is unset) at random.
    """
    if first is not None and not 0 <= first < D.crossing_count:
        raise InvalidCrossingError(f"no crossing {first} in a {D.crossing_count}-crossing diagram")
    value = _b2(D, rnd, _gate(memo, D), first)
    report = classify(D)
    return InvariantValue("b2", value, D.crossing_count, D.component_count, report.bad_count, report.writhe)


def _b2_target(D: LinkDiagram, h: Homomorphism, memo: SkeinMemo | None) -> LaurentPoly:
    def compute() -> LaurentPoly:
        if not D.crossings:
            return h.v_image(D.component_count)
        inter = not D.is_self_crossing(0)
        a = h.image("a'" if inter else "a")
        b = h.image("b'" if inter else "b")
        return a * _b2_target(smooth(D, 0, Smoothing.I), h, memo) + b * _b2_target(smooth(D, 0, Smoothing.II), h, memo)

    return _memoized(memo, ("B2'",) + _hom_key(h), D, compute)


# largest n each homomorphism has been checked to
_VERIFIED: dict[tuple, int] = {}


def _hom_key(h: Homomorphism) -> tuple:
    images = tuple(sorted((g, p.render()) for g, p in h.images.items()))
    return (h.name, images, h.v_image(1).render(), h.v_image(2).render())


def _require_writhe_hom(h: Homomorphism, n_max: int) -> None:
    if h.presentation != "B2" or not h.b2_prime:
        raise HomomorphismError(f"{h.name!r} is not a writhe-form B2 homomorphism")
    key = _hom_key(h)
    if _VERIFIED.get(key, 0) >= n_max:
        return
    report = check_hom(h, "B2", n_max, b2_prime=True)
    if not report.passed:
        bad = ", ".join(f"{r.relation}[n={r.n}]" for r in report.failures[:3])
        raise HomomorphismError(f"{h.name!r} violates the writhe-form B2 relations: {bad}")
    _VERIFIED[key] = n_max


def invariant_b2_writhe(
    D: LinkDiagram,
    h: Homomorphism | None = None,
    memo: SkeinMemo | None = SHARED_MEMO,
) -> InvariantValue:
    """F = h(A)^w * f evaluated in the target of `h` (Jones by default)."""
    h = h or get_hom("jones")
    _require_writhe_hom(h, max(2, D.crossing_count + D.component_count + 1))
    report = classify(D)
    f = _b2_target(D, h, _gate(memo, D))
    value = h.image("A") ** report.writhe * f
    return InvariantValue("b2w", value, D.crossing_count, D.component_count, report.bad_count, report.writhe)


def jones(D: LinkDiagram, memo: SkeinMemo | None = SHARED_MEMO) -> InvariantValue:
    """Jones polynomial as a Laurent polynomial in q = t^(-1/4)."""
    v = invariant_b2_writhe(D, get_hom("jones"), memo)
    return InvariantValue("jones", v.value, v.crossings, v.components, v.bad, v.writhe)


def q_polynomial(D: LinkDiagram, memo: SkeinMemo | None = SHARED_MEMO) -> InvariantValue:
    """Q polynomial in x, as the image of the B1 invariant."""
    v = invariant_b1(D, memo=memo)
    return InvariantValue("q", specialize(v.value, get_hom("q")), v.crossings, v.components, v.bad, v.writhe)


# --------------------------------------------------------------------- #
# Registry
# --------------------------------------------------------------------- #
INVARIANTS = ("b1", "b1w", "b2", "b2w", "jones", "q")


def compute_invariant(
    name: str,
    D: LinkDiagram,
    *,
    hom: Homomorphism | None = None,
    memo: SkeinMemo | None = SHARED_MEMO,
) -> InvariantValue:
    if name == "b1":
        return invariant_b1(D, memo=memo)
    if name == "b1w":
        return invariant_b1_writhe(D, memo=memo)[1]
    if name == "b2":
        return invariant_b2(D, memo=memo)
    if name == "b2w":
        return invariant_b2_writhe(D, hom, memo)
    if name == "jones":
        return jones(D, memo)
    if name == "q":
        return q_polynomial(D, memo)
    raise ValueError(f"unknown invariant {name!r}; choose from {INVARIANTS}")
