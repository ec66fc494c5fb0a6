"""skeinverse.core.ring.rewriting
=============================
Normal forms by oriented rewriting, ring equality, the relation tables of
each presentation and random sample elements for the property tests.

`normalize` is a plain worklist: pop a monomial, rewrite it with the first
applicable rule (or, when a `random.Random` is passed, with a random rule
at a random monomial) and push the replacement terms back. Monomials with
no applicable rule are collected into the result.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from ..util.random import rng_choice, rng_int
from .element import RingElement
from .presentation import B1, B1A, B2, Monomial, Presentation, get_presentation

__all__ = ["normalize", "equal", "Relation", "relations", "random_element", "ConfluenceReport", "sample_confluence"]

logger = logging.getLogger(__name__)


def normalize(x: RingElement, rnd: random.Random | None = None) -> RingElement:
    p = x.pres
    pending: dict[Monomial, int] = dict(x.terms)
    done: dict[Monomial, int] = {}
    steps = 0
    while pending:
        if rnd is None:
            mono = next(iter(pending))
        else:
            mono = rng_choice(rnd, sorted(pending))
        coeff = pending.pop(mono)
        if coeff == 0:
            continue
        if rnd is None:
            rule = p.first_rule(mono)
        else:
            options = p.applicable(mono)
            rule = rng_choice(rnd, options) if options else None
        if rule is None:            # irreducible
            done[mono] = done.get(mono, 0) + coeff
            continue
        steps += 1
        for new_mono, c in rule.rewrite(mono):
            pending[new_mono] = pending.get(new_mono, 0) + coeff * c
    logger.debug("normalize %s: %d rewrite steps, %d terms", p.name, steps, len(done))
    return RingElement.from_dict(p, done)


def equal(x: RingElement, y: RingElement) -> bool:
    """Equality in the presented ring: the difference normalizes to zero.

    Over B1A this is equality in the quotient that also imposes
    e'v_n = ev_n and a'v_n = av_n (see `presentation`).
    """
    return normalize(x - y).is_zero()


# --------------------------------------------------------------------- #
# Relation tables
# --------------------------------------------------------------------- #
@dataclass(frozen=True, slots=True)
class Relation:
    name: str
    group: str            # "R0".."R3" as listed, "derived", or "quotient" (imposed in B1A)
    n: int | None
    lhs: RingElement
    rhs: RingElement

    def residual(self) -> RingElement:
        return self.lhs - self.rhs

    def describe(self) -> str:
        tail = f" [n={self.n}]" if self.n is not None else ""
        return f"{self.name}{tail}: {self.lhs.render()} = {self.rhs.render()}"


def _b1_family(p: Presentation) -> list[Relation]:
    g = lambda name, k=1: RingElement.gen(p, name, k)  # noqa: E731
    one = RingElement.one(p)
    zero = RingElement.zero(p)
    return [
        Relation("e^2=1", "R0", None, g("e", 2), one),
        Relation("e'^2=1", "R0", None, g("e'", 2), one),
        Relation("b=ea", "R0", None, g("b"), g("e") * g("a")),
        Relation("b'=e'a'", "R0", None, g("b'"), g("e'") * g("a'")),
        Relation("(e'-e)a=0", "R2", None, (g("e'") - g("e")) * g("a"), zero),
        Relation("(e'-e)a'=0", "R2", None, (g("e'") - g("e")) * g("a'"), zero),
        Relation("aa=aa'", "R2", None, g("a", 2), g("a") * g("a'")),
        Relation("(ee'-1)aa=0", "R2", None, (g("e") * g("e'") - 1) * g("a", 2), zero),
    ]


def relations(presentation: "str | Presentation", n_max: int = 6) -> list[Relation]:
    """Every listed relation of the ring, v-indexed ones for 1 <= n <= n_max."""
    p = get_presentation(presentation)
    v = lambda n: RingElement.v(p, n)  # noqa: E731
    g = lambda name, k=1: RingElement.gen(p, name, k)  # noqa: E731
    zero = RingElement.zero(p)
    out: list[Relation] = []

    if p is B1:
        out += _b1_family(p)
        for n in range(1, n_max + 1):
            out.append(Relation("(1+e+ea)v_n+av_{n+1}=0", "R3", n,
                                (1 + g("e") + g("e") * g("a")) * v(n) + g("a") * v(n + 1), zero))
            out.append(Relation("(e'-1)(1+e)v_n=0", "derived", n, (g("e'") - 1) * (1 + g("e")) * v(n), zero))
            out.append(Relation("(1+e)(a'-a)v_n=0", "derived", n, (1 + g("e")) * (g("a'") - g("a")) * v(n), zero))
    elif p is B1A:
        out += _b1_family(p)
        A = g("A")
        for n in range(1, n_max + 1):
            out.append(Relation("A^2v_n+ev_n+aAv_{n+1}+bAv_n=0", "R3", n,
                                g("A", 2) * v(n) + g("e") * v(n) + g("a") * A * v(n + 1) + g("b") * A * v(n), zero))
            out.append(Relation("e'v_n=ev_n", "quotient", n, g("e'") * v(n), g("e") * v(n)))
            out.append(Relation("a'v_n=av_n", "quotient", n, g("a'") * v(n), g("a") * v(n)))
    elif p is B2:
        a, b, ap, bp = g("a"), g("b"), g("a'"), g("b'")
        out += [
            Relation("a'b=ab", "R2", None, ap * b, a * b),
            Relation("ab'=ab", "R2", None, a * bp, a * b),
            Relation("aa=aa'", "R2", None, a * a, a * ap),
            Relation("bb=bb'", "R2", None, b * b, b * bp),
            Relation("(1-a)a=(1-b)b", "R3", None, (1 - a) * a, (1 - b) * b),
        ]
        for n in range(1, n_max + 1):
            out.append(Relation("(1-a)v_n=bv_{n+1}", "R3", n, (1 - a) * v(n), b * v(n + 1)))
            out.append(Relation("(1-b)v_n=av_{n+1}", "derived", n, (1 - b) * v(n), a * v(n + 1)))
            if n >= 2:
                out.append(Relation("v_n=(a'+b')v_{n-1}", "R3", n, v(n), (ap + bp) * v(n - 1)))
            out.append(Relation("(a+b-1)(a+1)v_n=0", "derived", n, (a + b - 1) * (a + 1) * v(n), zero))
            out.append(Relation("(a+b-1)(b+1)v_n=0", "derived", n, (a + b - 1) * (b + 1) * v(n), zero))
    return out


# --------------------------------------------------------------------- #
# Random elements
# --------------------------------------------------------------------- #
def random_element(
    presentation: "str | Presentation",
    rnd: random.Random,
    *,
    max_terms: int = 3,
    max_degree: int = 6,
    max_n: int = 6,
) -> RingElement:
    p = get_presentation(presentation)
    free = [g for g in p.generators if g not in p.absent and g not in p.invertible]
    acc: dict[Monomial, int] = {}
    for _ in range(rng_int(rnd, 1, max_terms)):
        mono = [0] * p.width
        for _ in range(rng_int(rnd, 0, max_degree)):
            mono[p.index(rng_choice(rnd, free))] += 1
        for g in p.invertible:
            mono[p.index(g)] = rng_int(rnd, -3, 3)
        mono[-1] = rng_int(rnd, 0, max_n)
        coeff = rng_choice(rnd, (-3, -2, -1, 1, 2, 3))
        key = tuple(mono)
        acc[key] = acc.get(key, 0) + coeff
    return RingElement.from_dict(p, acc)


@dataclass(frozen=True, slots=True)
class ConfluenceReport:
    presentation: str
    samples: int
    orders: int
    divergent: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.divergent

    def as_dict(self) -> dict:
        return {
            "presentation": self.presentation,
            "samples": self.samples,
            "orders": self.orders,
            "divergent": list(self.divergent),
            "passed": self.passed,
        }


def sample_confluence(
    presentation: "str | Presentation",
    samples: int,
    orders: int,
    rnd: random.Random,
) -> ConfluenceReport:
    """Normalize random elements under random rule orders; every order must agree."""
    p = get_presentation(presentation)
    divergent = []
    for _ in range(samples):
        x = random_element(p, rnd)
        ref = normalize(x)
        for _ in range(orders):
            if normalize(x, rnd) != ref:
                divergent.append(x.render())
                break
    return ConfluenceReport(p.name, samples, orders, tuple(divergent))
