"""skeinverse.core.ring.element
============================
**RingElement**: an integer combination of monomials of one presentation.

Arithmetic here is free (commutative polynomial arithmetic plus the single
v factor); nothing is reduced until `rewriting.normalize` runs. Elements are
immutable and hashable; equality is *syntactic* – use `rewriting.equal` for
equality in the ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from ..errors import PresentationMismatchError, RingError
from .presentation import Monomial, Presentation, get_presentation

__all__ = ["RingElement", "DISPLAY_ORDER"]

# canonical rendering order of generator symbols
DISPLAY_ORDER = ("e", "e'", "a", "a'", "b", "b'", "A")


def _mul_monomials(x: Monomial, y: Monomial) -> Monomial:
    if x[-1] and y[-1]:
        raise RingError(f"v_{x[-1]} * v_{y[-1]} is undefined; invariant values are v-linear")
    return tuple(a + b for a, b in zip(x, y))


@dataclass(frozen=True, slots=True)
class RingElement:
    presentation: str
    terms: tuple[tuple[Monomial, int], ...] = ()

    # ---------------------------------------------------------------- #
    # Constructors
    # ---------------------------------------------------------------- #
    @classmethod
    def from_dict(cls, presentation: "str | Presentation", terms: Mapping[Monomial, int]) -> "RingElement":
        p = get_presentation(presentation)
        clean = []
        for mono, coeff in terms.items():
            if coeff == 0:
                continue
            if len(mono) != p.width:
                raise RingError(f"monomial {mono} has wrong width for {p.name}")
            if mono[-1] < 0:
                raise RingError(f"negative unlink index in {mono}")
            clean.append((tuple(mono), int(coeff)))
        return cls(p.name, tuple(sorted(clean)))

    @classmethod
    def zero(cls, presentation: "str | Presentation") -> "RingElement":
        return cls(get_presentation(presentation).name)

    @classmethod
    def constant(cls, presentation: "str | Presentation", value: int) -> "RingElement":
        p = get_presentation(presentation)
        return cls.from_dict(p, {(0,) * p.width: value})

    @classmethod
    def one(cls, presentation: "str | Presentation") -> "RingElement":
        return cls.constant(presentation, 1)

    @classmethod
    def v(cls, presentation: "str | Presentation", n: int) -> "RingElement":
        """The unlink symbol v_n (n >= 1)."""
        if n < 1:
            raise RingError(f"v_n needs n >= 1, got {n}")
        p = get_presentation(presentation)
        return cls.from_dict(p, {(0,) * (p.width - 1) + (n,): 1})

    @classmethod
    def gen(cls, presentation: "str | Presentation", name: str, power: int = 1) -> "RingElement":
        """A generator power; b and b' in B1/B1A expand to ea and e'a'."""
        p = get_presentation(presentation)
        if name in p.absent:
            raise RingError(f"{name} is not a generator of {p.name}")
        factors = p.factors_of(name)
        if power < 0 and not all(f in p.invertible for f in factors):
            raise RingError(f"{name} is not invertible in {p.name}")
        mono = [0] * p.width
        for f in factors:
            mono[p.index(f)] += power
        return cls.from_dict(p, {tuple(mono): 1})

    # ---------------------------------------------------------------- #
    # Views
    # ---------------------------------------------------------------- #
    def as_mapping(self) -> dict[Monomial, int]:
        return dict(self.terms)

    @property
    def pres(self) -> Presentation:
        return get_presentation(self.presentation)

    def is_zero(self) -> bool:
        return not self.terms

    def max_n(self) -> int:
        return max((m[-1] for m, _ in self.terms), default=0)

    def v_linear(self) -> bool:
        """Every monomial carries exactly one v factor."""
        return all(m[-1] >= 1 for m, _ in self.terms)

    # ---------------------------------------------------------------- #
    # Arithmetic
    # ---------------------------------------------------------------- #
    def _same(self, other: "RingElement") -> None:
        if other.presentation != self.presentation:
            raise PresentationMismatchError(f"{self.presentation} vs {other.presentation}")

    def _lift(self, other: "RingElement | int") -> "RingElement":
        if isinstance(other, int):
            return RingElement.constant(self.presentation, other)
        self._same(other)
        return other

    def __add__(self, other: "RingElement | int") -> "RingElement":
        o = self._lift(other)
        acc = dict(self.terms)
        for m, c in o.terms:
            acc[m] = acc.get(m, 0) + c
        return RingElement.from_dict(self.presentation, acc)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.presentation, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "RingElement | int") -> "RingElement":
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> "RingElement":
        return self._lift(other) - self

    def __mul__(self, other: "RingElement | int") -> "RingElement":
        o = self._lift(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in o.terms:
                m = _mul_monomials(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return RingElement.from_dict(self.presentation, acc)

    __rmul__ = __mul__

    # ---------------------------------------------------------------- #
    # Rendering
    # ---------------------------------------------------------------- #
    def _display(self, mono: Monomial) -> list[tuple[str, int]]:
        p = self.pres
        exps = {g: mono[p.index(g)] for g in p.generators}
        return [(g, exps[g]) for g in DISPLAY_ORDER if exps.get(g)]

    def _sort_key(self, item: tuple[Monomial, int]) -> tuple:
        mono = item[0]
        shown = self._display(mono)
        degree = sum(abs(e) for _, e in shown)
        vector = tuple(-dict(shown).get(g, 0) for g in DISPLAY_ORDER)
        return (degree, vector, -mono[-1])

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in sorted(self.terms, key=self._sort_key):
            factors = [g if e == 1 else f"{g}^{e}" for g, e in self._display(mono)]
            if mono[-1]:
                factors.append(f"v_{mono[-1]}")
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            sign = "-" if coeff < 0 else "+"
            if not pieces:
                pieces.append(f"- {body}" if sign == "-" else body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        p = self.pres
        return {
            "presentation": self.presentation,
            "terms": [
                {
                    "coeff": coeff,
                    "exponents": {g: mono[p.index(g)] for g in p.generators if mono[p.index(g)]},
                    "n": mono[-1],
                }
                for mono, coeff in sorted(self.terms, key=self._sort_key)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RingElement":
        p = get_presentation(data["presentation"])
        acc: dict[Monomial, int] = {}
        for term in data["terms"]:
            mono = [0] * p.width
            for g, e in term["exponents"].items():
                mono[p.index(g)] = int(e)
            mono[-1] = int(term["n"])
            key = tuple(mono)
            acc[key] = acc.get(key, 0) + int(term["coeff"])
        return cls.from_dict(p, acc)

    @classmethod
    def sum(cls, presentation: "str | Presentation", items: Iterable["RingElement"]) -> "RingElement":
        total = cls.zero(presentation)
        for x in items:
            total = total + x
        return total
