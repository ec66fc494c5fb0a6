"""skeinverse.core.ring.homomorphism
================================
Specialization homomorphisms from a presented ring into Laurent polynomials.

A homomorphism fixes the image of every generator it is asked about and a
geometric v-sequence  v_n -> v_first * v_ratio^(n-1)  (or a closed form in
`n`). `check_hom` evaluates the image of every relation up to an unlink
bound; for B2 with the writhe-normalizing flag it swaps the B2 R3 group for
the three writhe-weighted equations.

Built-ins
---------
jones            B2 (writhe form): a,a' -> q, b,b' -> q^-1, A -> -q^-3
bracket          same with the bracket variable named A
q                B1: e,e' -> 1, a,a' -> -x, v_n -> (2/x - 1)^(n-1)
kauffman-remark  B1A: e,e' -> -1, a,a' -> x, A -> x, v_n -> x^(-2(n-1))
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import sympy as sp

from ..errors import MissingImageError, RingError
from .element import RingElement
from .laurent import LaurentPoly
from .presentation import get_presentation
from .rewriting import relations

__all__ = [
    "Homomorphism",
    "HomReport",
    "Residual",
    "specialize",
    "check_hom",
    "BUILTIN_HOMS",
    "get_hom",
    "from_spec",
    "load_hom",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Homomorphism:
    name: str
    variables: tuple[str, ...]
    images: Mapping[str, LaurentPoly]
    v_first: LaurentPoly | None = None
    v_ratio: LaurentPoly | None = None
    v_closed: sp.Expr | None = None          # expression in the symbol `n`
    presentation: str = "B2"
    b2_prime: bool = False

    def image(self, generator: str) -> LaurentPoly:
        try:
            return self.images[generator]
        except KeyError:
            raise MissingImageError(f"homomorphism {self.name!r} has no image for {generator!r}") from None

    def v_image(self, n: int) -> LaurentPoly:
        if n < 1:
            raise RingError(f"v_n needs n >= 1, got {n}")
        if self.v_closed is not None:
            return LaurentPoly(self.v_closed.subs(sp.Symbol("n"), n), self.variables)
        if self.v_first is None or self.v_ratio is None:
            raise MissingImageError(f"homomorphism {self.name!r} defines no v_n images")
        return self.v_first * self.v_ratio ** (n - 1)

    def one(self) -> LaurentPoly:
        return LaurentPoly.constant(1, self.variables)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "presentation": self.presentation,
            "b2_prime": self.b2_prime,
            "variables": list(self.variables),
            "images": {g: p.render() for g, p in sorted(self.images.items())},
            "v_1": self.v_image(1).render(),
            "v_2": self.v_image(2).render(),
        }


# --------------------------------------------------------------------- #
# Specialization
# --------------------------------------------------------------------- #
def specialize(x: RingElement, h: Homomorphism) -> LaurentPoly:
    p = x.pres
    total = LaurentPoly.constant(0, h.variables)
    for mono, coeff in x.terms:
        value = LaurentPoly.constant(coeff, h.variables)
        for g, e in zip(p.generators, mono[:-1]):
            if e:
                value = value * h.image(g) ** e
        if mono[-1]:
            value = value * h.v_image(mono[-1])
        total = total + value
    return total


# --------------------------------------------------------------------- #
# Relation check
# --------------------------------------------------------------------- #
@dataclass(frozen=True, slots=True)
class Residual:
    relation: str
    n: int | None
    value: LaurentPoly

    @property
    def ok(self) -> bool:
        return self.value.is_zero()

    def as_dict(self) -> dict:
        return {"relation": self.relation, "n": self.n, "residual": self.value.render(), "ok": self.ok}


@dataclass(slots=True)
class HomReport:
    hom: str
    presentation: str
    n_max: int
    residuals: list[Residual] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.residuals)

    @property
    def failures(self) -> list[Residual]:
        return [r for r in self.residuals if not r.ok]

    def as_dict(self) -> dict:
        return {
            "hom": self.hom,
            "presentation": self.presentation,
            "n_max": self.n_max,
            "passed": self.passed,
            "residuals": [r.as_dict() for r in self.residuals],
        }


def _writhe_equations(h: Homomorphism, n_max: int) -> list[Residual]:
    """The three writhe-weighted B2 equations with g = A^w."""
    a, b, ap, bp, A = (h.image(g) for g in ("a", "b", "a'", "b'", "A"))
    v = h.v_image
    out = []
    for n in range(1, n_max + 1):
        out.append(Residual("A(av_{n+1}+bv_n)=v_n", n, A * (a * v(n + 1) + b * v(n)) - v(n)))
        out.append(Residual("A^-1(bv_{n+1}+av_n)=v_n", n, A ** -1 * (b * v(n + 1) + a * v(n)) - v(n)))
        if n >= 2:
            out.append(Residual(
                "a'(av_{n-1}+bv_n)+b'(a'v_n+b'v_{n-1})=v_n", n,
                ap * (a * v(n - 1) + b * v(n)) + bp * (ap * v(n) + bp * v(n - 1)) - v(n),
            ))
    return out


def check_hom(
    h: Homomorphism,
    presentation: str | None = None,
    n_max: int = 10,
    b2_prime: bool | None = None,
) -> HomReport:
    p = get_presentation(presentation or h.presentation)
    prime = h.b2_prime if b2_prime is None else b2_prime
    if n_max < 2:
        raise RingError("check_hom needs n_max >= 2")
    report = HomReport(h.name, p.name + ("'" if prime else ""), n_max)
    for rel in relations(p, n_max):
        if prime and rel.group in ("R3", "derived"):
            continue
        value = specialize(rel.lhs, h) - specialize(rel.rhs, h)
        report.residuals.append(Residual(rel.name, rel.n, value))
    if prime:
        report.residuals.extend(_writhe_equations(h, n_max))
    logger.debug("check_hom %s on %s: %d relations, %d failing",
                 h.name, report.presentation, len(report.residuals), len(report.failures))
    return report


# --------------------------------------------------------------------- #
# Built-ins and JSON definitions
# --------------------------------------------------------------------- #
def _parse(text: str | int, variables: tuple[str, ...]) -> LaurentPoly:
    local = {v: sp.Symbol(v) for v in variables}
    try:
        expr = sp.sympify(text, locals=local)
    except (sp.SympifyError, SyntaxError, TypeError) as exc:
        raise RingError(f"cannot parse image {text!r}: {exc}") from None
    return LaurentPoly(expr, variables)


def from_spec(data: Mapping) -> Homomorphism:
    """Build a homomorphism from a JSON-style mapping.

    Keys: name, variables, images {generator: expression}, and either
    v_first + v_ratio or v_closed (an expression in n). Optional:
    presentation (default B2) and b2_prime.
    """
    try:
        variables = tuple(data["variables"])
        images = {g: _parse(e, variables) for g, e in data["images"].items()}
    except KeyError as exc:
        raise RingError(f"homomorphism definition lacks {exc}") from None
    v_closed = None
    v_first = v_ratio = None
    if "v_closed" in data:
        local = {v: sp.Symbol(v) for v in variables} | {"n": sp.Symbol("n")}
        try:
            v_closed = sp.sympify(data["v_closed"], locals=local)
        except (sp.SympifyError, SyntaxError, TypeError) as exc:
            raise RingError(f"cannot parse v_closed {data['v_closed']!r}: {exc}") from None
    else:
        v_first = _parse(data.get("v_first", 1), variables)
        v_ratio = _parse(data.get("v_ratio", 1), variables)
    presentation = get_presentation(data.get("presentation", "B2")).name
    return Homomorphism(
        name=str(data.get("name", "custom")),
        variables=variables,
        images=images,
        v_first=v_first,
        v_ratio=v_ratio,
        v_closed=v_closed,
        presentation=presentation,
        b2_prime=bool(data.get("b2_prime", False)),
    )


_BUILTIN_SPECS: dict[str, dict] = {
    "jones": {
        "name": "jones", "variables": ["q"], "presentation": "B2", "b2_prime": True,
        "images": {"a": "q", "a'": "q", "b": "1/q", "b'": "1/q", "A": "-q**-3"},
        "v_first": 1, "v_ratio": "-q**2 - q**-2",
    },
    "bracket": {
        "name": "bracket", "variables": ["A"], "presentation": "B2", "b2_prime": True,
        "images": {"a": "A", "a'": "A", "b": "1/A", "b'": "1/A", "A": "-A**-3"},
        "v_first": 1, "v_ratio": "-A**2 - A**-2",
    },
    "q": {
        "name": "q", "variables": ["x"], "presentation": "B1",
        "images": {"e": 1, "e'": 1, "a": "-x", "a'": "-x", "b": "-x", "b'": "-x"},
        "v_first": 1, "v_ratio": "2/x - 1",
    },
    "kauffman-remark": {
        "name": "kauffman-remark", "variables": ["x"], "presentation": "B1A",
        "images": {"e": -1, "e'": -1, "a": "x", "a'": "x", "b": "-x", "b'": "-x", "A": "x"},
        "v_closed": "x**(-2*(n-1))",
    },
}

BUILTIN_HOMS: dict[str, Homomorphism] = {name: from_spec(spec) for name, spec in _BUILTIN_SPECS.items()}


def get_hom(name: str) -> Homomorphism:
    try:
        return BUILTIN_HOMS[name]
    except KeyError:
        raise RingError(f"unknown homomorphism {name!r}; choose from {sorted(BUILTIN_HOMS)}") from None


def load_hom(ref: str) -> Homomorphism:
    """A built-in name, or the path of a JSON definition file."""
    if ref in BUILTIN_HOMS:
        return BUILTIN_HOMS[ref]
    path = Path(ref)
    if not path.is_file():
        raise RingError(f"{ref!r} is neither a built-in homomorphism nor a readable file")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise RingError(f"{path}: invalid JSON ({exc})") from None
    return from_spec(data)
