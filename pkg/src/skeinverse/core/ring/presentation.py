"""skeinverse.core.ring.presentation
=================================
The three presented rings and their oriented rewrite rules.

A monomial is a plain tuple of exponents whose last entry is the unlink
index `n` (0 = no v factor):

*  B1 / B1A : (i, j, k, l, m, n) for e, e', a, a', A, v_n  (m is 0 in B1)
*  B2       : (ka, kb, ka', kb', n) for a, b, a', b', v_n

b and b' never appear in B1/B1A monomials; they are eliminated on
construction via b = ea, b' = e'a'.

Rule lists (applied to one monomial at a time, first match in declared
order; every rule strictly lowers the measure (n, weight, degree)):

B1
    (1)  e^2 -> 1, e'^2 -> 1
    (3)  e'a -> ea, e'a' -> ea'
    (4)  aa' -> aa
    (5)  a v_n -> -(1 + e + ea) v_{n-1}                    n >= 2
    (6)  e e' v -> (1 + e - e') v                          derived
    (7)  e a' v -> (a + ea - a') v                         derived
B1A
    (1) (3) (4) as B1, then on v-monomials
    (6') e' v -> e v, (7') a' v -> a v                      quotient
    (5') a v_n -> -(A + e A^-1 + ea) v_{n-1}                n >= 2

    The B1A rings built here are a quotient of the ring the writhe-form
    relations present. (6') and (7') do not follow from those relations:
    the two B1 identities (6), (7) hold in B1A only up to (A^4 - 1)-torsion,
    and without (6'), (7') the critical pair a a' v_n (n >= 2) stays
    unresolved. Equality over B1A is therefore equality in the quotient by
    e'v_n = ev_n and a'v_n = av_n; a map that separates e'v_1 from ev_1
    (A -> i, e -> 1, e' -> -1, a = a' = 0) does not factor through it.
B2
    (1)  a'b -> ab, ab' -> ab
    (2)  aa' -> aa, bb' -> bb
    (3)  v_n -> (a' + b') v_{n-1}                          n >= 2
    (4)  a' v -> a v, b' v -> b v                          derived
    (5)  a^2 v -> (1 - b - ab) v, ab v -> (1 - a - b^2) v  derived
    (6)  a^2 -> a - b + b^2                                v-free only

Rules (6), (7) of B1 and (4), (5) of B2 complete the lists to confluent
systems; each is an identity of the presented ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import RingError

__all__ = [
    "Monomial",
    "Rule",
    "Presentation",
    "B1",
    "B1A",
    "B2",
    "PRESENTATIONS",
    "get_presentation",
]

Monomial = tuple[int, ...]
Rewrite = list[tuple[Monomial, int]]


@dataclass(frozen=True, slots=True)
class Rule:
    name: str
    relation: str
    matches: Callable[[Monomial], bool]
    rewrite: Callable[[Monomial], Rewrite]
    derived: bool = False        # a consequence of the listed relations
    quotient: bool = False       # imposed on top of them (B1A only)


@dataclass(frozen=True, slots=True)
class Presentation:
    name: str
    generators: tuple[str, ...]               # exponent slots, `n` excluded
    rules: tuple[Rule, ...]
    invertible: frozenset[str] = frozenset()  # generators allowed negative exponents
    eliminated: tuple[tuple[str, tuple[str, ...]], ...] = ()   # b -> (e, a) etc.
    absent: frozenset[str] = frozenset()     # layout slots that stay 0 (A in B1)

    @property
    def width(self) -> int:
        return len(self.generators) + 1

    def index(self, generator: str) -> int:
        try:
            return self.generators.index(generator)
        except ValueError:
            raise RingError(f"{self.name} has no generator {generator!r}") from None

    def factors_of(self, generator: str) -> tuple[str, ...]:
        """Generators a symbol stands for (b -> e, a in B1); itself otherwise."""
        for name, parts in self.eliminated:
            if name == generator:
                return parts
        self.index(generator)
        return (generator,)

    def first_rule(self, m: Monomial) -> Rule | None:
        for rule in self.rules:
            if rule.matches(m):
                return rule
        return None

    def applicable(self, m: Monomial) -> list[Rule]:
        return [rule for rule in self.rules if rule.matches(m)]

    def __str__(self) -> str:
        return self.name


def _bump(m: Monomial, deltas: dict[int, int]) -> Monomial:
    out = list(m)
    for idx, d in deltas.items():
        out[idx] += d
    return tuple(out)


# --------------------------------------------------------------------- #
# B1 / B1A layout
# --------------------------------------------------------------------- #
E, EP, A_, AP, M, N1 = range(6)


def _b1_common() -> list[Rule]:
    return [
        Rule("1a", "e^2=1", lambda m: m[E] >= 2, lambda m: [(_bump(m, {E: -2}), 1)]),
        Rule("1b", "e'^2=1", lambda m: m[EP] >= 2, lambda m: [(_bump(m, {EP: -2}), 1)]),
        Rule("3a", "(e'-e)a=0", lambda m: m[EP] >= 1 and m[A_] >= 1, lambda m: [(_bump(m, {EP: -1, E: 1}), 1)]),
        Rule("3b", "(e'-e)a'=0", lambda m: m[EP] >= 1 and m[AP] >= 1, lambda m: [(_bump(m, {EP: -1, E: 1}), 1)]),
        Rule("4", "aa=aa'", lambda m: m[A_] >= 1 and m[AP] >= 1, lambda m: [(_bump(m, {A_: 1, AP: -1}), 1)]),
    ]


_B1_RULES = _b1_common() + [
    Rule(
        "5", "(1+e+ea)v_n+av_{n+1}=0",
        lambda m: m[A_] >= 1 and m[N1] >= 2,
        lambda m: [
            (_bump(m, {A_: -1, N1: -1}), -1),
            (_bump(m, {A_: -1, E: 1, N1: -1}), -1),
            (_bump(m, {E: 1, N1: -1}), -1),
        ],
    ),
    Rule(
        "6", "(e'-1)(1+e)v_n=0",
        lambda m: m[N1] >= 1 and m[E] >= 1 and m[EP] >= 1,
        lambda m: [
            (_bump(m, {E: -1, EP: -1}), 1),
            (_bump(m, {EP: -1}), 1),
            (_bump(m, {E: -1}), -1),
        ],
        derived=True,
    ),
    Rule(
        "7", "(1+e)(a'-a)v_n=0",
        lambda m: m[N1] >= 1 and m[E] >= 1 and m[AP] >= 1,
        lambda m: [
            (_bump(m, {E: -1, AP: -1, A_: 1}), 1),
            (_bump(m, {AP: -1, A_: 1}), 1),
            (_bump(m, {E: -1}), -1),
        ],
        derived=True,
    ),
]

_B1A_RULES = _b1_common() + [
    Rule("6'", "e'v_n=ev_n (quotient)", lambda m: m[N1] >= 1 and m[EP] >= 1,
         lambda m: [(_bump(m, {EP: -1, E: 1}), 1)], quotient=True),
    Rule("7'", "a'v_n=av_n (quotient)", lambda m: m[N1] >= 1 and m[AP] >= 1,
         lambda m: [(_bump(m, {AP: -1, A_: 1}), 1)], quotient=True),
    Rule(
        "5'", "A^2v_n+ev_n+aAv_{n+1}+bAv_n=0",
        lambda m: m[A_] >= 1 and m[N1] >= 2,
        lambda m: [
            (_bump(m, {A_: -1, M: 1, N1: -1}), -1),
            (_bump(m, {A_: -1, E: 1, M: -1, N1: -1}), -1),
            (_bump(m, {E: 1, N1: -1}), -1),
        ],
    ),
]


# --------------------------------------------------------------------- #
# B2 layout
# --------------------------------------------------------------------- #
KA, KB, KAP, KBP, N2 = range(5)

_B2_RULES = [
    Rule("1a", "a'b=ab", lambda m: m[KAP] >= 1 and m[KB] >= 1, lambda m: [(_bump(m, {KAP: -1, KA: 1}), 1)]),
    Rule("1b", "ab'=ab", lambda m: m[KBP] >= 1 and m[KA] >= 1, lambda m: [(_bump(m, {KBP: -1, KB: 1}), 1)]),
    Rule("2a", "aa=aa'", lambda m: m[KA] >= 1 and m[KAP] >= 1, lambda m: [(_bump(m, {KAP: -1, KA: 1}), 1)]),
    Rule("2b", "bb=bb'", lambda m: m[KB] >= 1 and m[KBP] >= 1, lambda m: [(_bump(m, {KBP: -1, KB: 1}), 1)]),
    Rule(
        "3", "v_n=(a'+b')v_{n-1}",
        lambda m: m[N2] >= 2,
        lambda m: [(_bump(m, {KAP: 1, N2: -1}), 1), (_bump(m, {KBP: 1, N2: -1}), 1)],
    ),
    Rule("4a", "a'v_n=av_n", lambda m: m[N2] >= 1 and m[KAP] >= 1,
         lambda m: [(_bump(m, {KAP: -1, KA: 1}), 1)], derived=True),
    Rule("4b", "b'v_n=bv_n", lambda m: m[N2] >= 1 and m[KBP] >= 1,
         lambda m: [(_bump(m, {KBP: -1, KB: 1}), 1)], derived=True),
    Rule(
        "5a", "(a+b-1)(a+1)v_n=0",
        lambda m: m[N2] >= 1 and m[KA] >= 2,
        lambda m: [
            (_bump(m, {KA: -2}), 1),
            (_bump(m, {KA: -2, KB: 1}), -1),
            (_bump(m, {KA: -1, KB: 1}), -1),
        ],
        derived=True,
    ),
    Rule(
        "5b", "(a+b-1)(b+1)v_n=0",
        lambda m: m[N2] >= 1 and m[KA] >= 1 and m[KB] >= 1,
        lambda m: [
            (_bump(m, {KA: -1, KB: -1}), 1),
            (_bump(m, {KB: -1}), -1),
            (_bump(m, {KA: -1, KB: 1}), -1),
        ],
        derived=True,
    ),
    Rule(
        "6", "(1-a)a=(1-b)b",
        lambda m: m[N2] == 0 and m[KA] >= 2,
        lambda m: [
            (_bump(m, {KA: -1}), 1),
            (_bump(m, {KA: -2, KB: 1}), -1),
            (_bump(m, {KA: -2, KB: 2}), 1),
        ],
    ),
]


# --------------------------------------------------------------------- #
# Registry
# --------------------------------------------------------------------- #
_B1_ELIM = (("b", ("e", "a")), ("b'", ("e'", "a'")))

B1 = Presentation("B1", ("e", "e'", "a", "a'", "A"), tuple(_B1_RULES), frozenset(), _B1_ELIM, frozenset({"A"}))
B1A = Presentation("B1A", ("e", "e'", "a", "a'", "A"), tuple(_B1A_RULES), frozenset({"A"}), _B1_ELIM)
B2 = Presentation("B2", ("a", "b", "a'", "b'"), tuple(_B2_RULES))

PRESENTATIONS: dict[str, Presentation] = {p.name: p for p in (B1, B1A, B2)}


def get_presentation(name: "str | Presentation") -> Presentation:
    if isinstance(name, Presentation):
        return name
    try:
        return PRESENTATIONS[name]
    except KeyError:
        raise RingError(f"unknown presentation {name!r}; choose from {sorted(PRESENTATIONS)}") from None
