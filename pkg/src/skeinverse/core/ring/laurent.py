"""skeinverse.core.ring.laurent
============================
Integer Laurent polynomials in one or two named variables, as thin immutable
wrappers around an expanded sympy expression.

sympy does the arithmetic; this class pins down what the rest of the package
relies on: exact integer coefficients, equality by coefficient table, a
deterministic rendering, and the quarter-power `t` view for Jones values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import sympy as sp

from ..errors import RingError

__all__ = ["LaurentPoly"]


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    expr: sp.Expr
    variables: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "expr", sp.expand(sp.sympify(self.expr)))
        object.__setattr__(self, "variables", tuple(self.variables))

    # ---------------------------------------------------------------- #
    # Constructors
    # ---------------------------------------------------------------- #
    @classmethod
    def variable(cls, name: str) -> "LaurentPoly":
        return cls(sp.Symbol(name), (name,))

    @classmethod
    def constant(cls, value: int, variables: tuple[str, ...]) -> "LaurentPoly":
        return cls(sp.Integer(value), variables)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, ...], int], variables: tuple[str, ...]) -> "LaurentPoly":
        syms = [sp.Symbol(v) for v in variables]
        expr = sp.Add(*(c * sp.Mul(*(s**e for s, e in zip(syms, exps))) for exps, c in terms.items()))
        return cls(expr, variables)

    # ---------------------------------------------------------------- #
    # Coefficient table
    # ---------------------------------------------------------------- #
    @property
    def symbols(self) -> tuple[sp.Symbol, ...]:
        return tuple(sp.Symbol(v) for v in self.variables)

    def terms(self) -> dict[tuple[int, ...], int]:
        syms = self.symbols
        out: dict[tuple[int, ...], int] = {}
        for term in sp.Add.make_args(self.expr):
            coeff, rest = term.as_coeff_Mul()
            if coeff == 0:
                continue
            if not coeff.is_Integer:
                raise RingError(f"non-integer coefficient {coeff} in {self.expr}")
            powers = rest.as_powers_dict()
            stray = [b for b in powers if b != 1 and b not in syms]
            if stray:
                raise RingError(f"{self.expr} involves {stray}, outside {self.variables}")
            exps = []
            for s in syms:
                e = powers.get(s, 0)
                if not sp.sympify(e).is_Integer:
                    raise RingError(f"non-integer exponent {e} of {s}")
                exps.append(int(e))
            key = tuple(exps)
            out[key] = out.get(key, 0) + int(coeff)
        return {k: v for k, v in out.items() if v != 0}

    def is_zero(self) -> bool:
        return not self.terms()

    # ---------------------------------------------------------------- #
    # Arithmetic
    # ---------------------------------------------------------------- #
    def _coerce(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variables)
        return NotImplemented  # type: ignore[return-value]

    def _vars(self, other: "LaurentPoly") -> tuple[str, ...]:
        return self.variables + tuple(v for v in other.variables if v not in self.variables)

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        o = self._coerce(other)
        return LaurentPoly(self.expr + o.expr, self._vars(o))

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        o = self._coerce(other)
        return LaurentPoly(self.expr - o.expr, self._vars(o))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        o = self._coerce(other)
        return LaurentPoly(self.expr * o.expr, self._vars(o))

    __rmul__ = __mul__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(-self.expr, self.variables)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0 and len(self.terms()) != 1:
            raise RingError("only monomials are invertible in a Laurent ring")
        return LaurentPoly(self.expr**k, self.variables)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return sp.expand(self.expr - other.expr) == 0

    def __hash__(self) -> int:
        return hash(frozenset(self.terms().items()))

    def substitute(self, mapping: Mapping[str, "LaurentPoly"], variables: tuple[str, ...] | None = None) -> "LaurentPoly":
        subs = {sp.Symbol(k): v.expr for k, v in mapping.items()}
        return LaurentPoly(self.expr.subs(subs, simultaneous=True), variables or self.variables)

    # ---------------------------------------------------------------- #
    # Rendering
    # ---------------------------------------------------------------- #
    def render(self) -> str:
        return sp.sstr(self.expr, order="lex")

    def t_quarters(self, q: str = "q") -> dict[Fraction, int]:
        """Coefficients keyed by the exponent of t, where q = t^(-1/4)."""
        idx = self.variables.index(q)
        return {Fraction(-exps[idx], 4): c for exps, c in self.terms().items()}

    def render_t(self, q: str = "q") -> str:
        t = sp.Symbol("t")
        return sp.sstr(sp.expand(self.expr.subs(sp.Symbol(q), t ** sp.Rational(-1, 4))), order="lex")

    def as_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [{"exponents": list(k), "coeff": v} for k, v in sorted(self.terms().items())],
            "text": self.render(),
        }

    def __str__(self) -> str:
        return self.render()
