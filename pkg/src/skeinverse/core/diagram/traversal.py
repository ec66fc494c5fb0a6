"""skeinverse.core.diagram.traversal
=================================
Walks a diagram the way the B1 induction needs: components in a chosen
order, each from a base arc in a chosen direction. The first time the walk
meets a crossing decides whether it is *good* (met on the under strand) or
*bad* (met on the over strand).

Signs are taken relative to the walk's directions: reversing exactly one of
the two strands at a crossing flips its sign, so self-crossing signs never
depend on the context while inter-component signs may.
"""

from __future__ import annotations

# --------------------------------------------------------------------- #
# Std-lib imports
# --------------------------------------------------------------------- #
import random
from dataclasses import dataclass
from enum import Enum

# --------------------------------------------------------------------- #
# Internal imports
# --------------------------------------------------------------------- #
from ..errors import DiagramError
from ..util.random import rng_bool, rng_choice, rng_shuffled
from .diagram import LinkDiagram

__all__ = ["TraversalContext", "Status", "Locality", "CrossingRecord", "CrossingReport", "classify"]


class Status(Enum):
    GOOD = "good"
    BAD = "bad"


class Locality(Enum):
    SELF = "self"
    INTER = "inter"


@dataclass(frozen=True, slots=True)
class TraversalContext:
    """Order, base arcs and directions for the crossed components of a diagram.

    `base_arc[i]` and `direction[i]` belong to component *i* (index into
    `LinkDiagram.components`), whatever its place in `component_order`.
    """

    component_order: tuple[int, ...]
    base_arc: tuple[int, ...]
    direction: tuple[bool, ...]          # True = along the numbering

    @classmethod
    def canonical(cls, D: LinkDiagram) -> "TraversalContext":
        comps = D.components
        return cls(
            tuple(range(len(comps))),
            tuple(comp[0] for comp in comps),
            tuple(True for _ in comps),
        )

    @classmethod
    def random(cls, D: LinkDiagram, rnd: random.Random) -> "TraversalContext":
        comps = D.components
        return cls(
            tuple(rng_shuffled(rnd, range(len(comps)))),
            tuple(rng_choice(rnd, comp) for comp in comps),
            tuple(rng_bool(rnd) for _ in comps),
        )

    def check(self, D: LinkDiagram) -> None:
        k = len(D.components)
        if sorted(self.component_order) != list(range(k)):
            raise DiagramError(f"component_order {self.component_order} is not a permutation of 0..{k - 1}")
        if len(self.base_arc) != k or len(self.direction) != k:
            raise DiagramError("one base arc and one direction per component expected")
        for idx, arc in enumerate(self.base_arc):
            if arc not in D.components[idx]:
                raise DiagramError(f"base arc {arc} is not on component {idx}")


@dataclass(frozen=True, slots=True)
class CrossingRecord:
    status: Status
    locality: Locality
    sign: int


@dataclass(frozen=True, slots=True)
class CrossingReport:
    records: tuple[CrossingRecord, ...]
    visit_order: tuple[int, ...]
    first_bad: int | None

    @property
    def bad_count(self) -> int:
        return sum(1 for r in self.records if r.status is Status.BAD)

    @property
    def writhe(self) -> int:
        return sum(r.sign for r in self.records)

    @property
    def self_writhe(self) -> int:
        return sum(r.sign for r in self.records if r.locality is Locality.SELF)

    def as_dict(self) -> dict:
        return {
            "d": self.bad_count,
            "w": self.writhe,
            "self_w": self.self_writhe,
            "first_bad": self.first_bad,
        }


def classify(D: LinkDiagram, ctx: TraversalContext | None = None) -> CrossingReport:
    if ctx is None:
        ctx = TraversalContext.canonical(D)
    ctx.check(D)

    comp_of = {lab: idx for idx, comp in enumerate(D.components) for lab in comp}
    status: dict[int, Status] = {}
    order: list[int] = []
    for comp_idx in ctx.component_order:
        comp = D.components[comp_idx]
        start = comp.index(ctx.base_arc[comp_idx])
        if ctx.direction[comp_idx]:
            walk = [(comp[(start + t) % len(comp)], True) for t in range(len(comp))]
        else:
            walk = [(comp[(start - t) % len(comp)], False) for t in range(len(comp))]
        for arc, forward in walk:
            ci, p = D.head(arc) if forward else D.tail(arc)
            if ci in status:
                continue
            status[ci] = Status.BAD if p % 2 == 1 else Status.GOOD   # met on the over strand first
            order.append(ci)

    records = []
    for ci, x in enumerate(D.crossings):
        under, over = comp_of[x.ends[0]], comp_of[x.ends[1]]
        # reversing one strand of an inter crossing flips its sign; self crossings flip twice
        flips = (not ctx.direction[under]) != (not ctx.direction[over])
        records.append(CrossingRecord(
            status=status[ci],
            locality=Locality.SELF if under == over else Locality.INTER,
            sign=-x.sign if flips else x.sign,
        ))
    first_bad = next((ci for ci in order if status[ci] is Status.BAD), None)
    return CrossingReport(tuple(records), tuple(order), first_bad)
