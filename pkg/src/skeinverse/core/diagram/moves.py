"""skeinverse.core.diagram.moves
=============================
Reidemeister moves as local surgery on a LinkDiagram.

Every move keeps the orientation of the strands it touches, so writhe under
the canonical context changes only under R1 (by the kink's sign). Sites are
addressed by crossing index + corner or by arc label; arc `0` stands for a
free loop.

Corner `k` of crossing `x` is the angle between slots k and k+1. Faces are
walked as in `diagram.faces`: the arc at slot k of x lands at (x', q), and
the face continues at corner q-1 of x'.
"""

from __future__ import annotations

# --------------------------------------------------------------------- #
# Std-lib imports
# --------------------------------------------------------------------- #
import logging
from dataclasses import dataclass
from enum import Enum

# --------------------------------------------------------------------- #
# Internal imports
# --------------------------------------------------------------------- #
from ..errors import MoveError
from ..util.random import make_rng, rng_bool, rng_choice, rng_int
from ..util.unionfind import UnionFind
from .crossing import Crossing, Slot
from .diagram import LinkDiagram, _relabel_oriented, switch, unlink

logger = logging.getLogger(__name__)

__all__ = ["MoveKind", "MoveSpec", "apply_move", "available_moves", "random_diagram"]


class MoveKind(Enum):
    R1_PLUS = "R1+"
    R1_MINUS = "R1-"
    R2_PLUS = "R2+"
    R2_MINUS = "R2-"
    R3 = "R3"


@dataclass(frozen=True, slots=True)
class MoveSpec:
    kind: MoveKind
    crossing: int | None = None
    corner: int | None = None
    arc: int | None = None
    positive: bool = True           # R1+: sign of the new kink
    under_first: bool = True        # R1+: the strand meets the kink on the under pass first
    first_over: bool = True         # R2+: first object (P, or the loop) goes over

    def describe(self) -> str:
        if self.kind is MoveKind.R1_PLUS:
            return f"R1+ arc={self.arc} {'+' if self.positive else '-'}{' under' if self.under_first else ' over'}"
        if self.kind is MoveKind.R2_PLUS:
            site = f"x={self.crossing} k={self.corner}" if self.arc is None else f"arc={self.arc}"
            return f"R2+ {site} {'over' if self.first_over else 'under'}"
        return f"{self.kind.value} x={self.crossing} k={self.corner}"


# --------------------------------------------------------------------- #
# Small helpers
# --------------------------------------------------------------------- #
class _Scratch:
    """Mutable copy of a diagram's crossings plus a fresh-label counter."""

    def __init__(self, D: LinkDiagram) -> None:
        self.ends = [list(x.ends) for x in D.crossings]
        self.over_in = [x.over_in for x in D.crossings]
        self.next_label = D.arc_count + 1

    def fresh(self) -> int:
        self.next_label += 1
        return self.next_label - 1

    def put(self, slot: Slot, label: int) -> None:
        self.ends[slot[0]][slot[1]] = label

    def crossings(self, drop: set[int] = frozenset()) -> list[Crossing]:  # type: ignore[assignment]
        return [Crossing(tuple(e), o) for i, (e, o) in enumerate(zip(self.ends, self.over_in)) if i not in drop]  # type: ignore[arg-type]


def _partner(D: LinkDiagram, slot: Slot) -> Slot:
    lab = D.crossings[slot[0]].ends[slot[1]]
    return D.tail(lab) if D.head(lab) == slot else D.head(lab)


def _check_arc(D: LinkDiagram, arc: int | None) -> int:
    if arc is None or not 0 <= arc <= D.arc_count:
        raise MoveError(f"arc {arc} not in diagram")
    if arc == 0 and D.free_loops == 0:
        raise MoveError("arc 0 names a free loop, but the diagram has none")
    return arc


def _check_site(D: LinkDiagram, m: MoveSpec) -> tuple[int, int]:
    if m.crossing is None or m.corner is None or not 0 <= m.crossing < D.crossing_count:
        raise MoveError(f"{m.kind.value} needs a valid crossing and corner, got {m.crossing}/{m.corner}")
    return m.crossing, m.corner % 4


# --------------------------------------------------------------------- #
# R1
# --------------------------------------------------------------------- #
_KINKS = {
    # (under_first, positive) -> (ends pattern over L1, L2, Lp; over_in)
    (True, True): (("L1", "L2", "Lp", "Lp"), 3),
    (True, False): (("L1", "Lp", "Lp", "L2"), 1),
    (False, True): (("Lp", "Lp", "L2", "L1"), 3),
    (False, False): (("Lp", "L1", "L2", "Lp"), 1),
}


def _r1_plus(D: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    arc = _check_arc(D, m.arc)
    s = _Scratch(D)
    loops = D.free_loops
    if arc == 0:
        loops -= 1
        first = s.fresh()
        names = {"L1": first, "L2": first}
    else:
        names = {"L1": s.fresh(), "L2": s.fresh()}
        s.put(D.tail(arc), names["L1"])
        s.put(D.head(arc), names["L2"])
    names["Lp"] = s.fresh()
    pattern, over_in = _KINKS[(m.under_first, m.positive)]
    kink = Crossing(tuple(names[k] for k in pattern), over_in)  # type: ignore[arg-type]
    return _relabel_oriented(s.crossings() + [kink], loops)


def _r1_minus(D: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    x, p = _check_site(D, m)
    cr = D.crossings[x]
    if cr.ends[p] != cr.ends[(p + 1) % 4]:
        raise MoveError(f"no curl at corner {p} of crossing {x}")
    a, b = (p + 2) % 4, (p + 3) % 4
    l_in, l_out = (cr.ends[a], cr.ends[b]) if cr.is_in(a) else (cr.ends[b], cr.ends[a])
    rest = [c for i, c in enumerate(D.crossings) if i != x]
    if l_in == l_out:
        return _relabel_oriented(rest, D.free_loops + 1) if rest else unlink(D.free_loops + 1)
    rest = [c.relabeled({l_out: l_in}) for c in rest]
    return _relabel_oriented(rest, D.free_loops)


# --------------------------------------------------------------------- #
# R2
# --------------------------------------------------------------------- #
def _frame(ends: tuple[int, int, int, int], first_in: int, second_in: int, first_over: bool) -> Crossing:
    """`first_in`/`second_in` are the entry slots of the first and second strand."""
    if first_over:
        return Crossing.from_frame(ends, second_in, first_in)
    return Crossing.from_frame(ends, first_in, second_in)


def _r2_plus_corner(D: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    x, k = _check_site(D, m)
    cr = D.crossings[x]
    sp, sq = (x, k), (x, (k + 1) % 4)
    P, Q = cr.ends[sp[1]], cr.ends[sq[1]]
    if P == Q:
        raise MoveError(f"corner {k} of crossing {x} is a curl; push a finger across another arc")
    op, oq = _partner(D, sp), _partner(D, sq)
    p_out, q_out = not cr.is_in(sp[1]), not cr.is_in(sq[1])

    s = _Scratch(D)
    P1, P2, P3, Q1, Q2, Q3 = (s.fresh() for _ in range(6))
    s.put(sp, P1)
    s.put(op, P3)
    s.put(sq, Q1)
    s.put(oq, Q3)
    # E, N, W, S around each new crossing
    Y = _frame((P1, Q2, P2, Q1), 0 if p_out else 2, 3 if q_out else 1, m.first_over)
    Z = _frame((P3, Q3, P2, Q2), 2 if p_out else 0, 3 if q_out else 1, m.first_over)
    return _relabel_oriented(s.crossings() + [Y, Z], D.free_loops)


def _r2_plus_loop(D: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    arc = _check_arc(D, m.arc)
    need = 2 if arc == 0 else 1
    if D.free_loops < need:
        raise MoveError("R2+ with a free loop needs a free loop to push")
    s = _Scratch(D)
    if arc == 0:
        L1 = L3 = s.fresh()
    else:
        L1, L3 = s.fresh(), s.fresh()
        s.put(D.tail(arc), L1)
        s.put(D.head(arc), L3)
    L2, M1, M2 = s.fresh(), s.fresh(), s.fresh()
    # loop first, arc second
    Y = _frame((L2, M2, L1, M1), 1, 2, m.first_over)
    Z = _frame((L3, M2, L2, M1), 3, 2, m.first_over)
    return _relabel_oriented(s.crossings() + [Y, Z], D.free_loops - need)


def _r2_minus_site(D: LinkDiagram, y: int, i: int) -> tuple[int, int] | None:
    """(z, q) when corner i of crossing y bounds a removable bigon."""
    z, q = _partner(D, (y, i))
    if z == y or i % 2 != q % 2:
        return None
    if _partner(D, (y, (i + 1) % 4)) != (z, (q - 1) % 4):
        return None
    return z, q


def _r2_minus(D: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    y, i = _check_site(D, m)
    site = _r2_minus_site(D, y, i)
    if site is None:
        raise MoveError(f"corner {i} of crossing {y} bounds no R2 bigon")
    z, q = site
    Y, Z = D.crossings[y].ends, D.crossings[z].ends
    uf: UnionFind[int] = UnionFind(Y + Z)
    uf.union(Y[(i + 2) % 4], Y[i])
    uf.union(Y[i], Z[(q + 2) % 4])
    uf.union(Y[(i + 3) % 4], Y[(i + 1) % 4])
    uf.union(Y[(i + 1) % 4], Z[(q + 1) % 4])
    rest = [c for idx, c in enumerate(D.crossings) if idx not in (y, z)]
    remaining = {lab for c in rest for lab in c.ends}
    closed = sum(1 for cls in uf.classes() if not remaining.intersection(cls))
    mapping = {lab: uf.find(lab) for lab in Y + Z}
    rest = [c.relabeled(mapping) for c in rest]
    if not rest:
        return unlink(D.free_loops + closed)
    return _relabel_oriented(rest, D.free_loops + closed)


# --------------------------------------------------------------------- #
# R3
# --------------------------------------------------------------------- #
@dataclass(frozen=True, slots=True)
class _Triangle:
    x1: int
    p1: int
    x2: int
    q: int
    x3: int
    r: int


def _r3_site(D: LinkDiagram, x1: int, p1: int) -> _Triangle | None:
    x2, q = _partner(D, (x1, p1))
    x3, r = _partner(D, (x2, (q - 1) % 4))
    if len({x1, x2, x3}) != 3:
        return None
    if _partner(D, (x3, (r - 1) % 4)) != (x1, (p1 + 1) % 4):
        return None
    edges = (
        (p1, q),
        ((q - 1) % 4, r),
        ((r - 1) % 4, (p1 + 1) % 4),
    )
    if not any(a % 2 == 1 and b % 2 == 1 for a, b in edges):
        return None
    return _Triangle(x1, p1, x2, q, x3, r)


def _r3(D: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    x1, p1 = _check_site(D, m)
    t = _r3_site(D, x1, p1)
    if t is None:
        raise MoveError(f"corner {p1} of crossing {x1} is not an R3 triangle")
    X1, X2, X3 = (D.crossings[i] for i in (t.x1, t.x2, t.x3))
    q, r = t.q, t.r
    a1, a2 = X1.ends[(p1 + 2) % 4], X2.ends[(q + 2) % 4]
    b2, b3 = X2.ends[(q + 1) % 4], X3.ends[(r + 2) % 4]
    c3, c1 = X3.ends[(r + 1) % 4], X1.ends[(p1 + 3) % 4]
    a_fwd = X1.is_in((p1 + 2) % 4)          # a1 -> a2
    b_fwd = X2.is_in((q + 1) % 4)           # b2 -> b3
    c_fwd = X3.is_in((r + 1) % 4)           # c3 -> c1
    a_over_b, a_over_c, b_over_c = q % 2 == 1, p1 % 2 == 1, r % 2 == 1

    s = _Scratch(D)
    EA, EB, EC = s.fresh(), s.fresh(), s.fresh()
    # the same pair keeps the same over strand
    x_ab = _frame((EB, EA, b3, a1), 3 if a_fwd else 1, 0 if b_fwd else 2, a_over_b)
    x_ac = _frame((EC, a2, c3, EA), 3 if a_fwd else 1, 2 if c_fwd else 0, a_over_c)
    x_bc = _frame((c1, b2, EC, EB), 1 if b_fwd else 3, 2 if c_fwd else 0, b_over_c)
    kept = s.crossings(drop={t.x1, t.x2, t.x3})
    return _relabel_oriented(kept + [x_ab, x_ac, x_bc], D.free_loops)


# --------------------------------------------------------------------- #
# Public API
# --------------------------------------------------------------------- #
def apply_move(D: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    if m.kind is MoveKind.R1_PLUS:
        out = _r1_plus(D, m)
    elif m.kind is MoveKind.R1_MINUS:
        out = _r1_minus(D, m)
    elif m.kind is MoveKind.R2_PLUS:
        out = _r2_plus_loop(D, m) if m.arc is not None else _r2_plus_corner(D, m)
    elif m.kind is MoveKind.R2_MINUS:
        out = _r2_minus(D, m)
    else:
        out = _r3(D, m)
    logger.debug("%s: %d -> %d crossings", m.describe(), D.crossing_count, out.crossing_count)
    return out


def available_moves(D: LinkDiagram, max_crossings: int | None = None) -> list[MoveSpec]:
    """Every applicable move, in a fixed order; growth capped at `max_crossings`."""
    c = D.crossing_count
    room = None if max_crossings is None else max_crossings - c
    moves: list[MoveSpec] = []

    if room is None or room >= 1:
        arcs = list(range(1, D.arc_count + 1)) + ([0] if D.free_loops else [])
        for arc in arcs:
            for under_first in (True, False):
                for positive in (True, False):
                    moves.append(MoveSpec(MoveKind.R1_PLUS, arc=arc, positive=positive, under_first=under_first))

    if room is None or room >= 2:
        for x, cr in enumerate(D.crossings):
            for k in range(4):
                if cr.ends[k] != cr.ends[(k + 1) % 4]:
                    for over in (True, False):
                        moves.append(MoveSpec(MoveKind.R2_PLUS, crossing=x, corner=k, first_over=over))
        if D.free_loops:
            targets = list(range(1, D.arc_count + 1)) + ([0] if D.free_loops >= 2 else [])
            for arc in targets:
                for over in (True, False):
                    moves.append(MoveSpec(MoveKind.R2_PLUS, arc=arc, first_over=over))

    for x, cr in enumerate(D.crossings):
        for k in range(4):
            if cr.ends[k] == cr.ends[(k + 1) % 4]:
                moves.append(MoveSpec(MoveKind.R1_MINUS, crossing=x, corner=k))
            if _r2_minus_site(D, x, k) is not None:
                moves.append(MoveSpec(MoveKind.R2_MINUS, crossing=x, corner=k))
            if _r3_site(D, x, k) is not None:
                moves.append(MoveSpec(MoveKind.R3, crossing=x, corner=k))
    return moves


def random_diagram(seed: int, c_max: int) -> LinkDiagram:
    """Deterministic random closed diagram with at most `c_max` crossings.

    Grows an unlink of one or two circles by random R1+/R2+/R3 moves, then
    switches a random subset of crossings.
    """
    if c_max < 0:
        raise ValueError("c_max must be >= 0")
    rnd = make_rng(seed)
    D = unlink(rng_int(rnd, 1, 2))
    target = rng_int(rnd, 0, c_max)
    for _ in range(4 * c_max + 4):
        if D.crossing_count >= target:
            break
        growth = [
            m for m in available_moves(D, max_crossings=c_max)
            if m.kind in (MoveKind.R1_PLUS, MoveKind.R2_PLUS, MoveKind.R3)
        ]
        if not growth:
            break
        D = apply_move(D, rng_choice(rnd, growth))
    for x in range(D.crossing_count):
        if rng_bool(rnd, 0.4):
            D = switch(D, x)
    return D
