"""skeinverse.core.diagram.diagram
===============================
**LinkDiagram** is an immutable planar-diagram code: crossings with ccw arc
ends, plus a count of free loops (circles that meet no crossing).

Design goals
------------
1.  *Immutable values*: every operation returns a new diagram, so recursion
    branches and caches can share diagrams freely.
2.  *Validated on construction*: `__post_init__` checks arc multiplicity,
    in/out consistency and consecutive numbering; a LinkDiagram that exists
    is a valid one.
3.  *Orientation is data*: the numbering-induced orientation is stored in the
    crossings (`e0` under-in, `over_in`) and preserved by moves; surgeries
    that destroy it (smoothings) pick a deterministic new one.
4.  *Canonical renumbering*: surgery results are renumbered consecutively
    along components, components discovered in crossing order.
"""

from __future__ import annotations

# --------------------------------------------------------------------- #
# Std-lib imports
# --------------------------------------------------------------------- #
import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

# --------------------------------------------------------------------- #
# Internal imports
# --------------------------------------------------------------------- #
from ..errors import (
    ArcMultiplicityError,
    DiagramError,
    EmptyDiagramError,
    InconsistentNumberingError,
    InvalidCrossingError,
    MalformedTokenError,
)
from ..util.unionfind import UnionFind
from .crossing import SMOOTHING_PAIRS, Crossing, Slot, Smoothing

logger = logging.getLogger(__name__)

__all__ = [
    "LinkDiagram",
    "ComponentTable",
    "parse_diagram",
    "trace_components",
    "smooth",
    "switch",
    "mirror",
    "disjoint_union",
    "unlink",
    "braid_closure",
    "faces",
    "canonical_code",
    "state_loop_count",
]

Ends = tuple[int, int, int, int]


# --------------------------------------------------------------------- #
# LinkDiagram
# --------------------------------------------------------------------- #
@dataclass(frozen=True, slots=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    # derived on construction; not part of equality
    _components: tuple[tuple[int, ...], ...] = field(default=(), init=False, repr=False, compare=False)
    _head: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _tail: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise DiagramError(f"free_loops must be >= 0, got {self.free_loops}")
        if not self.crossings and self.free_loops == 0:
            raise EmptyDiagramError("a 0-crossing diagram needs at least one free loop")
        self._validate()

    def _validate(self) -> None:
        n_arcs = 2 * len(self.crossings)
        counts = Counter(lab for x in self.crossings for lab in x.ends)
        if set(counts) != set(range(1, n_arcs + 1)) or any(v != 2 for v in counts.values()):
            bad = sorted(lab for lab in set(counts) | set(range(1, n_arcs + 1)) if counts.get(lab, 0) != 2)
            raise ArcMultiplicityError(f"arcs must be 1..{n_arcs}, each exactly twice; offending: {bad}")

        head: dict[int, Slot] = {}
        tail: dict[int, Slot] = {}
        for ci, x in enumerate(self.crossings):
            for p, lab in enumerate(x.ends):
                side = head if x.is_in(p) else tail
                if lab in side:
                    raise InconsistentNumberingError(f"arc {lab} enters (or leaves) crossings twice")
                side[lab] = (ci, p)

        succ = {lab: self.crossings[ci].ends[(p + 2) % 4] for lab, (ci, p) in head.items()}
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in range(1, n_arcs + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = succ[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = succ[nxt]
            hi = start + len(cyc) - 1
            if cyc != list(range(start, hi + 1)):
                raise InconsistentNumberingError(f"component through arc {start} is numbered {cyc}, not consecutively")
            comps.append(tuple(cyc))
        object.__setattr__(self, "_components", tuple(comps))
        object.__setattr__(self, "_head", head)
        object.__setattr__(self, "_tail", tail)

    # ---------------------------------------------------------------- #
    # Sizes
    # ---------------------------------------------------------------- #
    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Arc labels per crossed component, in orientation order."""
        return self._components

    @property
    def component_count(self) -> int:
        return len(self._components) + self.free_loops

    # ---------------------------------------------------------------- #
    # Arc look-ups
    # ---------------------------------------------------------------- #
    def head(self, arc: int) -> Slot:
        """Slot where `arc` ends (an in-slot)."""
        return self._head[arc]

    def tail(self, arc: int) -> Slot:
        """Slot where `arc` starts (an out-slot)."""
        return self._tail[arc]

    def component_of(self, arc: int) -> int:
        for idx, comp in enumerate(self._components):
            if comp[0] <= arc <= comp[-1]:
                return idx
        raise DiagramError(f"no arc {arc} in this diagram")

    def crossing(self, x: int) -> Crossing:
        if not 0 <= x < len(self.crossings):
            raise InvalidCrossingError(f"crossing index {x} out of range 0..{len(self.crossings) - 1}")
        return self.crossings[x]

    def is_self_crossing(self, x: int) -> bool:
        ends = self.crossing(x).ends
        return self.component_of(ends[0]) == self.component_of(ends[1])

    def render(self) -> str:
        parts = [x.render() for x in self.crossings]
        if self.free_loops:
            parts.append(f"O {self.free_loops}")
        return " ".join(parts)

    def as_dict(self) -> dict:
        return {
            "code": self.render(),
            "crossings": len(self.crossings),
            "components": self.component_count,
            "free_loops": self.free_loops,
        }

    def __str__(self) -> str:
        return self.render()


# --------------------------------------------------------------------- #
# Component table
# --------------------------------------------------------------------- #
@dataclass(frozen=True, slots=True)
class ComponentTable:
    arc_component: dict[int, int]
    sequences: tuple[tuple[int, ...], ...]
    free_loops: int

    @property
    def mu(self) -> int:
        return len(self.sequences) + self.free_loops


def trace_components(D: LinkDiagram) -> ComponentTable:
    arc_component = {lab: idx for idx, comp in enumerate(D.components) for lab in comp}
    return ComponentTable(arc_component, D.components, D.free_loops)


# --------------------------------------------------------------------- #
# Unoriented tracing and assembly
# --------------------------------------------------------------------- #
def _occurrences(raw: Sequence[Ends]) -> dict[int, list[Slot]]:
    occ: dict[int, list[Slot]] = {}
    for ci, ends in enumerate(raw):
        for p, lab in enumerate(ends):
            occ.setdefault(lab, []).append((ci, p))
    return occ


def _partner(occ: dict[int, list[Slot]], raw: Sequence[Ends], slot: Slot) -> Slot:
    a, b = occ[raw[slot[0]][slot[1]]]
    return b if a == slot else a


def _trace(raw: Sequence[Ends], occ: dict[int, list[Slot]], start: Slot) -> list[Slot]:
    """Arrival slots met when entering at `start` and going straight through."""
    out = [start]
    ci, p = start
    nxt = _partner(occ, raw, (ci, (p + 2) % 4))
    while nxt != start:
        out.append(nxt)
        ci, p = nxt
        nxt = _partner(occ, raw, (ci, (p + 2) % 4))
    return out


def _unoriented_cycles(raw: Sequence[Ends]) -> list[list[Slot]]:
    """One arrival cycle per component, each entering at its lowest slot."""
    occ = _occurrences(raw)
    covered: set[Slot] = set()
    cycles = []
    for ci in range(len(raw)):
        for p in range(4):
            if (ci, p) in covered:
                continue
            cyc = _trace(raw, occ, (ci, p))
            for c, q in cyc:
                covered.add((c, q))
                covered.add((c, (q + 2) % 4))
            cycles.append(cyc)
    return cycles


def _reverse(cycle: list[Slot]) -> list[Slot]:
    return [(ci, (p + 2) % 4) for ci, p in reversed(cycle)]


def _assemble(raw: Sequence[Ends], cycles: Iterable[list[Slot]], free_loops: int) -> LinkDiagram:
    """Renumber consecutively along the given oriented arrival cycles."""
    new_ends = [list(e) for e in raw]
    under_in: dict[int, int] = {}
    over_in: dict[int, int] = {}
    base = 1
    for cyc in cycles:
        k = len(cyc)
        for t, (ci, p) in enumerate(cyc):
            new_ends[ci][p] = base + (t - 1) % k
            new_ends[ci][(p + 2) % 4] = base + t
            (under_in if p % 2 == 0 else over_in)[ci] = p
        base += k
    crossings = tuple(
        Crossing.from_frame(tuple(new_ends[ci]), under_in[ci], over_in[ci])  # type: ignore[arg-type]
        for ci in range(len(raw))
    )
    return LinkDiagram(crossings, free_loops)


def _relabel_oriented(crossings: Sequence[Crossing], free_loops: int) -> LinkDiagram:
    """Renumber diagrams whose crossings already carry a consistent orientation."""
    raw = [x.ends for x in crossings]
    head: dict[int, Slot] = {}
    for ci, x in enumerate(crossings):
        for p in range(4):
            if x.is_in(p):
                head[x.ends[p]] = (ci, p)
    seen: set[Slot] = set()
    cycles = []
    for ci, x in enumerate(crossings):
        for p in range(4):
            if not x.is_in(p) or (ci, p) in seen:
                continue
            cyc = []
            slot = (ci, p)
            while slot not in seen:
                seen.add(slot)
                cyc.append(slot)
                c, q = slot
                slot = head[raw[c][(q + 2) % 4]]
            cycles.append(cyc)
    return _assemble(raw, cycles, free_loops)


# --------------------------------------------------------------------- #
# Parsing
# --------------------------------------------------------------------- #
_TOKEN = re.compile(r"([CXB])\s*\(([^()]*)\)|O\s+(-?\d+)|(\S+)")


def _ints(body: str, token: str) -> list[int]:
    try:
        return [int(part) for part in body.split(",")]
    except ValueError:
        raise MalformedTokenError(f"non-integer entry in {token!r}") from None


def _is_consecutive_cycle(labels: Sequence[int]) -> bool:
    lo = min(labels)
    start = labels.index(lo)
    k = len(labels)
    return all(labels[(start + t) % k] == lo + t for t in range(k))


def parse_diagram(text: str) -> LinkDiagram:
    """Parse native `C(..)`, classic `X(..)`, braid `B(..)` and `O n` tokens.

    `C(e0,e1,e2,e3)`: ccw ends, e0/e2 under; direction read from numbering.
    `X(a,b,c,d)`: a is the under-in end; the over direction comes from
    numbering. `B(g1,g2,..)`: closure of a braid word (σ_i positive).
    """
    if not text or not text.strip():
        raise EmptyDiagramError("empty diagram text")

    raw: list[Ends] = []
    fixed_under: list[bool] = []
    braid: list[int] | None = None
    loops = 0
    for m in _TOKEN.finditer(text):
        kind, body, loop_count, junk = m.groups()
        if junk is not None:
            raise MalformedTokenError(f"unrecognised token {junk!r}")
        if loop_count is not None:
            n = int(loop_count)
            if n < 0:
                raise MalformedTokenError(f"negative loop count in {m.group(0)!r}")
            loops += n
            continue
        values = _ints(body, m.group(0))
        if kind == "B":
            if braid is not None or any(v == 0 for v in values):
                raise MalformedTokenError(f"bad braid token {m.group(0)!r}")
            braid = values
            continue
        if len(values) != 4:
            raise MalformedTokenError(f"{m.group(0)!r} needs exactly 4 arc labels")
        raw.append(tuple(values))  # type: ignore[arg-type]
        fixed_under.append(kind == "X")

    if braid is not None:
        if raw:
            raise MalformedTokenError("braid words cannot be mixed with crossing tokens")
        return braid_closure(braid, extra_loops=loops)
    if not raw and loops == 0:
        raise EmptyDiagramError("diagram describes no components")

    D = _orient_by_numbering(raw, fixed_under, loops)
    logger.debug("parsed %d crossings, %d components", D.crossing_count, D.component_count)
    return D


def _orient_by_numbering(raw: list[Ends], fixed_under: list[bool], loops: int) -> LinkDiagram:
    counts = Counter(lab for ends in raw for lab in ends)
    bad = sorted(lab for lab, k in counts.items() if k != 2)
    if bad:
        raise ArcMultiplicityError(f"arcs {bad} do not appear exactly twice")

    under_in: dict[int, int] = {}
    over_in: dict[int, int] = {}
    for cyc in _unoriented_cycles(raw):
        labels = [raw[ci][(p + 2) % 4] for ci, p in cyc]
        chosen = None
        for candidate, seq in ((cyc, labels), (_reverse(cyc), labels[::-1])):
            x_ok = all(p == 0 for ci, p in candidate if fixed_under[ci] and p % 2 == 0)
            if x_ok and _is_consecutive_cycle(seq):
                chosen = candidate
                break
        if chosen is None:
            raise InconsistentNumberingError(f"arcs {sorted(set(labels))} admit no consecutive orientation")
        for ci, p in chosen:
            (under_in if p % 2 == 0 else over_in)[ci] = p
    crossings = tuple(Crossing.from_frame(raw[ci], under_in[ci], over_in[ci]) for ci in range(len(raw)))
    return LinkDiagram(crossings, loops)


# --------------------------------------------------------------------- #
# Constructors
# --------------------------------------------------------------------- #
def unlink(n: int) -> LinkDiagram:
    """Crossingless diagram of `n` circles."""
    return LinkDiagram((), n)


def braid_closure(word: Sequence[int], extra_loops: int = 0) -> LinkDiagram:
    """Closure of a braid word; generator `i` crosses strands i and i+1."""
    if not word:
        raise EmptyDiagramError("empty braid word")
    strands = max(abs(g) for g in word) + 1
    current = list(range(strands + 1))          # position -> arc label, 1-based
    fresh = strands + 1
    crossings: list[Crossing] = []
    for g in word:
        i = abs(g)
        left, right = current[i], current[i + 1]
        new_left, new_right = fresh, fresh + 1
        fresh += 2
        if g > 0:
            crossings.append(Crossing((right, new_right, new_left, left), 3))
        else:
            crossings.append(Crossing((left, right, new_right, new_left), 1))
        current[i], current[i + 1] = new_left, new_right
    closing = {current[j]: j for j in range(1, strands + 1) if current[j] != j}
    untouched = sum(1 for j in range(1, strands + 1) if current[j] == j)
    closed = [x.relabeled(closing) for x in crossings]
    return _relabel_oriented(closed, untouched + extra_loops)


# --------------------------------------------------------------------- #
# Surgery
# --------------------------------------------------------------------- #
def switch(D: LinkDiagram, x: int) -> LinkDiagram:
    D.crossing(x)
    crossings = list(D.crossings)
    crossings[x] = crossings[x].switched()
    return LinkDiagram(tuple(crossings), D.free_loops)


def mirror(D: LinkDiagram) -> LinkDiagram:
    return LinkDiagram(tuple(x.switched() for x in D.crossings), D.free_loops)


def disjoint_union(D1: LinkDiagram, D2: LinkDiagram) -> LinkDiagram:
    """Split diagram: D2's arcs shifted past D1's."""
    shift = D1.arc_count
    moved = tuple(Crossing(tuple(lab + shift for lab in x.ends), x.over_in) for x in D2.crossings)  # type: ignore[arg-type]
    return LinkDiagram(D1.crossings + moved, D1.free_loops + D2.free_loops)


def smooth(D: LinkDiagram, x: int, kind: Smoothing) -> LinkDiagram:
    """Remove crossing `x`, joining its ends per `kind`; loops that close up become free loops."""
    removed = D.crossing(x)
    uf: UnionFind[int] = UnionFind(removed.ends)
    for p, q in SMOOTHING_PAIRS[kind]:
        uf.union(removed.ends[p], removed.ends[q])
    rest = [c for i, c in enumerate(D.crossings) if i != x]
    remaining = {lab for c in rest for lab in c.ends}
    closed = sum(1 for cls in uf.classes() if not remaining.intersection(cls))
    mapping = {lab: uf.find(lab) for lab in removed.ends}
    raw = [c.relabeled(mapping).ends for c in rest]
    if not raw:
        return LinkDiagram((), D.free_loops + closed)
    return _assemble(raw, _unoriented_cycles(raw), D.free_loops + closed)


def state_loop_count(D: LinkDiagram, state: Sequence[Smoothing]) -> int:
    """Number of circles after smoothing every crossing per `state`."""
    if len(state) != len(D.crossings):
        raise DiagramError("state must assign a smoothing to every crossing")
    uf: UnionFind[int] = UnionFind(range(1, D.arc_count + 1))
    for x, kind in zip(D.crossings, state):
        for p, q in SMOOTHING_PAIRS[kind]:
            uf.union(x.ends[p], x.ends[q])
    return len(uf.classes()) + D.free_loops


# --------------------------------------------------------------------- #
# Faces
# --------------------------------------------------------------------- #
def faces(D: LinkDiagram) -> list[list[Slot]]:
    """Face boundaries as cycles of corners.

    Corner `(c, p)` is the angle between slots p and p+1 of crossing c. The
    walk follows the arc at slot p to its other end (c', q) and continues at
    corner (c', q-1).
    """
    raw = [x.ends for x in D.crossings]
    occ = _occurrences(raw)
    seen: set[Slot] = set()
    out = []
    for ci in range(len(raw)):
        for p in range(4):
            if (ci, p) in seen:
                continue
            cyc = []
            corner = (ci, p)
            while corner not in seen:
                seen.add(corner)
                cyc.append(corner)
                cj, q = _partner(occ, raw, corner)
                corner = (cj, (q - 1) % 4)
            out.append(cyc)
    return out


# --------------------------------------------------------------------- #
# Canonical code
# --------------------------------------------------------------------- #
def _code_from(D: LinkDiagram, raw: list[Ends], occ: dict[int, list[Slot]], start: Slot) -> tuple:
    label_at: dict[Slot, int] = {}
    rank: dict[int, tuple[int, int]] = {}
    next_label = 1
    entry: Slot | None = start
    while entry is not None:
        slot = entry
        while True:
            ci, p = slot
            if ci not in rank:
                rank[ci] = (len(rank), p)
            exit_slot = (ci, (p + 2) % 4)
            nxt = _partner(occ, raw, exit_slot)
            label_at[exit_slot] = next_label
            label_at[nxt] = next_label
            next_label += 1
            slot = nxt
            if slot == entry:
                break
        entry = None
        for ci in sorted(rank, key=lambda k: rank[k][0]):
            first = rank[ci][1]
            for t in range(4):
                cand = (ci, (first + t) % 4)
                if cand not in label_at:
                    entry = cand
                    break
            if entry is not None:
                break
        if entry is None:
            # split diagram: fall back to crossing order for the next piece
            entry = next(((ci, p) for ci in range(len(raw)) for p in range(4) if (ci, p) not in label_at), None)

    records = []
    for ci in sorted(rank, key=lambda k: rank[k][0]):
        first = rank[ci][1]
        x = D.crossings[ci]
        records.append((
            tuple(label_at[(ci, (first + t) % 4)] for t in range(4)),
            first % 2,
            (x.is_in(first), x.is_in((first + 1) % 4)),
        ))
    return tuple(records)


def canonical_code(D: LinkDiagram) -> tuple:
    """Relabelling-invariant key: the least code over every entry slot.

    Equal codes mean equal diagrams up to arc relabelling and crossing
    order, orientation included. Split diagrams may get different codes for
    equal diagrams; that only costs cache misses.
    """
    if not D.crossings:
        return (D.free_loops, ())
    raw = [x.ends for x in D.crossings]
    occ = _occurrences(raw)
    best = min(_code_from(D, raw, occ, (ci, p)) for ci in range(len(raw)) for p in range(4))
    return (D.free_loops, best)
