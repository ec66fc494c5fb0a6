"""skeinverse.core.diagram.crossing
================================
One crossing of a planar diagram: four arc ends in counter-clockwise order.

Conventions (everything else in the package leans on these)
-----------------------------------------------------------
*  `ends[0]` is the **under-in** end and `ends[2]` the under-out end, so the
   under strand always occupies the even slots.
*  `over_in` ∈ {1, 3} names the slot where the over strand enters.
*  Sign is +1 iff `over_in == 3`: the under strand then passes right-to-left
   seen along the over strand.
*  Smoothing I joins (e0,e1)+(e2,e3); smoothing II joins (e0,e3)+(e1,e2).
   Rotating by two swaps neither pairing, so I/II do not depend on which
   under end is called e0. With e0 an under end, I is the bracket's
   A-smoothing.
"""

from __future__ import annotations

# --------------------------------------------------------------------- #
# Std-lib imports
# --------------------------------------------------------------------- #
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

__all__ = ["Crossing", "Smoothing", "Slot", "SMOOTHING_PAIRS"]

# (crossing index, position 0..3)
Slot = tuple[int, int]


class Smoothing(Enum):
    """The two ways to resolve a crossing without a crossing."""
    I = "I"      # noqa: E741
    II = "II"


SMOOTHING_PAIRS: dict[Smoothing, tuple[tuple[int, int], tuple[int, int]]] = {
    Smoothing.I: ((0, 1), (2, 3)),
    Smoothing.II: ((0, 3), (1, 2)),
}


@dataclass(frozen=True, slots=True)
class Crossing:
    ends: tuple[int, int, int, int]
    over_in: int = 3

    def __post_init__(self) -> None:
        if len(self.ends) != 4:
            raise ValueError(f"a crossing needs 4 ends, got {self.ends!r}")
        if self.over_in not in (1, 3):
            raise ValueError(f"over_in must be 1 or 3, got {self.over_in}")

    # ---------------------------------------------------------------- #
    # Local frame
    # ---------------------------------------------------------------- #
    @property
    def sign(self) -> int:
        return 1 if self.over_in == 3 else -1

    @property
    def over_out(self) -> int:
        return 4 - self.over_in

    def is_in(self, pos: int) -> bool:
        """True if the strand through `pos` enters the crossing there."""
        return pos == 0 or pos == self.over_in

    def is_over(self, pos: int) -> bool:
        return pos % 2 == 1

    def label(self, pos: int) -> int:
        return self.ends[pos % 4]

    # ---------------------------------------------------------------- #
    # Surgery helpers – all return new Crossings
    # ---------------------------------------------------------------- #
    def switched(self) -> "Crossing":
        """Exchange over and under; the old over-in slot becomes e0."""
        e0, e1, e2, e3 = self.ends
        if self.over_in == 1:
            return Crossing((e1, e2, e3, e0), 3)
        return Crossing((e3, e0, e1, e2), 1)

    def relabeled(self, mapping: Mapping[int, int]) -> "Crossing":
        return Crossing(tuple(mapping.get(x, x) for x in self.ends), self.over_in)  # type: ignore[arg-type]

    def render(self) -> str:
        return "C(" + ",".join(str(x) for x in self.ends) + ")"

    def as_dict(self) -> dict:
        return {"ends": list(self.ends), "sign": self.sign}

    @staticmethod
    def from_frame(ends: tuple[int, int, int, int], under_in: int, over_in: int) -> "Crossing":
        """Build from ccw `ends` given the slot indices where each strand enters.

        `under_in` and `over_in` must have different parity; the result is
        rotated so the under-in end sits at slot 0.
        """
        if (under_in - over_in) % 2 == 0:
            raise ValueError("under_in and over_in must lie on different strands")
        rot = under_in % 4
        rotated = tuple(ends[(rot + t) % 4] for t in range(4))
        return Crossing(rotated, (over_in - rot) % 4)  # type: ignore[arg-type]
