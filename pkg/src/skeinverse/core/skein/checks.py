"""skeinverse.core.skein.checks
===========================
Self-checks the invariants owe us: independence of the resolution order
(traversal context for type 1, resolution sites for type 2) and invariance
under random Reidemeister moves.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from ..diagram import LinkDiagram, MoveKind, TraversalContext, apply_move, available_moves, classify
from ..ring import RingElement, normalize
from ..util.random import make_rng, rng_choice
from .invariants import compute_invariant, invariant_b1, invariant_b1_writhe, invariant_b2

__all__ = [
    "OrderReport",
    "check_order_independence",
    "MoveCheck",
    "ReidemeisterReport",
    "check_reidemeister",
    "DEFAULT_CHECKED",
]

logger = logging.getLogger(__name__)

DEFAULT_CHECKED = ("b1", "b1w", "b2", "jones", "q")


# --------------------------------------------------------------------- #
# Resolution order
# --------------------------------------------------------------------- #
@dataclass(slots=True)
class OrderReport:
    invariant: str
    samples: int
    reference: str
    mismatches: list[str] = field(default_factory=list)
    sites: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "invariant": self.invariant,
            "samples": self.samples,
            "reference": self.reference,
            "sites": list(self.sites),
            "mismatches": list(self.mismatches),
            "passed": self.passed,
        }


def check_order_independence(D: LinkDiagram, samples: int = 20, seed: int = 0) -> list[OrderReport]:
    """Recompute B1 under random traversals and B2 under every first site.

    B2 is resolved once with each crossing forced as the first site (random
    sites below it) and then `samples` more times with every site random.
    Runs without the memo so every sample really walks its own recursion.
    """
    rnd = make_rng(seed)
    ref_b1 = invariant_b1(D, memo=None).value
    ref_b2 = invariant_b2(D, memo=None).value
    b1 = OrderReport("b1", samples, ref_b1.render())
    b2 = OrderReport("b2", samples + D.crossing_count, ref_b2.render())
    for _ in range(samples):
        ctx = TraversalContext.random(D, rnd)
        got = invariant_b1(D, ctx, memo=None).value
        if got != ref_b1:
            b1.mismatches.append(f"{ctx}: {got.render()}")
    for x in range(D.crossing_count):
        got = invariant_b2(D, rnd, memo=None, first=x).value
        b2.sites.append(x)
        if got != ref_b2:
            b2.mismatches.append(f"first={x}: {got.render()}")
    for _ in range(samples):
        got = invariant_b2(D, rnd, memo=None).value
        if got != ref_b2:
            b2.mismatches.append(got.render())
    logger.debug("order check c=%d: b1 %d, b2 %d mismatches", D.crossing_count, len(b1.mismatches), len(b2.mismatches))
    return [b1, b2]


# --------------------------------------------------------------------- #
# Reidemeister moves
# --------------------------------------------------------------------- #
@dataclass(frozen=True, slots=True)
class MoveCheck:
    move: str
    before: str
    after: str
    failed: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"move": self.move, "before": self.before, "after": self.after, "failed": list(self.failed)}


@dataclass(slots=True)
class ReidemeisterReport:
    code: str
    invariants: tuple[str, ...]
    checks: list[MoveCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(not c.failed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "code": self.code,
            "invariants": list(self.invariants),
            "trials": len(self.checks),
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def _writhe_pair_failures(before: LinkDiagram, after: LinkDiagram, kind: MoveKind) -> list[str]:
    """Labels for what broke: `b1w:F` if F moved, `b1w:f` if f is off its A-shift.

    f may only change by A^(w_after - w_before), and that shift is zero
    except under R1.
    """
    f0, F0 = invariant_b1_writhe(before)
    f1, F1 = invariant_b1_writhe(after)
    failed = []
    if F0.value != F1.value:
        failed.append("b1w:F")
    shift = classify(after).writhe - classify(before).writhe
    r1 = kind in (MoveKind.R1_PLUS, MoveKind.R1_MINUS)
    expected: RingElement = normalize(RingElement.gen("B1A", "A", shift) * f0.value)
    if (not r1 and shift != 0) or (r1 and abs(shift) != 1) or expected != f1.value:
        failed.append("b1w:f")
    return failed


def check_reidemeister(
    D: LinkDiagram,
    trials: int = 10,
    seed: int = 0,
    max_crossings: int = 8,
    invariants: Sequence[str] = DEFAULT_CHECKED,
) -> ReidemeisterReport:
    """Apply `trials` random moves in a chain, comparing invariants at each step."""
    rnd = make_rng(seed)
    report = ReidemeisterReport(D.render(), tuple(invariants))
    current = D
    values = {name: compute_invariant(name, current).value for name in invariants if name != "b1w"}
    for _ in range(trials):
        moves = available_moves(current, max_crossings=max_crossings)
        if not moves:
            break
        move = rng_choice(rnd, moves)
        nxt = apply_move(current, move)
        failed = []
        new_values = {}
        for name in invariants:
            if name == "b1w":
                failed.extend(_writhe_pair_failures(current, nxt, move.kind))
                continue
            new_values[name] = compute_invariant(name, nxt).value
            if new_values[name] != values[name]:
                failed.append(name)
        if failed:
            logger.debug("%s broke %s on %s", move.describe(), failed, current.render())
        report.checks.append(MoveCheck(move.describe(), current.render(), nxt.render(), tuple(failed)))
        current, values = nxt, new_values
    return report
