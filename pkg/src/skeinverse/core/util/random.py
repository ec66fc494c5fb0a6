'''skeinverse.core.util.random
===========================
Seeded randomness for the whole package.

Random traversal contexts, random resolution sites, random rewrite orders,
random ring elements and random diagrams all draw from a `random.Random`
handed down by the caller, built by `make_rng`. Nothing here touches the
module-level generator, so `sv verify --seed N` repeats exactly.
'''

from __future__ import annotations
import random
from typing import Sequence, TypeVar

T = TypeVar("T")

__all__ = ["make_rng", "rng_bool", "rng_choice", "rng_shuffled", "rng_int", "DEFAULT_SEED"]

DEFAULT_SEED = 0


# ---------------------------------------------------------------------------#
# Public helpers
# ---------------------------------------------------------------------------#
def make_rng(seed: int | None = None) -> random.Random:
    '''Fresh generator; `None` means DEFAULT_SEED, never the wall clock.'''
    return random.Random(DEFAULT_SEED if seed is None else seed)


def rng_bool(rnd: "random.Random", p: float = 0.5) -> bool:
    '''Coin flip with heads probability `p`; p <= 0 and p >= 1 draw nothing.'''
    if p <= 0.0 or p >= 1.0:
        return p >= 1.0
    return rnd.random() < p


def rng_int(rnd: "random.Random", a: int, b: int) -> int:
    '''Uniform integer in the closed range [a, b].'''
    return rnd.randint(a, b)


def rng_choice(rnd: "random.Random", items: Sequence[T]) -> T:
    '''One element of a non-empty sequence.'''
    if not items:
        raise ValueError("rng_choice on an empty sequence")
    return items[rnd.randrange(len(items))]


def rng_shuffled(rnd: "random.Random", items: Sequence[T]) -> list[T]:
    '''Shuffled copy; the input is left alone.'''
    out = list(items)
    rnd.shuffle(out)
    return out
