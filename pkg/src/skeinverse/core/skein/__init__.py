"""Skein-recursive invariants, their cache, and their self-checks."""

from .checks import (
    DEFAULT_CHECKED,
    MoveCheck,
    OrderReport,
    ReidemeisterReport,
    check_order_independence,
    check_reidemeister,
)
from .invariants import (
    INVARIANTS,
    SHARED_MEMO,
    InvariantValue,
    compute_invariant,
    invariant_b1,
    invariant_b1_writhe,
    invariant_b2,
    invariant_b2_writhe,
    jones,
    q_polynomial,
)
from .memo import DEFAULT_SETTINGS, SkeinMemo, SkeinSettings

__all__ = [
    "DEFAULT_CHECKED", "MoveCheck", "OrderReport", "ReidemeisterReport", "check_order_independence",
    "check_reidemeister", "INVARIANTS", "SHARED_MEMO", "InvariantValue", "compute_invariant",
    "invariant_b1", "invariant_b1_writhe", "invariant_b2", "invariant_b2_writhe", "jones",
    "q_polynomial", "DEFAULT_SETTINGS", "SkeinMemo", "SkeinSettings",
]
