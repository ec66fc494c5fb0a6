"""Ring-free reference computations used to cross-check the skein invariants."""

from .bracket import BRACKET_CAP, BracketState, bracket_state_sum, jones_from_bracket
from .qpoly import Q_CAP, q_oracle

__all__ = ["BRACKET_CAP", "BracketState", "bracket_state_sum", "jones_from_bracket", "Q_CAP", "q_oracle"]
