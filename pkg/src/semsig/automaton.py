"""Five-state DFA over the 13 configuration symbols.

States ``A``, ``B`` and ``C`` remember the slope of the last segment read
(zero, negative, positive); ``S`` is the start state and ``D`` the absorbing
dead state. A symbol may follow another only if it starts with the slope the
previous one ended with.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .encoder import SYMBOLS, TRIPLES


class State(str, Enum):
    S = "S"
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    def __str__(self):
        return self.value


START = State.S
DEAD = State.D
ACCEPTING = frozenset({State.A, State.B, State.C})

_SLOPE_STATE = {0: State.A, -1: State.B, 1: State.C}
_STATE_SLOPE = {v: k for k, v in _SLOPE_STATE.items()}

# transcribed row by row, columns are symbols 1..13
_TABLE_ROWS = {
    State.S: "B C C B C B C B A C B A A",
    State.A: "D D D D D D D D A C B D D",
    State.B: "B D D B C D D B D D D D A",
    State.C: "D C C D D B C D D D D A D",
    State.D: "D D D D D D D D D D D D D",
}

TRANSITIONS = {
    (q, sym): State(cell)
    for q, row in _TABLE_ROWS.items()
    for sym, cell in zip(SYMBOLS, row.split())
}


def derived_transitions():
    """Rebuild the transition map from the slope-continuity rule alone."""
    delta = {}
    for q in State:
        for sym in SYMBOLS:
            t = TRIPLES[sym]
            if q is DEAD or (q is not START and _STATE_SLOPE[q] != t.d_back):
                delta[q, sym] = DEAD
            else:
                delta[q, sym] = _SLOPE_STATE[t.d_fwd]
    return delta


def dfa_step(state, symbol):
    sym = int(symbol)
    if sym not in TRIPLES:
        raise ValueError(f"not a configuration symbol: {symbol!r}")
    return TRANSITIONS[State(state), sym]


@dataclass(frozen=True)
class AcceptanceResult:
    accepted: bool
    final_state: State
    trace: tuple
    rejection_index: Optional[int] = None


def dfa_accept(symbols):
    """Run the DFA from ``S`` and keep the state reached after every symbol."""
    state = START
    trace = []
    rejected_at = None
    for i, sym in enumerate(symbols):
        state = dfa_step(state, sym)
        if state is DEAD and rejected_at is None:
            rejected_at = i
        trace.append(state)
    return AcceptanceResult(
        accepted=bool(trace) and state in ACCEPTING,
        final_state=state,
        trace=tuple(trace),
        rejection_index=rejected_at,
    )


def compatible(prev, nxt):
    """True if ``nxt`` starts with the slope that ``prev`` ends with."""
    return TRIPLES[int(prev)].d_fwd == TRIPLES[int(nxt)].d_back
