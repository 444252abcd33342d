"""Ready-made instances: the two-toss coin game."""

from __future__ import annotations

from .measure import MeasureSpace
from .numeric import RatLike, as_rat
from .process import Filtration, ProcessTable, natural_filtration

COIN_OUTCOMES = ("HH", "HT", "TH", "TT")
COIN_WALK = [[0, 0, 0, 0], [1, 1, -1, -1], [2, 0, 0, -2]]


def coin_space(p: RatLike) -> MeasureSpace:
    """Two independent tosses landing heads with probability ``p``."""
    p = as_rat(p)
    q = 1 - p
    if not 0 <= p <= 1:
        raise ValueError(f"heads probability {p} outside [0, 1]")
    return MeasureSpace([p * p, p * q, q * p, q * q], COIN_OUTCOMES)


def coin_walk(p: RatLike = "1/2") -> tuple[MeasureSpace, Filtration, ProcessTable]:
    """Fortune after each toss when heads wins 1 and tails loses 1.

    Returns the space, the natural filtration of the walk, and the walk.
    """
    x = ProcessTable(COIN_WALK)
    return coin_space(p), natural_filtration(x), x
