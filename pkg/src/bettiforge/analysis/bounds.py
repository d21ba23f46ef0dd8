"""Bounds on multigraded Betti numbers."""

from __future__ import annotations

from ..betti.table import BettiTable
from ..simplicial import popcount


def max_multigraded(b: BettiTable):
    """Largest ``beta_{i,a}`` over ``i >= 1`` and every ``(i, a)`` attaining it."""
    return b.max_multigraded(1)


def check_multigraded_bound(b: BettiTable, bound: int) -> bool:
    return max_multigraded(b)[0] <= bound


def linear_and_beyond(b: BettiTable) -> tuple[int, int]:
    """``(c, d)``: the largest ``beta_{i,a}``, ``i >= 1``, with ``|a| = i + 1`` and with ``|a| > i + 1``."""
    c = d = 0
    for (i, a), v in b.entries.items():
        if i < 1:
            continue
        if popcount(a) == i + 1:
            c = max(c, v)
        elif popcount(a) > i + 1:
            d = max(d, v)
    return c, d
