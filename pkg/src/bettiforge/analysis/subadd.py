"""Subadditivity of maximal shifts."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..betti.table import BettiTable


@dataclass
class SubadditivityReport:
    violations: list[tuple[int, int, int, int, int]] = field(default_factory=list)
    shifts: list[int | None] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "t": self.shifts,
            "violations": [
                {"a": a, "b": b, "t_a": ta, "t_b": tb, "t_a_plus_b": tab} for a, b, ta, tb, tab in self.violations
            ],
        }


def check_subadditivity(b: BettiTable, pairs=None) -> SubadditivityReport:
    """Test ``t_{a+b} <= t_a + t_b`` for ``1 <= a <= b`` and ``a + b <= pdim``.

    ``pairs`` restricts the pairs tested; rows with no entries are skipped.
    """
    t = b.shifts()
    pd = len(t) - 1
    if pairs is None:
        pairs = [(a, c) for a in range(1, pd + 1) for c in range(a, pd + 1 - a)]
    out = []
    for a, c in pairs:
        if a + c > pd:
            continue
        ta, tc, tac = t[a], t[c], t[a + c]
        if ta is None or tc is None or tac is None:
            continue
        if tac > ta + tc:
            out.append((a, c, ta, tc, tac))
    return SubadditivityReport(out, t)
