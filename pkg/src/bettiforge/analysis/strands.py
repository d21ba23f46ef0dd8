"""Strands of a Betti table and the linear-variable extension check."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..betti.hochster import hochster_betti
from ..betti.table import BettiTable
from ..exactla import QQ, FieldSpec
from ..ideals import SquarefreeIdeal, ideal_sum


@dataclass(frozen=True)
class Strand:
    j: int
    present: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.present[0]

    @property
    def p(self) -> int:
        return self.present[-1]

    @property
    def gaps(self) -> tuple[int, ...]:
        have = set(self.present)
        return tuple(i for i in range(self.q, self.p + 1) if i not in have)

    @property
    def connected(self) -> bool:
        return len(self.present) == self.p - self.q + 1


@dataclass
class StrandReport:
    """Nonempty strands ``j >= 1`` of ``R/I``, keyed by ``j``."""

    strands: dict[int, Strand] = field(default_factory=dict)

    @property
    def connected(self) -> bool:
        return all(s.connected for s in self.strands.values())

    def disconnected(self) -> list[int]:
        return [j for j, s in sorted(self.strands.items()) if not s.connected]

    def to_json(self) -> dict:
        return {
            "strand_connected": self.connected,
            "strands": [
                {"j": s.j, "q": s.q, "p": s.p, "present": list(s.present), "gaps": list(s.gaps)}
                for _, s in sorted(self.strands.items())
            ],
        }


def _graded(b) -> dict[tuple[int, int], int]:
    return b.graded() if isinstance(b, BettiTable) else b


def strand_report(b) -> StrandReport:
    """Strands of a table (or a graded dict); the degree-0 row is left out."""
    rows: dict[int, set[int]] = {}
    for (i, j), v in _graded(b).items():
        if v and j - i >= 1:
            rows.setdefault(j - i, set()).add(i)
    return StrandReport({j: Strand(j, tuple(sorted(s))) for j, s in sorted(rows.items())})


@dataclass
class LinearStrandCheck:
    k: int
    observed: dict[int, tuple[int, ...]]
    predicted: dict[int, tuple[int, int]]
    quoted: dict[int, tuple[int, int]]

    @property
    def holds(self) -> bool:
        return self.observed == {j: tuple(range(lo, hi + 1)) for j, (lo, hi) in self.predicted.items()}

    @property
    def quoted_holds(self) -> bool:
        return self.observed == {j: tuple(range(lo, hi + 1)) for j, (lo, hi) in self.quoted.items()}


def check_linear_strand_extension(j_ideal: SquarefreeIdeal, k: int, f: FieldSpec = QQ) -> LinearStrandCheck:
    """Add ``k`` fresh variables as generators to ``j_ideal`` and compare strands.

    When the ``j``-strand of ``J`` is the interval ``[q, p]``, the ``j``-strand
    of the sum is ``[q, p + k]``.  ``quoted`` holds the narrower interval
    ``[q, p + min(k, q)]`` for comparison; it differs once ``k > q``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = j_ideal.ground_size
    total = n + k
    lin = SquarefreeIdeal.variables(total, range(n, total))
    base = strand_report(hochster_betti(j_ideal, f))
    summed = strand_report(hochster_betti(ideal_sum(j_ideal.embed(total), lin), f))
    predicted, quoted = {}, {}
    for j, s in base.strands.items():
        if s.connected:
            predicted[j] = (s.q, s.p + k)
            quoted[j] = (s.q, s.p + min(k, s.q))
    # strands of J that are already broken say nothing about the interval
    broken = {j for j, s in base.strands.items() if not s.connected}
    observed = {j: s.present for j, s in summed.strands.items() if j not in broken}
    return LinearStrandCheck(k, observed, predicted, quoted)
