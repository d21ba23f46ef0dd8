"""Multigraded Betti tables of cyclic modules ``R/I`` with squarefree degrees."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from ..simplicial import VertexMask, bits, popcount


@dataclass
class BettiTable:
    """Nonzero ``beta_{i,a}`` keyed by ``(i, mask)``; absence means zero."""

    ground_size: int
    entries: dict[tuple[int, VertexMask], int] = field(default_factory=dict)
    field_char: int = 0

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}
        for (i, a), v in self.entries.items():
            if i < 0 or v < 0:
                raise ValueError(f"invalid Betti entry ({i}, {bits(a)}) = {v}")

    @classmethod
    def unit(cls, n: int, field_char: int = 0) -> "BettiTable":
        """Table of ``R/0 = R``: only ``beta_{0,0} = 1``."""
        return cls(n, {(0, 0): 1}, field_char)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.ground_size == other.ground_size and self.entries == other.entries

    def get(self, i: int, a: VertexMask) -> int:
        return self.entries.get((i, a), 0)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), v in self.entries.items():
            out[(i, popcount(a))] += v
        return dict(sorted(out.items()))

    def beta(self, i: int, j: int) -> int:
        return sum(v for (k, a), v in self.entries.items() if k == i and popcount(a) == j)

    def pdim(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def t(self, i: int) -> int | None:
        """Largest total degree in homological degree ``i``, or ``None`` if the row is empty."""
        return max((popcount(a) for k, a in self.entries if k == i), default=None)

    def shifts(self) -> list[int | None]:
        return [self.t(i) for i in range(self.pdim() + 1)]

    def reg(self) -> int:
        return max((popcount(a) - i for i, a in self.entries), default=0)

    def max_multigraded(self, min_i: int = 1) -> tuple[int, list[tuple[int, VertexMask]]]:
        """Largest ``beta_{i,a}`` with ``i >= min_i`` and every ``(i, a)`` attaining it."""
        vals = {k: v for k, v in self.entries.items() if k[0] >= min_i}
        if not vals:
            return 0, []
        top = max(vals.values())
        return top, sorted(k for k, v in vals.items() if v == top)

    def shifted(self, di: int, da: VertexMask, n: int | None = None) -> "BettiTable":
        """``beta_{i+di, a|da}``: the table of the module twisted by ``da`` in degree ``di``."""
        out = {}
        for (i, a), v in self.entries.items():
            if a & da:
                raise ValueError("shift overlaps the support of an entry")
            out[(i + di, a | da)] = v
        return BettiTable(self.ground_size if n is None else n, out, self.field_char)

    def __add__(self, other: "BettiTable") -> "BettiTable":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return BettiTable(max(self.ground_size, other.ground_size), out, self.field_char)

    def sorted_entries(self) -> list[tuple[int, VertexMask, int]]:
        return sorted(((i, a, v) for (i, a), v in self.entries.items()), key=lambda e: (e[0], popcount(e[1]), e[1]))


def graded_shifts(graded: dict[tuple[int, int], int]) -> dict[int, int]:
    """``t_i`` from a graded table."""
    out: dict[int, int] = {}
    for (i, j), v in graded.items():
        if v and j > out.get(i, -1):
            out[i] = j
    return out


def diagram(graded: dict[tuple[int, int], int]) -> str:
    """Betti diagram: columns are ``i``, rows are ``j - i``, ``.`` for zero."""
    if not graded:
        return ""
    pd = max(i for i, _ in graded)
    rg = max(j - i for i, j in graded)
    cells = [[str(graded.get((i, i + r), 0) or ".") for i in range(pd + 1)] for r in range(rg + 1)]
    width = max(len(c) for row in cells for c in row)
    width = max(width, len(str(pd)))
    label_w = len(str(rg)) + 1
    lines = [" " * (label_w + 1) + " ".join(f"{i:>{width}}" for i in range(pd + 1))]
    for r, row in enumerate(cells):
        lines.append(f"{str(r) + ':':>{label_w}} " + " ".join(f"{c:>{width}}" for c in row))
    return "\n".join(lines)
