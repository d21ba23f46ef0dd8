"""Squarefree monomial ideals and their Stanley-Reisner complexes.

Only squarefree ideals are represented.  A quadratic monomial ideal with
higher powers can be polarized first; this package does not do that.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .simplicial import SimplicialComplex, VertexMask, bits, mask_of, minimalize


class IdealFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Ideal generated by the monomials ``x_g`` for ``g`` in ``generators``.

    The empty generator tuple is the zero ideal.
    """

    ground_size: int
    generators: tuple[VertexMask, ...]

    def __post_init__(self):
        full = (1 << self.ground_size) - 1
        for g in self.generators:
            if g == 0:
                raise ValueError("the unit ideal is not a supported squarefree ideal")
            if g & ~full:
                raise ValueError(f"generator {bits(g)} outside {self.ground_size} variables")
        if tuple(self.generators) != minimalize(self.generators):
            raise ValueError("generators must be a sorted antichain; use SquarefreeIdeal.of")

    @classmethod
    def of(cls, n: int, generators) -> "SquarefreeIdeal":
        """Build from masks or vertex iterables, minimalizing."""
        masks = [g if isinstance(g, int) else mask_of(g) for g in generators]
        return cls(n, minimalize(masks))

    @classmethod
    def variables(cls, n: int, vertices) -> "SquarefreeIdeal":
        return cls.of(n, [1 << v for v in vertices])

    @property
    def support(self) -> VertexMask:
        s = 0
        for g in self.generators:
            s |= g
        return s

    def contains_monomial(self, m: VertexMask) -> bool:
        return any(g & m == g for g in self.generators)

    def embed(self, n: int, offset: int = 0) -> "SquarefreeIdeal":
        """Same ideal in ``n`` variables, variable ``v`` renamed ``v + offset``."""
        if offset + self.ground_size > n:
            raise ValueError(f"cannot embed {self.ground_size} variables at offset {offset} into {n}")
        return SquarefreeIdeal(n, tuple(sorted(g << offset for g in self.generators)))

    def generator_lists(self) -> list[list[int]]:
        return [bits(g) for g in self.generators]

    def to_text(self) -> str:
        lines = [str(self.ground_size)]
        lines += [" ".join(map(str, gens)) for gens in self.generator_lists()]
        return "\n".join(lines) + "\n"


def stanley_reisner_complex(i: SquarefreeIdeal) -> SimplicialComplex:
    return SimplicialComplex(i.ground_size, i.generators)


def ideal_of_complex(c: SimplicialComplex) -> SquarefreeIdeal:
    return SquarefreeIdeal(c.ground_size, c.nonfaces)


def colon_by_monomial(i: SquarefreeIdeal, m: VertexMask) -> SquarefreeIdeal:
    """``(I : x_m)`` for squarefree ``I`` and ``m``.

    Raises ``ValueError`` when ``x_m`` lies in ``I`` (the colon is the unit ideal).
    """
    if m == 0:
        raise ValueError("colon by the empty monomial is not allowed")
    quotients = [g & ~m for g in i.generators]
    if 0 in quotients:
        raise ValueError(f"monomial {bits(m)} lies in the ideal; the colon is the unit ideal")
    return SquarefreeIdeal(i.ground_size, minimalize(quotients))


def ideal_sum(i: SquarefreeIdeal, j: SquarefreeIdeal) -> SquarefreeIdeal:
    if i.ground_size != j.ground_size:
        raise ValueError("ideals must live in the same ring; embed them first")
    return SquarefreeIdeal(i.ground_size, minimalize(i.generators + j.generators))


def supports_disjoint(i: SquarefreeIdeal, j: SquarefreeIdeal) -> bool:
    if i.ground_size != j.ground_size:
        raise ValueError("ideals must live in the same ring; embed them first")
    return i.support & j.support == 0


def parse_ideal(text: str) -> SquarefreeIdeal:
    """Parse the ideal text format: ``n`` then one generator per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise IdealFormatError("line 1: empty ideal file (expected the number of variables)")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise IdealFormatError(f"line {lineno}: expected the number of variables, got {head!r}") from None
    if n < 0:
        raise IdealFormatError(f"line {lineno}: number of variables must be nonnegative")
    gens = []
    for lineno, line in lines[1:]:
        try:
            vs = [int(tok) for tok in line.split()]
        except ValueError:
            raise IdealFormatError(f"line {lineno}: generator must be variable indices, got {line!r}") from None
        if not vs:
            raise IdealFormatError(f"line {lineno}: empty generator (the unit ideal) is not supported")
        for v in vs:
            if not 0 <= v < n:
                raise IdealFormatError(f"line {lineno}: variable {v} outside 0..{n - 1}")
        if len(set(vs)) != len(vs):
            raise IdealFormatError(
                f"line {lineno}: repeated variable; only squarefree generators are supported"
            )
        gens.append(mask_of(vs))
    return SquarefreeIdeal.of(n, gens)


def read_ideal(path) -> SquarefreeIdeal:
    return parse_ideal(Path(path).read_text())
