"""Naive Koszul-complex computation of ``Tor_i(R/I, k)_a``, kept independent.

``beta_{i,a}(R/I)`` is the ``i``-th homology of the Koszul complex on all
variables tensored with ``R/I``, in multidegree ``a``.  In that degree the
chain group ``K_i`` has basis ``e_S (x) x^{a - e_S}`` for ``|S| = i``,
``S <= supp(a)`` and ``x^{a - e_S}`` a standard monomial of ``R/I``.
Everything is dense and uses its own rational elimination; it shares no code
with the simplicial path.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from ..exactla import QQ, FieldSpec
from ..ideals import SquarefreeIdeal
from .table import BettiTable

MAX_ORACLE_N = 6


def _rank(rows: list[list[int]], p: int) -> int:
    if p:
        m = [[v % p for v in r] for r in rows]
    else:
        m = [[Fraction(v) for v in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        piv = next((k for k in range(r, nr) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p) if p else 1 / m[r][c]
        for k in range(nr):
            if k != r and m[k][c]:
                fct = m[k][c] * inv
                m[k] = [(x - fct * y) % p if p else x - fct * y for x, y in zip(m[k], m[r])]
        r += 1
    return r


def _in_ideal(gens: tuple[int, ...], expo: tuple[int, ...]) -> bool:
    support = 0
    for v, e in enumerate(expo):
        if e:
            support |= 1 << v
    return any(g & support == g for g in gens)


def _basis(gens, a: tuple[int, ...], i: int) -> list[tuple[int, ...]]:
    """Subsets ``S`` (as sorted tuples) indexing the basis of ``K_i`` in degree ``a``."""
    supp = [v for v, e in enumerate(a) if e]
    out = []
    for s in combinations(supp, i):
        rest = list(a)
        for v in s:
            rest[v] -= 1
        if not _in_ideal(gens, tuple(rest)):
            out.append(s)
    return out


def _differential(gens, a, src: list[tuple[int, ...]], dst: list[tuple[int, ...]]) -> list[list[int]]:
    """Matrix of ``d(e_S (x) m) = sum_k (-1)^k e_{S - s_k} (x) x_{s_k} m`` (rows index ``dst``)."""
    index = {s: r for r, s in enumerate(dst)}
    mat = [[0] * len(src) for _ in dst]
    for col, s in enumerate(src):
        for k, v in enumerate(s):
            t = s[:k] + s[k + 1:]
            # x_v * m lands in the target degree; it is zero in R/I exactly when t is not a basis element
            r = index.get(t)
            if r is not None:
                mat[r][col] += -1 if k % 2 else 1
    return mat


def koszul_betti_at(ideal: SquarefreeIdeal, a: tuple[int, ...], f: FieldSpec = QQ) -> dict[int, int]:
    gens = ideal.generators
    n = ideal.ground_size
    p = f.characteristic
    bases = [_basis(gens, a, i) for i in range(n + 2)]
    ranks = [0] * (n + 3)
    for i in range(1, n + 1):
        if bases[i] and bases[i - 1]:
            ranks[i] = _rank(_differential(gens, a, bases[i], bases[i - 1]), p)
    out = {}
    for i in range(n + 1):
        h = len(bases[i]) - ranks[i] - ranks[i + 1]
        if h:
            out[i] = h
    return out


def koszul_oracle_betti(
    ideal: SquarefreeIdeal, f: FieldSpec = QQ, max_n: int = MAX_ORACLE_N, max_exponent: int = 1
) -> BettiTable:
    """Betti table of ``R/ideal`` from Koszul homology, degree by degree.

    ``max_exponent > 1`` also visits non-squarefree degrees; any nonzero value
    there raises, since the table only holds squarefree degrees.
    """
    n = ideal.ground_size
    if n > max_n:
        raise ValueError(f"Koszul oracle is capped at {max_n} variables, got {n}")
    entries = {}
    for a in product(range(max_exponent + 1), repeat=n):
        vals = koszul_betti_at(ideal, a, f)
        if not vals:
            continue
        if any(e > 1 for e in a):
            raise AssertionError(f"nonzero Koszul homology in non-squarefree degree {a}")
        mask = sum(1 << v for v, e in enumerate(a) if e)
        for i, h in vals.items():
            entries[(i, mask)] = h
    return BettiTable(n, entries, f.characteristic)
