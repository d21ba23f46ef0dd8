"""Exact rank over the rationals and over prime fields.

Boundary maps of simplicial complexes are signed incidence matrices, so
everything here works on small integer matrices.  Characteristic 0 uses
fraction-free (Bareiss) elimination; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

DENSE_COL_LIMIT = 4096
MAX_PRIME = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``characteristic`` 0 means QQ, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise ValueError(f"field characteristic must be 0 or a prime, got {c}")
        if c >= MAX_PRIME:
            raise ValueError(f"prime characteristic must be < 2^31, got {c}")


QQ = FieldSpec(0)


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...] = field(default=())

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        seen = set()
        for r, c, _ in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            seen.add((r, c))

    @classmethod
    def from_dense(cls, rows: list[list[int]], ncols: int | None = None) -> "SparseMatrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = tuple(
            (r, c, v) for r, row in enumerate(rows) for c, v in enumerate(row) if v
        )
        return cls(nrows, ncols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for r, c, v in self.entries:
            if v:
                out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, tuple((c, r, v) for r, c, v in self.entries))


def rank(m: SparseMatrix, f: FieldSpec = QQ, dense_limit: int = DENSE_COL_LIMIT) -> int:
    """Rank of ``m`` over the field ``f``.

    Dense elimination is used up to ``dense_limit`` columns, sparse
    row elimination beyond that.
    """
    if m.rows == 0 or m.cols == 0 or not m.entries:
        return 0
    if m.cols <= dense_limit:
        rows = m.to_dense()
        if f.characteristic == 0:
            return bareiss_rank(rows)
        return dense_rank_mod_p(rows, f.characteristic)
    return sparse_rank(m.row_dicts(), f.characteristic)


def bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; mutates ``rows``."""
    a = [r for r in rows if any(r)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for k in range(r, nrows):
            if a[k][c]:
                piv = k
                # unit pivots keep the entries small
                if a[k][c] in (1, -1):
                    break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        p = prow[c]
        for k in range(r + 1, nrows):
            row = a[k]
            x = row[c]
            if x:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - x * prow[j]) // prev
                row[c] = 0
            elif p != prev:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (p * row[j]) // prev
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def dense_rank_mod_p(rows: list[list[int]], p: int) -> int:
    a = [[v % p for v in r] for r in rows]
    a = [r for r in a if any(r)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, nrows) if a[k][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        inv = pow(prow[c], p - 2, p)
        for j in range(c, ncols):
            prow[j] = prow[j] * inv % p
        for k in range(r + 1, nrows):
            row = a[k]
            x = row[c]
            if x:
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = (row[j] - x * prow[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def sparse_rank(rows: list[dict[int, int]], p: int = 0) -> int:
    """Row elimination on dict rows.

    Over QQ rows are combined fraction-free and divided by their content,
    which keeps coefficients bounded without leaving the integers.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: (v % p if p else v) for c, v in row.items()}
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                if p:
                    inv = pow(row[c], p - 2, p)
                    row = {j: v * inv % p for j, v in row.items()}
                else:
                    g = 0
                    for v in row.values():
                        g = gcd(g, v)
                    if g > 1:
                        row = {j: v // g for j, v in row.items()}
                pivots[c] = row
                break
            x = row[c]
            if p:
                for j, v in prow.items():
                    nv = (row.get(j, 0) - x * v) % p
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
            else:
                pc = prow[c]
                new = {j: pc * v for j, v in row.items()}
                for j, v in prow.items():
                    nv = new.get(j, 0) - x * v
                    if nv:
                        new[j] = nv
                    else:
                        new.pop(j, None)
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                row = new
    return len(pivots)
