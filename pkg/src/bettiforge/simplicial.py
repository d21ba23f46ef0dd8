"""Simplicial complexes presented by their minimal non-faces.

Vertex sets are int bitmasks over ``{0, ..., n-1}``.  A set ``F`` is a face
iff no minimal non-face is contained in it.  Homology is always the reduced
homology, with the void complex (non-face ``0``) having none at all and the
irrelevant complex ``{emptyset}`` having ``H~_{-1} = k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactla import QQ, FieldSpec, SparseMatrix, rank

VertexMask = int


def bits(mask: VertexMask) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(vertices) -> VertexMask:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: VertexMask) -> int:
    return bin(mask).count("1")


def minimalize(masks) -> tuple[VertexMask, ...]:
    """Minimal elements under inclusion, sorted by bitmask value."""
    uniq = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def compress(mask: VertexMask, w: VertexMask) -> VertexMask:
    """Relabel the bits of ``mask`` (a subset of ``w``) to ``0..|w|-1``."""
    out = 0
    pos = 0
    i = 0
    while w:
        if w & 1:
            if (mask >> i) & 1:
                out |= 1 << pos
            pos += 1
        w >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    ground_size: int
    nonfaces: tuple[VertexMask, ...]

    def __post_init__(self):
        full = (1 << self.ground_size) - 1
        for g in self.nonfaces:
            if g & ~full:
                raise ValueError(f"non-face {bits(g)} outside ground set of size {self.ground_size}")
        if tuple(self.nonfaces) != minimalize(self.nonfaces):
            raise ValueError("non-face generators must be a sorted antichain")

    @classmethod
    def from_nonfaces(cls, n: int, nonfaces) -> "SimplicialComplex":
        return cls(n, minimalize(nonfaces))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @property
    def is_void(self) -> bool:
        return 0 in self.nonfaces

    def is_face(self, f: VertexMask) -> bool:
        return not any(g & f == g for g in self.nonfaces)


def restrict(c: SimplicialComplex, w: VertexMask) -> SimplicialComplex:
    """Induced subcomplex on ``w``, relabelled to ``0..|w|-1``."""
    gens = [compress(g, w) for g in c.nonfaces if g & w == g]
    return SimplicialComplex(popcount(w), tuple(sorted(gens)))


@lru_cache(maxsize=1 << 16)
def _faces_by_size(n: int, nonfaces: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    if 0 in nonfaces:
        return tuple(() for _ in range(n + 2))
    by_size: list[list[int]] = [[] for _ in range(n + 2)]
    # nonfaces containing vertex v, tested only against faces built from lower vertices
    touching = [[g for g in nonfaces if g >> v & 1] for v in range(n)]
    stack = [(0, 0, 0)]  # (face, size, next vertex)
    while stack:
        f, size, start = stack.pop()
        by_size[size].append(f)
        for v in range(start, n):
            g = f | (1 << v)
            if all(h & g != h for h in touching[v]):
                stack.append((g, size + 1, v + 1))
    return tuple(tuple(sorted(x)) for x in by_size)


def faces_of_dim(c: SimplicialComplex, k: int) -> list[VertexMask]:
    """All ``k``-faces (``k+1`` vertices) in ascending bitmask order."""
    if k < -1 or k >= c.ground_size:
        raise ValueError(f"dimension {k} out of range for ground set of size {c.ground_size}")
    return list(_faces_by_size(c.ground_size, c.nonfaces)[k + 1])


def _boundary(rows_faces, cols_faces) -> SparseMatrix:
    index = {f: r for r, f in enumerate(rows_faces)}
    entries = []
    for col, f in enumerate(cols_faces):
        sign = 1
        for v in bits(f):
            entries.append((index[f & ~(1 << v)], col, sign))
            sign = -sign
    return SparseMatrix(len(rows_faces), len(cols_faces), tuple(entries))


def boundary_matrix(c: SimplicialComplex, k: int) -> SparseMatrix:
    """Reduced boundary map from k-chains to (k-1)-chains.

    Rows are the (k-1)-faces, columns the k-faces; for ``k = 0`` the single
    row is the empty face.
    """
    if k < 0 or k >= c.ground_size:
        raise ValueError(f"boundary dimension {k} out of range")
    faces = _faces_by_size(c.ground_size, c.nonfaces)
    return _boundary(faces[k], faces[k + 1])


def reduced_homology_dims(c: SimplicialComplex, f: FieldSpec = QQ) -> list[int]:
    """``dim H~_k`` for ``k = -1, ..., n-1`` (index 0 holds ``k = -1``)."""
    return list(homology_from_nonfaces(c.ground_size, c.nonfaces, f.characteristic))


@lru_cache(maxsize=1 << 18)
def homology_from_nonfaces(n: int, nonfaces: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Cached reduced homology dims for a sorted antichain of non-faces on ``n`` vertices."""
    faces = _faces_by_size(n, nonfaces)
    counts = [len(faces[s]) for s in range(n + 1)]
    if counts[0] == 0:
        return (0,) * (n + 1)
    field = FieldSpec(p)
    # ranks[s] = rank of the map from (s-vertex chains) to (s-1)-vertex chains
    ranks = [0] * (n + 2)
    for s in range(1, n + 1):
        if counts[s] == 0:
            break
        ranks[s] = rank(_boundary(faces[s - 1], faces[s]), field)
    return tuple(counts[s] - ranks[s] - ranks[s + 1] for s in range(n + 1))
