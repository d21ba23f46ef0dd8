"""Betti numbers of ``R/I`` from Hochster's formula.

For a squarefree ideal ``I`` with Stanley-Reisner complex ``D``,
``beta_{i,W}(R/I) = dim H~_{|W|-i-1}(D[W])`` for every vertex set ``W``.
Each ``W`` is an independent unit of work; the sweep merges the results.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from ..exactla import QQ, FieldSpec
from ..ideals import SquarefreeIdeal
from ..simplicial import homology_from_nonfaces, compress, popcount
from .table import BettiTable

MAX_HOCHSTER_N = 16


class SizeGuardError(ValueError):
    pass


def _mask_betti(gens: tuple[int, ...], w: int, p: int, prune_cones: bool) -> list[tuple[int, int]]:
    """Nonzero ``(i, beta_{i,w})`` for one vertex set ``w``."""
    inside = [g for g in gens if g & w == g]
    if prune_cones and w:
        cover = 0
        for g in inside:
            cover |= g
        # a vertex of w in no non-face inside w is a cone point: D[w] is acyclic
        if w & ~cover:
            return []
    k = popcount(w)
    rel = tuple(sorted(compress(g, w) for g in inside))
    dims = homology_from_nonfaces(k, rel, p)
    # dims[s] = dim H~_{s-1}; beta_{i,w} = dim H~_{k-i-1} = dims[k-i]
    return [(k - s, d) for s, d in enumerate(dims) if d]


def _sweep(gens, p, prune_cones, masks):
    out = {}
    for w in masks:
        for i, d in _mask_betti(gens, w, p, prune_cones):
            out[(i, w)] = d
    return out


def hochster_betti(
    ideal: SquarefreeIdeal,
    f: FieldSpec = QQ,
    *,
    force: bool = False,
    prune_cones: bool = True,
    jobs: int = 1,
) -> BettiTable:
    """Multigraded Betti table of ``R/ideal`` over ``f``.

    ``prune_cones`` skips vertex sets whose induced complex is a cone; the
    result is identical either way.  Ground sets above 16 variables need
    ``force=True``.
    """
    n = ideal.ground_size
    if n > MAX_HOCHSTER_N and not force:
        raise SizeGuardError(
            f"{n} variables exceeds the limit of {MAX_HOCHSTER_N}; pass --force to run anyway"
        )
    gens = ideal.generators
    p = f.characteristic
    masks = range(1 << n)
    if jobs > 1 and n >= 10:
        chunks = [range(k, 1 << n, jobs) for k in range(jobs)]
        entries: dict = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_sweep, [gens] * jobs, [p] * jobs, [prune_cones] * jobs, chunks):
                entries.update(part)
    else:
        entries = _sweep(gens, p, prune_cones, masks)
    return BettiTable(n, entries, p)


def default_jobs() -> int:
    env = os.environ.get("BETTIFORGE_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1
