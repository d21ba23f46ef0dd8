"""Betti tables of ``R/I``: the Hochster engine, the Koszul oracle and combination formulas."""

from .formulas import (
    cone_betti,
    cone_formula,
    disjoint_sum_betti,
    join_betti,
    join_formula,
    mapping_cone_betti,
    star_along,
)
from .hochster import MAX_HOCHSTER_N, SizeGuardError, default_jobs, hochster_betti
from .koszul import MAX_ORACLE_N, koszul_betti_at, koszul_oracle_betti
from .table import BettiTable, diagram, graded_shifts
