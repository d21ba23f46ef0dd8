"""Exact Betti numbers of squarefree monomial ideals, with checks for edge ideals."""

from .betti import BettiTable, hochster_betti, koszul_oracle_betti
from .exactla import QQ, FieldSpec
from .graphs import Graph, edge_ideal
from .ideals import SquarefreeIdeal, parse_ideal

__version__ = "0.1.0"
