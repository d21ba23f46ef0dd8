"""Subadditivity, strands, multigraded bounds and the verification harness."""

from .bounds import check_multigraded_bound, linear_and_beyond, max_multigraded
from .search import QUESTIONS, search_open_questions
from .strands import LinearStrandCheck, Strand, StrandReport, check_linear_strand_extension, strand_report
from .subadd import SubadditivityReport, check_subadditivity
from .verify import THEOREMS, VerifyReport, graph_betti, verify_theorem
