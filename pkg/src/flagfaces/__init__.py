"""Exact face-number inequalities for flag simplicial complexes."""
from .complexes import (
    Complex,
    Graph,
    boundary_of_simplex,
    clique_fvector,
    fvector_of_complex,
    is_flag,
    minimal_nonfaces,
)
from .inequalities import (
    InequalityReport,
    alpha_sequence,
    check_inequalities,
    closed_form_small_n,
    homotopy_ranks,
    v_by_lemma,
    v_by_peeling,
    v_by_theorem,
)
from .kernels import BACKEND
from .series import TruncatedSeries, from_coeffs

__version__ = "0.1.0"
