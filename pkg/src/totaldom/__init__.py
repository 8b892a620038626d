"""Exact total domination polynomials of graphs.

Count total dominating sets by size, build D_t(G, x) with exact integer
coefficients, compare against closed forms, locate its roots, and check the
known theorems and conjectures about them instance by instance.
"""

from .closed_forms import (
    dt_book,
    dt_book_published,
    dt_complete,
    dt_complete_bipartite,
    dt_corona_empty,
    dt_empty_corona,
    dt_friendship,
    dt_k1_corona,
)
from .enumeration import (
    CountTable,
    count_total_dominating_sets,
    total_domination_number,
    total_domination_polynomial,
    total_domination_polynomial_ie,
)
from .errors import InputError, ResourceError
from .graph import Graph
from .polynomial import Polynomial, binomial_shift, is_unimodal
from .report import CheckReport
from .roots import RootSet, count_real_roots, disc_bound_radius, find_roots, integer_roots

__version__ = "0.1.0"
