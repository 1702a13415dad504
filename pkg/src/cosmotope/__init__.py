"""Ehrhart data of cosmological polytopes of multigraphs, computed exactly."""

from .hstar import (
    closed_form_k2n,
    closed_form_multicycle,
    closed_form_multitree,
    closed_form_theta,
    compute_hstar,
    hstar_acyclic,
    hstar_delcon,
    hstar_moebius,
    hstar_triangulation,
    hstar_tutte,
    volume,
)
from .multigraph import Multigraph, parse_graph
from .polynomials import BivarPolynomial, IntPolynomial
from .tutte import tutte_delcon, tutte_subset_expansion

__version__ = "0.1.0"
