"""alpha-spectral radius of general hypergraphs.

Build hypergraphs (directly or from named families), compute the largest
eigenvalue of ``A_alpha = alpha*D + (1-alpha)*A``, rewrite them with
grafting operations, enumerate small classes up to isomorphism and check
extremal orderings numerically.
"""

from .errors import *  # noqa: F401,F403
from .hypergraph import Hypergraph, validate
from .canonical import automorphism_orbits, canonical_code, canonical_form, canonical_labelling
from .spectral import (
    SpectralResult, adjacency_matrix, alpha_matrix, closed_form_rho, degree_matrix, laplacian, rho,
    row_sum_matrix, signless_laplacian, spectral_radius,
)
from .families import ExtremalQuery, FamilySpec, generate, known_extremal
from .enumeration import EnumQuery, enumerate_class

__version__ = "0.1.0"
