"""Exact cubical and categorical (co)homology for finite k-graphs."""
from .categorical import (ComposableTuple, cat_boundary, cat_homology, enumerate_tuples, initial_homotopy,
                          make_tuple, standard_homotopy, tuple_boundary)
from .chain_maps import (cubulate, rectangular_chain, triangulate, verify_chain_map_identities,
                         verify_naturality, xi, xi_hat)
from .chains import Chain, Coefficients, Z
from .cocycles import CategoricalCochain, cat_to_cub, cub_to_cat, evaluator, round_trip
from .cubical import (CochainTable, boundary_matrix, coboundary, cubical_cohomology, cubical_homology,
                      is_cocycle, uct_check)
from .kgraph import (Edge, KGraph, KGraphError, KGraphMorphism, Morphism, Square, fig8, omega,
                     single_loop, torus2, validate)
from .linalg import AbelianGroup, SparseIntMatrix, snf

__version__ = "0.1.0"
