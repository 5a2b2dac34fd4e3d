"""Ordered Ramsey and Turán numbers of alternating paths.

Constructive deletion finders with checkable certificates, extremal
constructions, closed-form bounds and exhaustive search for small cases.
"""
from ._accel import JIT_ENABLED, backend_name
from .cnf import CNF, decode_cnf_model, encode_cnf, parse_model
from .containment import contains_path, embed_generic, find_monochromatic, find_path, iter_copies
from .core import (Color, Family, OrderedColoring, OrderedGraph, PathCertificate, PathSpec, edge_id,
                   is_valid_certificate, path_edges, path_traversal, reverse, swap_colors, validate_certificate)
from .deletion import DeletionTrace, Step
from .errors import (EncodingBug, HostTooSmall, IncompleteModel, InvalidCertificate, InvalidSpec,
                     InvariantViolation, NotBipartite, OrderedPathsError, ParseError, ResourceLimit,
                     SizeLimitExceeded, TooSparse, WindowMiss)
from .ramsey import (RamseyConfig, step_coverage, e_AB, find_mono_ap, find_mono_other, grey_edges_halves,
                     grey_edges_thm1, ramsey_upper_bound_ap, ramsey_upper_bound_other, removed_bound_thm1,
                     ap_config)
from .search import (RamseySearchResult, RamseyValue, TuranSearchResult, compute_ramsey_exact,
                     search_bipartite_turan_max, search_ramsey_witness, search_turan_max)
from .turan import (bipartite_grey, bipartite_turan_number, extremal_band, extremal_bipartite, extremal_star,
                    find_ap_in_dense, find_path_bipartite, grey_edges_turan, turan_log_bound,
                    turan_log_bound_power_of_two, turan_number_ap, turan_recursion_tree)

__version__ = "0.1.0"
