"""Exact resolving and k-resolving sets in grid graphs."""

from .errors import (DegeneratePairError, DomainError, GridMismatchError, GridResError,
                     InvalidDimsError, NonexistentError, ParseError, ResourceLimitError,
                     UnsupportedRankError)
from .grid_core import (Box, GridDims, Quadrant, RegionLabel, VertexSet, corners, degree,
                        distance, face_count, face_set, is_corner, make_grid, parse_grid,
                        projection, region_of, shortest_path_box)
from .pair_resolvers import (PairResolverTable, anchor_equivalent, resolver_set, resolver_table,
                             resolves, shortest_path_resolver_count, single_axis_nonresolvers)
from .verifier import (VerifyReport, Witness, existence_max_k, is_k_resolving, region_witness,
                       resolving_strength)
from .bounds import (DimPrediction, Regime, Status, alpha_M, alpha_m, conjecture_value,
                     face_resolver_lower_bound, metric_dim_value, predict_dim)
from .constructions import (Certificate, corner_basis, even_k_construction, face_construction,
                            four_point_set, frame_family, odd_k_construction)
from .exact_solver import (SolveOptions, SolveResult, SolveStatus, greedy_upper_bound,
                           min_k_resolving, oracle_min_k_resolving)

__version__ = "0.1.0"
