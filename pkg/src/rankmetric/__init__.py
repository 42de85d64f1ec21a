"""Rank-metric codes, Ferrers diagram rank-metric codes and their Singleton bounds."""
from ._kernels import BACKEND
from .codes import (
    HammingCode,
    RankMetricCode,
    classical_singleton_bound,
    correctable_errors,
    delete_coordinates,
    gabidulin_construct,
    gabidulin_example_code,
    is_linear,
    min_rank_distance,
    rank_singleton_bound,
)
from .echelon import (
    EchelonFerrersForm,
    IdentifyingVector,
    count_spanning_matrices,
    echelon_ferrers_form,
    extract_ferrers_matrix,
    identifying_vector,
    inject_ferrers_matrix,
)
from .fdcodes import (
    FerrersCode,
    ferrers_code_new,
    ferrers_dim_bound,
    ferrers_singleton_bound,
    puncture_code,
    rank_decomposition_check,
)
from .ferrers import FerrersDiagram, Partition, conjugate, enumerate_diagrams, ferrers_bound_exponent, v_count
from .gf import GF, FieldElement, FieldSpec, field_new
from .matfq import MatrixFq, RrefMatrix, expand_ext_vector, matrix, puncture, rank, rank_distance, rref
from .search import SearchProblem, max_code_exact, max_code_greedy

__version__ = "0.1.0"
