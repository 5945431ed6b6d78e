"""circnet: circular planar electrical networks.

Boundary data (response matrices, effective resistances), the embedding of
resistance data into the totally non-negative Grassmannian Gr(n-1, 2n),
Kalmanson checks with a planar-electrical characterization, medial-graph
strand permutations, and topology reconstruction from resistances.
All arithmetic is exact (``fractions.Fraction``).
"""

from .errors import (
    CircnetError,
    DisconnectedNetwork,
    MissingRotation,
    NonzeroDiagonal,
    NotElectrical,
    NotEligible,
    NotInvolution,
    NotRealizable,
    NotSymmetric,
    ParseError,
    RankMismatch,
    RoundTripFailure,
    SingularSystem,
    SizeLimitExceeded,
    ValidationError,
    ZeroColumn,
)
from .formats import parse_matrix, parse_network, serialize_matrix, serialize_network
from .grassmann import (
    GrassmannPoint,
    OmegaMatrix,
    TnnVerdict,
    alternating_row_sum,
    is_tnn_point,
    omega_matrix,
    pluecker_coordinates,
    row_space_rank,
    second_differences,
)
from .kalmanson import (
    CharacterizationReport,
    characterize,
    is_circular_response_matrix,
    is_kalmanson,
    is_metric,
    split_decomposition,
)
from .matrix_tree import resistance_via_matrix_tree
from .medial import (
    MedialTrace,
    MinimalityReport,
    StrandPermutation,
    is_minimal,
    medial_trace,
    strand_permutation,
)
from .network import (
    CircularNetwork,
    Edge,
    boundary_currents,
    effective_resistance_matrix,
    harmonic_extension,
    network,
    resistance_from_response,
    response_matrix,
    series_reduce,
    star_triangle,
)
from .reconstruction import (
    ChordDiagram,
    RankPattern,
    Reconstruction,
    column_rank_pattern,
    network_from_tau,
    reconstruct_topology,
    tau_from_resistance,
)

__version__ = "0.1.0"
