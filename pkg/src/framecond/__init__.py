"""framecond: optimal rescaling of frames and graph Laplacians.

Rescale the vectors of a finite frame so the frame operator is as well
conditioned as possible (operator-norm / condition-number / spectral-gap
/ Frobenius objectives), and apply the same machinery to reweight the
edges of a connected graph so its Laplacian is optimally conditioned.
"""

from .conditioners import (
    SolverOptions,
    SolverReport,
    remark2_rescale,
    solve_qp4,
    solve_sdp1,
    solve_sdp2,
    solve_sdp3,
)
from .estimators import FrameScaler, GraphReweighter
from .exceptions import (
    DegenerateSpectrumError,
    DisconnectedGraphError,
    FrameCondError,
    InfeasibleProblemError,
    NotAFrameError,
    NotPositiveSemidefiniteError,
    NotSymmetricError,
    ParseError,
    SolverError,
)
from .frames import (
    EpsilonTightReport,
    Frame,
    SpectralSummary,
    epsilon_tight_diagnostics,
    find_perturbation_candidate,
    frame_operator,
    is_scalable,
    perturbation_rescale,
    scaled_frame_operator,
    summarize,
)
from .graphs import (
    ExperimentReport,
    GraphConditionReport,
    ResistanceSummary,
    TrialRecord,
    WeightedGraph,
    barbell_graph,
    conjecture_experiment,
    effective_resistance,
    graph_condition,
    graph_gap,
    incidence_matrix,
    laplacian,
    projected_laplacian,
    resistance_summary,
)
from .nnls import nnls
from .sdp import LMISolution, solve_lmi
from .spectral import (
    EigenDecomposition,
    distance_to_identity,
    extended_condition_number,
    min_eigengap,
    sym_eig,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # frames
    "Frame",
    "SpectralSummary",
    "EpsilonTightReport",
    "frame_operator",
    "scaled_frame_operator",
    "summarize",
    "is_scalable",
    "epsilon_tight_diagnostics",
    "find_perturbation_candidate",
    "perturbation_rescale",
    # conditioners
    "SolverOptions",
    "SolverReport",
    "solve_sdp1",
    "solve_sdp2",
    "solve_sdp3",
    "solve_qp4",
    "remark2_rescale",
    # engines
    "solve_lmi",
    "LMISolution",
    "nnls",
    # spectral
    "EigenDecomposition",
    "sym_eig",
    "extended_condition_number",
    "distance_to_identity",
    "min_eigengap",
    # graphs
    "WeightedGraph",
    "GraphConditionReport",
    "ResistanceSummary",
    "TrialRecord",
    "ExperimentReport",
    "incidence_matrix",
    "laplacian",
    "projected_laplacian",
    "graph_condition",
    "graph_gap",
    "effective_resistance",
    "resistance_summary",
    "conjecture_experiment",
    "barbell_graph",
    # estimators
    "FrameScaler",
    "GraphReweighter",
    # exceptions
    "FrameCondError",
    "NotSymmetricError",
    "NotPositiveSemidefiniteError",
    "NotAFrameError",
    "DegenerateSpectrumError",
    "DisconnectedGraphError",
    "InfeasibleProblemError",
    "SolverError",
    "ParseError",
]
