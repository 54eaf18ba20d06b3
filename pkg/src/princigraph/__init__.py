"""Principal graph learning: explicit tree or sparse-graph skeletons for point clouds."""

from .centroids import update_centroids
from .datasets import (
    DATASET_NAMES,
    DEFAULT_FIT_PARAMS,
    DEFAULT_SIZES,
    gen_dataset,
    heat_kernel_features,
    maxabs_rescale,
    pca_reduce,
    standardize,
)
from .fitting import FitResult, fit, fit_landmarks, kmeans, majority_labels
from .grouping import (
    free_energy,
    hard_assignments,
    update_assignments,
    update_assignments_colstochastic,
)
from .l1_graph import LpProblem, build_lp, candidate_edges, complete_edges, solve_lp
from .model import (
    L1_GRAPH,
    SPANNING_TREE,
    STRUCTURES,
    FitParams,
    cost_matrix,
    grouping_cost,
    harmonic_point,
    l1_reconstruction,
    laplacian,
    objective,
    rge_penalty,
    squared_distances,
)
from .spanning_tree import kruskal_mst, validate_tree

__version__ = "0.1.0"

__all__ = [
    "DATASET_NAMES",
    "DEFAULT_FIT_PARAMS",
    "DEFAULT_SIZES",
    "FitParams",
    "FitResult",
    "L1_GRAPH",
    "LpProblem",
    "SPANNING_TREE",
    "STRUCTURES",
    "build_lp",
    "candidate_edges",
    "complete_edges",
    "cost_matrix",
    "fit",
    "fit_landmarks",
    "free_energy",
    "gen_dataset",
    "grouping_cost",
    "hard_assignments",
    "harmonic_point",
    "heat_kernel_features",
    "kmeans",
    "kruskal_mst",
    "l1_reconstruction",
    "laplacian",
    "majority_labels",
    "maxabs_rescale",
    "objective",
    "pca_reduce",
    "rge_penalty",
    "solve_lp",
    "squared_distances",
    "standardize",
    "update_assignments",
    "update_assignments_colstochastic",
    "update_centroids",
    "validate_tree",
]
