"""Modularity component analysis of uncentered data, with a centered PCA baseline."""

__version__ = "0.1.0"

from .components import (
    AssumptionReport,
    ComponentRecord,
    McaModel,
    Violation,
    check_assumptions,
    deflate,
    embed,
    fit,
    project_onto_component,
)
from .dpr1 import Dpr1Problem, Dpr1Spectrum, secular_value, solve_dpr1
from .errors import *  # noqa: F403
from .linalg import SvdFactors, apply_pinv_left, thin_svd
from .modularity import (
    ModularityEigenpairs,
    ModularityStats,
    apply_B,
    leading_eigenpairs,
    modularity_score,
    partition_by_sign,
    stats,
)
from .pca import PcaModel, pca_embed, pca_fit
