"""Covariance models for data observed on graph nodes.

The central model treats the covariance between node observations as a
Matérn correlation of latent inter-node distances, themselves derived from
estimated edge weights through the quasi-Euclidean graph metric.  The
package also ships autoregressive baselines, Bayesian samplers for the
Gaussian and Poisson-count versions of the model, chain diagnostics, and
experiment harnesses with a command-line front end.
"""

from .graph import (
    DEFAULT_EIG_CUTOFF,
    EdgeWeights,
    Graph,
    Laplacian,
    PseudoInversePower,
    build_graph,
    laplacian,
    lattice_graph,
    pinv_power,
)
from .metrics import (
    RESISTANCE,
    SHORTEST_PATH,
    DistanceMatrix,
    EuclideanCertificate,
    MetricTag,
    certify_euclidean,
    delta_m,
    delta_tag,
    hollow_transform,
    resistance,
    shortest_path,
)
from .covariance import (
    CovarianceMatrix,
    MaternSpec,
    RescaledRange,
    build_sigma,
    correlation_from_weights,
    matern_rho,
    rescale_range,
    to_correlation,
)
from .baselines import Car1Params, CarwParams, car1_sigma, carw_sigma
from . import errors

__version__ = "0.1.0"
