"""Autoregressive covariance constructions used as comparison baselines.

Two variants: the first-order model driven by the binary adjacency matrix
alone, and the weighted variant whose precision uses a full edge-weight
matrix.  Both produce heterogeneous diagonals; comparisons against the
latent-distance model convert through ``to_correlation`` for fairness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_solve

import numpy.linalg as npl

from .covariance import CovarianceMatrix, cholesky_or_raise
from .errors import DomainError
from .graph import EdgeWeights, Graph

__all__ = ["Car1Params", "CarwParams", "car1_sigma", "carw_sigma"]


@dataclass
class Car1Params:
    """Scale, spatial dependence, and binary adjacency for the first-order model.

    The adjacency is spectrally scaled internally (divided by its largest
    eigenvalue) so that every ``kappa`` in (-1, 1) yields a valid
    covariance; the raw adjacency with ``|kappa| < 1`` does not guarantee
    positive definiteness.
    """

    sigma2: float
    kappa: float
    adjacency: np.ndarray

    def __post_init__(self):
        if self.sigma2 <= 0:
            raise DomainError(f"sigma2 must be positive, got {self.sigma2}")
        if not -1.0 < self.kappa < 1.0:
            raise DomainError(f"kappa must lie in (-1, 1), got {self.kappa}")
        a = np.asarray(self.adjacency, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError("adjacency must be square")
        if not np.array_equal(a, a.T):
            raise DomainError("adjacency must be symmetric")
        if np.any(np.diag(a) != 0.0) or not np.all(np.isin(a, (0.0, 1.0))):
            raise DomainError("adjacency must be binary with a zero diagonal")
        self.adjacency = a

    @classmethod
    def from_graph(cls, graph: Graph, sigma2: float, kappa: float) -> "Car1Params":
        return cls(sigma2=sigma2, kappa=kappa, adjacency=graph.adjacency_matrix())


@dataclass
class CarwParams:
    """Scale, spatial dependence, and edge weights for the weighted variant."""

    sigma2: float
    kappa: float
    weights: EdgeWeights

    def __post_init__(self):
        if self.sigma2 <= 0:
            raise DomainError(f"sigma2 must be positive, got {self.sigma2}")
        if not -1.0 < self.kappa < 1.0:
            raise DomainError(f"kappa must lie in (-1, 1), got {self.kappa}")


def _inverse_spd(prec: np.ndarray) -> np.ndarray:
    chol = cholesky_or_raise(prec)
    inv = cho_solve((chol, True), np.eye(prec.shape[0]))
    return (inv + inv.T) / 2.0


def car1_sigma(params: Car1Params) -> CovarianceMatrix:
    """``sigma2 * (I - kappa * A_scaled)^{-1}`` with spectrally scaled adjacency."""
    a = params.adjacency
    lam_max = npl.eigvalsh(a)[-1]
    a_scaled = a / lam_max
    prec = np.eye(a.shape[0]) - params.kappa * a_scaled
    sig = params.sigma2 * _inverse_spd(prec)
    return CovarianceMatrix(
        sig,
        provenance={
            "family": "car1",
            "sigma2": params.sigma2,
            "kappa": params.kappa,
        },
    )


def carw_sigma(params: CarwParams) -> CovarianceMatrix:
    """``sigma2 * (diag(W 1) - kappa * W)^{-1}``.

    The precision matrix is strictly diagonally dominant for
    ``|kappa| < 1``, so positive definiteness holds over the whole
    parameter space (asserted defensively through the Cholesky).
    """
    w = params.weights.w
    prec = np.diag(w.sum(axis=1)) - params.kappa * w
    sig = params.sigma2 * _inverse_spd(prec)
    return CovarianceMatrix(
        sig,
        provenance={
            "family": "carw",
            "sigma2": params.sigma2,
            "kappa": params.kappa,
        },
    )
