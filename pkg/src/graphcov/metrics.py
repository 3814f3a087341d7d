"""Graph metrics and Euclidean certification.

Three metrics map an edge-weight configuration to a hollow symmetric
distance matrix:

* shortest path -- sums the supplied edge values along minimal paths
  (values act as additive lengths here, taken exactly as given);
* resistance -- effective electrical resistance with weights as
  conductances, ``(e_i - e_j)' L+ (e_i - e_j)``;
* the ``delta_m`` family -- ``sqrt((e_i - e_j)' {L+}^m (e_i - e_j))``,
  Euclidean for every ``m > 0``; ``m = 2`` is the quasi-Euclidean metric
  used by the covariance model.

``certify_euclidean`` decides Euclidean realisability by double-centering
the squared distances and checking the Gram spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .errors import DomainError
from .graph import EdgeWeights, _pinv_power_matrix, laplacian, pinv_power

__all__ = [
    "MetricTag",
    "SHORTEST_PATH",
    "RESISTANCE",
    "delta_tag",
    "DistanceMatrix",
    "EuclideanCertificate",
    "shortest_path",
    "resistance",
    "delta_m",
    "hollow_transform",
    "certify_euclidean",
]


@dataclass(frozen=True)
class MetricTag:
    """Which metric produced a distance matrix (``m`` set for delta_m)."""

    kind: str
    m: float | None = None

    def __str__(self):
        if self.kind == "delta_m":
            return f"delta_m(m={self.m:g})"
        return self.kind


SHORTEST_PATH = MetricTag("shortest_path")
RESISTANCE = MetricTag("resistance")


def delta_tag(m: float) -> MetricTag:
    return MetricTag("delta_m", float(m))


class DistanceMatrix:
    """Hollow, symmetric, nonnegative matrix of pairwise distances.

    Triangle-inequality validation is opt-in (``validate_triangle``) since
    it costs O(p^3).
    """

    def __init__(self, d: np.ndarray, metric_tag: MetricTag):
        d = np.asarray(d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise DomainError(f"distance matrix must be square, got {d.shape}")
        scale = np.abs(d).max() if d.size else 0.0
        if np.abs(d - d.T).max() > 1e-9 * max(scale, 1.0):
            raise DomainError("distance matrix must be symmetric")
        if np.any(np.diag(d) != 0.0):
            raise DomainError("distance matrix must have a zero diagonal")
        if np.any(d < 0):
            raise DomainError("distances must be nonnegative")
        self.d = d.copy()
        self.d.setflags(write=False)
        self.metric_tag = metric_tag

    @property
    def p(self) -> int:
        return self.d.shape[0]

    def validate_triangle(self, slack: float = 1e-9) -> None:
        """Raise :class:`DomainError` if any triple violates the triangle
        inequality beyond ``slack``."""
        d = self.d
        best = np.full_like(d, np.inf)
        for i in range(self.p):
            np.minimum(best, d[:, i][:, None] + d[i, :][None, :], out=best)
        worst = (d - best).max()
        if worst > slack:
            raise DomainError(f"triangle inequality violated by {worst:.3e}")

    def __repr__(self):
        return f"DistanceMatrix(p={self.p}, metric={self.metric_tag})"


@dataclass
class EuclideanCertificate:
    """Outcome of the Euclidean realisability check.

    ``embedding`` (p, k) is populated only when ``is_euclidean``; its rows
    reproduce the pairwise distances.
    """

    is_euclidean: bool
    min_gram_eigenvalue: float
    embedding: np.ndarray | None = None


def shortest_path(w: EdgeWeights) -> DistanceMatrix:
    """All-pairs minimal path sums, edge entries taken as additive lengths.

    Note the convention mismatch with every other metric in this module:
    here a large entry makes a pair *far*.  Callers who store weights in
    inverse-distance units and want "strong edge = short path" must pass
    reciprocal weights.
    """
    d = dijkstra(csr_matrix(w.w), directed=False)
    # Dijkstra from opposite endpoints can differ in the last ulp.
    d = np.minimum(d, d.T)
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(d, SHORTEST_PATH)


def resistance(w: EdgeWeights) -> DistanceMatrix:
    """Effective resistance between all node pairs (weights = conductances)."""
    lp = pinv_power(laplacian(w), 1.0)
    r = hollow_transform(lp.matrix)
    r = np.maximum(r, 0.0)
    np.fill_diagonal(r, 0.0)
    return DistanceMatrix(r, RESISTANCE)


def delta_m(w: EdgeWeights, m: float) -> DistanceMatrix:
    """Distances ``sqrt((e_i - e_j)' {L+}^m (e_i - e_j))`` for ``m > 0``.

    Computed as the element-wise square root of the hollow transform of
    ``{L+}^m`` -- O(p^3) once instead of O(p^2) quadratic forms -- and
    guaranteed Euclidean for every ``m`` and weight configuration.
    """
    if m <= 0:
        raise DomainError(f"exponent m must be positive, got {m}")
    lp = _pinv_power_matrix(laplacian(w).l, m)
    b = np.maximum(hollow_transform(lp), 0.0)
    d = np.sqrt(b)
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(d, delta_tag(m))


def hollow_transform(a: np.ndarray) -> np.ndarray:
    """``B = 1 diag(A)' + diag(A) 1' - 2A`` for symmetric ``A``.

    Sends a PSD matrix to the matrix of squared embedding distances; its
    null space on symmetric matrices is exactly ``{1 c' + c 1'}``.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("hollow_transform expects a square matrix")
    scale = np.abs(a).max() if a.size else 0.0
    if np.abs(a - a.T).max() > 1e-9 * max(scale, 1.0):
        raise DomainError("hollow_transform expects a symmetric matrix")
    da = np.diag(a)
    return da[:, None] + da[None, :] - 2.0 * a


def certify_euclidean(
    d: DistanceMatrix, tol: float = 1e-8
) -> EuclideanCertificate:
    """Decide whether ``d`` is realisable as pairwise norms in some R^k.

    Double-centers the squared distances; the matrix is Euclidean iff the
    resulting Gram matrix is PSD.  The threshold is relative:
    ``min_eig >= -tol * max_eig``.
    """
    p = d.p
    sq = d.d**2
    j = np.eye(p) - np.full((p, p), 1.0 / p)
    g = -0.5 * j @ sq @ j
    g = (g + g.T) / 2.0
    lam, q = np.linalg.eigh(g)
    lam_max = max(lam[-1], 0.0)
    is_euc = bool(lam[0] >= -tol * lam_max) if lam_max > 0 else bool(lam[0] >= -tol)
    embedding = None
    if is_euc:
        keep = lam > 0
        embedding = q[:, keep] * np.sqrt(lam[keep])
    return EuclideanCertificate(
        is_euclidean=is_euc,
        min_gram_eigenvalue=float(lam[0]),
        embedding=embedding,
    )
