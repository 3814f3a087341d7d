"""Gaussian log-likelihood for row-independent node observations."""

from __future__ import annotations

import numpy as np
from scipy.linalg import solve_triangular

from ..covariance import CovarianceMatrix, cholesky_or_raise
from ..errors import DimensionMismatchError

__all__ = ["log_likelihood_gaussian", "loglik_from_suffstat"]

_LOG_2PI = np.log(2.0 * np.pi)


def log_likelihood_gaussian(y: np.ndarray, sigma) -> float:
    """Sum over rows of ``log N(y_i; 0, sigma)``.

    One Cholesky factorization is computed (or reused from a
    :class:`CovarianceMatrix`) and shared across all rows.
    """
    y = np.atleast_2d(np.asarray(y, dtype=float))
    if isinstance(sigma, CovarianceMatrix):
        chol, p = sigma.chol, sigma.p
    else:
        sigma = np.asarray(sigma, dtype=float)
        chol, p = cholesky_or_raise(sigma), sigma.shape[0]
    n = y.shape[0]
    if y.shape[1] != p:
        raise DimensionMismatchError(f"data has {y.shape[1]} columns, covariance is {p}x{p}")
    logdet = 2.0 * np.sum(np.log(np.diag(chol)))
    if n == 0:
        return 0.0
    half = solve_triangular(chol, y.T, lower=True)
    quad = float(np.sum(half**2))
    return -0.5 * (n * p * _LOG_2PI + n * logdet + quad)


def loglik_from_suffstat(n: int, s_mat: np.ndarray, chol: np.ndarray) -> float:
    """Same likelihood through the sufficient statistic ``S = Y'Y``.

    ``chol`` is the lower Cholesky factor of the covariance.  Used on the
    sampler hot path where ``S`` is fixed and the covariance changes.
    """
    p = s_mat.shape[0]
    if n == 0:
        return 0.0
    logdet = 2.0 * np.sum(np.log(np.diag(chol)))
    half = solve_triangular(chol, s_mat, lower=True)
    quad = float(np.trace(solve_triangular(chol, half.T, lower=True)))
    return -0.5 * (n * p * _LOG_2PI + n * logdet + quad)
