"""Exception types shared across the package."""


class GraphCovError(Exception):
    """Base class for all errors raised by graphcov."""


class GraphParseError(GraphCovError):
    """An input file (graph, matrix, config) could not be parsed."""


class SelfLoopError(GraphCovError):
    """An edge connects a node to itself."""


class DuplicateEdgeError(GraphCovError):
    """The same undirected edge was supplied more than once."""


class DisconnectedGraphError(GraphCovError):
    """The graph has more than one connected component."""


class NumericalRankDeficiencyError(GraphCovError):
    """More than one Laplacian eigenvalue fell below the rank cutoff,
    signalling a disconnected or near-disconnected graph."""


class NotPositiveDefiniteError(GraphCovError):
    """A matrix required to be positive definite failed Cholesky."""


class DomainError(GraphCovError):
    """An argument lies outside the mathematical domain of an operation."""


class DegenerateDistanceError(GraphCovError):
    """A distance matrix has no positive entry to scale by."""


class DegenerateVarianceError(GraphCovError):
    """A sample statistic is undefined because of zero variance."""


class DimensionMismatchError(GraphCovError):
    """Array shapes are inconsistent with one another."""


class ConjugacyUnavailableError(GraphCovError):
    """A conjugate update was requested in a configuration where the
    full conditional is not available in closed form."""


class ChainTooShortError(GraphCovError):
    """An MCMC chain has too few retained draws for the requested summary."""


class SamplerError(GraphCovError):
    """An MCMC run failed irrecoverably."""
