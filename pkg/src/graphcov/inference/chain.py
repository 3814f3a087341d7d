"""Sampler state, run configuration, and chain containers."""

from __future__ import annotations

from dataclasses import dataclass, field, asdict

import numpy as np

from ..errors import DomainError
from ..graph import EdgeWeights, Graph

__all__ = ["ModelState", "McmcConfig", "Chain"]


@dataclass
class ModelState:
    """Full parameter state for one sampler iteration.

    The Gaussian covariance model uses ``sigma2``, ``psi`` and ``w``; the
    count model additionally carries the regression block (``beta0``,
    ``beta``, their variances) and the latent log-rate matrix ``theta``.
    """

    sigma2: float
    psi: float = 0.0
    w: EdgeWeights | None = None
    beta0: np.ndarray | None = None
    beta: np.ndarray | None = None
    sigma2_0: float | None = None
    sigma2_beta: float | None = None
    theta: np.ndarray | None = None

    def check(self):
        """Assert the positivity invariants; used in debug runs."""
        assert self.sigma2 > 0, "sigma2 must be positive"
        assert self.psi >= 0, "psi must be nonnegative"
        if self.w is not None:
            assert np.all(self.w.edge_values() > 0), "edge weights must be positive"
        if self.sigma2_0 is not None:
            assert self.sigma2_0 > 0
        if self.sigma2_beta is not None:
            assert self.sigma2_beta > 0


@dataclass
class McmcConfig:
    """Iteration counts, seeding, and proposal tuning for one chain.

    Adaptation of proposal scales (Robbins-Monro toward ``target_accept``)
    runs during burn-in only and is frozen afterwards, preserving detailed
    balance for the retained draws.
    """

    iterations: int = 10000
    burn_in: int = 2500
    thin: int = 1
    seed: int = 0
    nugget: bool = False
    nu: float = 1.5
    target_accept: float = 0.30
    initial_step: float = 0.5
    adapt: bool = True

    def __post_init__(self):
        if self.iterations <= 0:
            raise DomainError("iterations must be positive")
        if not 0 <= self.burn_in < self.iterations:
            raise DomainError("burn_in must lie in [0, iterations)")
        if self.thin < 1:
            raise DomainError("thin must be >= 1")
        if self.nu <= 0:
            raise DomainError("nu must be positive")
        if not 0 < self.target_accept < 1:
            raise DomainError("target_accept must lie in (0, 1)")
        if self.initial_step <= 0:
            raise DomainError("initial_step must be positive")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "McmcConfig":
        return cls(**d)


class Chain:
    """Ordered draws from one MCMC run, with thinning/burn-in metadata.

    ``states`` holds every thinned iteration including burn-in;
    ``draws()`` and ``extract()`` default to the post-burn-in portion.
    """

    def __init__(
        self,
        states: list[ModelState],
        burn_in: int,
        thin: int,
        seed: int,
        acceptance: dict[str, float] | None = None,
        graph: Graph | None = None,
    ):
        if not states:
            raise DomainError("chain must contain at least one state")
        self.states = list(states)
        self.burn_in = int(burn_in)
        self.thin = int(thin)
        self.seed = int(seed)
        self.acceptance = dict(acceptance or {})
        self.graph = graph
        if not self.draws():
            raise DomainError("chain has no states after burn-in")
        for rate in self.acceptance.values():
            if not 0.0 <= rate <= 1.0:
                raise DomainError("acceptance rates must lie in [0, 1]")

    def __len__(self):
        return len(self.states)

    def n_draws(self) -> int:
        return len(self.draws())

    def draws(self) -> list[ModelState]:
        """States past the burn-in boundary (in thinned index units)."""
        skip = -(-self.burn_in // self.thin)  # ceil division
        return self.states[skip:]

    def extract(self, name: str, include_burn_in: bool = False) -> np.ndarray:
        """Stack one parameter across draws.

        Scalar parameters give shape (n_draws,); ``"w"`` gives
        (n_draws, n_edges) in canonical edge order; vector parameters give
        (n_draws, dim); ``"theta"`` gives (n_draws, n, p).
        """
        states = self.states if include_burn_in else self.draws()
        if name in ("sigma2", "psi", "sigma2_0", "sigma2_beta"):
            vals = [getattr(s, name) for s in states]
            if any(v is None for v in vals):
                raise DomainError(f"parameter {name!r} not present in this chain")
            return np.array(vals, dtype=float)
        if name == "w":
            return np.array([s.w.edge_values() for s in states])
        if name in ("beta0", "beta", "theta"):
            vals = [getattr(s, name) for s in states]
            if any(v is None for v in vals):
                raise DomainError(f"parameter {name!r} not present in this chain")
            return np.array(vals)
        raise DomainError(f"unknown parameter {name!r}")
