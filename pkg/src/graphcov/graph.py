"""Graph structure, edge-weight parameters, Laplacians, and pseudoinverse powers.

A :class:`Graph` is a fixed, undirected, connected, simple graph on nodes
``0..p-1``.  An :class:`EdgeWeights` attaches one positive weight to every
edge; weights act as inverse distances (large weight = strong tie).  The
Laplacian of a weight configuration and fractional powers of its
Moore-Penrose pseudoinverse are the raw material for every graph metric in
:mod:`graphcov.metrics`.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .errors import (
    DisconnectedGraphError,
    DomainError,
    DuplicateEdgeError,
    NumericalRankDeficiencyError,
    SelfLoopError,
)

__all__ = [
    "Graph",
    "EdgeWeights",
    "Laplacian",
    "PseudoInversePower",
    "build_graph",
    "laplacian",
    "pinv_power",
    "lattice_graph",
    "DEFAULT_EIG_CUTOFF",
]

#: Relative eigenvalue threshold separating the structural zero eigenvalue of a
#: connected Laplacian from genuine small eigenvalues.
DEFAULT_EIG_CUTOFF = 1e-12


def _components(p: int, edges) -> int:
    """Number of connected components, via union-find with path halving."""
    parent = list(range(p))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    n_comp = p
    for j, k in edges:
        rj, rk = find(j), find(k)
        if rj != rk:
            parent[rj] = rk
            n_comp -= 1
    return n_comp


class Graph:
    """Undirected, connected, simple graph on nodes ``0..p-1``.

    Parameters
    ----------
    p : int
        Number of nodes.
    edges : iterable of (int, int)
        Unordered node pairs.  ``(j, k)`` and ``(k, j)`` denote the same
        edge; supplying both raises :class:`DuplicateEdgeError`.
    node_labels : sequence of str, optional
        Human-readable node names, length ``p``.

    Notes
    -----
    Instances are immutable after construction and safe to share across
    threads.  Edges are stored in canonical order (each pair sorted, pairs
    sorted lexicographically); this order defines the layout of every
    edge-aligned vector in the package.
    """

    def __init__(self, p: int, edges, node_labels=None):
        if p < 1:
            raise DomainError(f"node count must be positive, got {p}")
        canonical: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for j, k in edges:
            j, k = int(j), int(k)
            if not (0 <= j < p and 0 <= k < p):
                raise DomainError(f"edge ({j},{k}) out of range for p={p}")
            if j == k:
                raise SelfLoopError(f"self-loop at node {j}")
            e = (j, k) if j < k else (k, j)
            if e in seen:
                raise DuplicateEdgeError(f"edge {e} supplied more than once")
            seen.add(e)
            canonical.append(e)
        canonical.sort()
        if _components(p, canonical) != 1:
            raise DisconnectedGraphError(
                f"graph with p={p} and {len(canonical)} edges is not connected"
            )
        if node_labels is not None:
            node_labels = tuple(str(s) for s in node_labels)
            if len(node_labels) != p:
                raise DomainError("node_labels length must equal p")

        self.p = p
        self.edges: tuple[tuple[int, int], ...] = tuple(canonical)
        self.node_labels = node_labels
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        incident: list[list[int]] = [[] for _ in range(p)]
        for i, (j, k) in enumerate(self.edges):
            incident[j].append(i)
            incident[k].append(i)
        #: per node, indices into ``edges`` of the incident edges
        self.incident_edges: tuple[tuple[int, ...], ...] = tuple(
            tuple(ix) for ix in incident
        )

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, j: int) -> int:
        return len(self.incident_edges[j])

    def neighbors(self, j: int):
        """Nodes adjacent to ``j``, in canonical edge order."""
        out = []
        for i in self.incident_edges[j]:
            a, b = self.edges[i]
            out.append(b if a == j else a)
        return out

    def adjacency_matrix(self) -> np.ndarray:
        """Binary adjacency matrix (p, p)."""
        a = np.zeros((self.p, self.p))
        for j, k in self.edges:
            a[j, k] = a[k, j] = 1.0
        return a

    def weight_matrix(self, edge_values: np.ndarray) -> np.ndarray:
        """Expand an edge-aligned vector into a symmetric (p, p) matrix."""
        v = np.asarray(edge_values, dtype=float)
        if v.shape != (self.n_edges,):
            raise DomainError(
                f"expected {self.n_edges} edge values, got shape {v.shape}"
            )
        w = np.zeros((self.p, self.p))
        for i, (j, k) in enumerate(self.edges):
            w[j, k] = w[k, j] = v[i]
        return w

    def content_hash(self) -> str:
        """Stable hex digest of (p, canonical edge list) for run manifests."""
        text = f"{self.p}|" + ";".join(f"{j},{k}" for j, k in self.edges)
        return hashlib.sha256(text.encode()).hexdigest()

    def __repr__(self):
        return f"Graph(p={self.p}, n_edges={self.n_edges})"


def build_graph(p: int, edge_list, node_labels=None) -> Graph:
    """Construct a validated :class:`Graph` from a node count and edge pairs."""
    return Graph(p, edge_list, node_labels=node_labels)


def lattice_graph(rows: int, cols: int | None = None) -> Graph:
    """Rectangular grid graph with nodes in row-major order.

    A ``k``-by-``k`` lattice has ``2*k*(k-1)`` edges.
    """
    if cols is None:
        cols = rows
    if rows < 1 or cols < 1:
        raise DomainError("lattice dimensions must be positive")
    edges = []
    for r in range(rows):
        for c in range(cols):
            node = r * cols + c
            if c + 1 < cols:
                edges.append((node, node + 1))
            if r + 1 < rows:
                edges.append((node, node + cols))
    return Graph(rows * cols, edges)


class EdgeWeights:
    """Symmetric nonnegative weight matrix supported exactly on a graph's edges.

    ``w[j, k] > 0`` iff ``(j, k)`` is an edge; the diagonal is zero and the
    matrix is exactly symmetric.  Weights are in inverse-distance units.
    """

    def __init__(self, graph: Graph, w: np.ndarray):
        w = np.asarray(w, dtype=float)
        if w.shape != (graph.p, graph.p):
            raise DomainError(f"weight matrix must be ({graph.p},{graph.p})")
        if not np.array_equal(w, w.T):
            raise DomainError("weight matrix must be exactly symmetric")
        if np.any(np.diag(w) != 0.0):
            raise DomainError("weight matrix must have a zero diagonal")
        mask = graph.adjacency_matrix() > 0
        if np.any(w[mask] <= 0):
            raise DomainError("every edge must carry a strictly positive weight")
        if np.any(w[~mask] != 0.0):
            raise DomainError("weights off the edge set must be exactly zero")
        self.graph = graph
        self.w = w.copy()
        self.w.setflags(write=False)

    @classmethod
    def from_edge_values(cls, graph: Graph, values) -> "EdgeWeights":
        """Build from a vector aligned with ``graph.edges``."""
        return cls(graph, graph.weight_matrix(np.asarray(values, dtype=float)))

    @classmethod
    def uniform(cls, graph: Graph, value: float = 1.0) -> "EdgeWeights":
        return cls.from_edge_values(graph, np.full(graph.n_edges, float(value)))

    def edge_values(self) -> np.ndarray:
        """Weights as a vector aligned with the graph's canonical edge order."""
        return np.array([self.w[j, k] for j, k in self.graph.edges])

    def scaled(self, c: float) -> "EdgeWeights":
        """New weights with every edge multiplied by ``c > 0``."""
        if c <= 0:
            raise DomainError("scale factor must be positive")
        return EdgeWeights.from_edge_values(self.graph, self.edge_values() * c)

    def __repr__(self):
        return f"EdgeWeights(p={self.graph.p}, n_edges={self.graph.n_edges})"


class Laplacian:
    """Weighted graph Laplacian ``diag(W 1) - W`` with its source weights."""

    def __init__(self, l: np.ndarray, source: EdgeWeights):
        self.l = l
        self.l.setflags(write=False)
        self.source = source

    @property
    def p(self) -> int:
        return self.l.shape[0]


def laplacian(w: EdgeWeights) -> Laplacian:
    """Laplacian of an edge-weight configuration.

    Row sums vanish by construction; the matrix is PSD with nullity one for
    a connected graph.
    """
    return Laplacian(_laplacian_matrix(w.w), w)


def _laplacian_matrix(w: np.ndarray) -> np.ndarray:
    return np.diag(w.sum(axis=1)) - w


class PseudoInversePower:
    """``{L+}^m`` for a Laplacian ``L``: symmetric, PSD, zero row sums."""

    def __init__(self, matrix: np.ndarray, m: float, eig_cutoff: float):
        self.matrix = matrix
        self.matrix.setflags(write=False)
        self.m = float(m)
        self.eig_cutoff = float(eig_cutoff)


def _pinv_power_matrix(
    l_mat: np.ndarray, m: float, eig_cutoff: float = DEFAULT_EIG_CUTOFF
) -> np.ndarray:
    """Array-level ``{L+}^m`` via full symmetric eigendecomposition.

    Eigenvalues at or below ``eig_cutoff * lambda_max`` are treated as the
    structural zero.  Exactly one such eigenvalue is expected for a
    connected graph; more raises :class:`NumericalRankDeficiencyError`.
    """
    lam, q = np.linalg.eigh(l_mat)
    lam_max = lam[-1]
    if lam_max <= 0:
        raise NumericalRankDeficiencyError("Laplacian has no positive eigenvalue")
    null = lam <= eig_cutoff * lam_max
    n_null = int(null.sum())
    if n_null > 1:
        raise NumericalRankDeficiencyError(
            f"{n_null} eigenvalues below cutoff: graph is numerically disconnected"
        )
    if n_null == 0:
        # The structural zero can round to a tiny negative or positive value;
        # claim the smallest eigenvalue rather than inverting it.
        null[0] = True
    inv = np.zeros_like(lam)
    keep = ~null
    inv[keep] = lam[keep] ** (-float(m))
    out = (q * inv) @ q.T
    return (out + out.T) / 2.0


def pinv_power(
    l: Laplacian, m: float, eig_cutoff: float = DEFAULT_EIG_CUTOFF
) -> PseudoInversePower:
    """Moore-Penrose pseudoinverse of ``l`` raised to the power ``m > 0``.

    For integer ``m`` this equals repeated multiplication of the
    pseudoinverse; fractional ``m`` is defined spectrally.
    """
    if m <= 0:
        raise DomainError(f"exponent m must be positive, got {m}")
    return PseudoInversePower(_pinv_power_matrix(l.l, m, eig_cutoff), m, eig_cutoff)
