"""Weighted graphs and their matrix family.

Node indices are 0-based everywhere. For a directed graph the weighted
degree of node i sums the weights of links leaving i; undirected graphs
store each edge once and are expanded symmetrically when matrices are
built.

The matrix family derived from a graph:

    A  adjacency            A[i, j] = w_ij
    D  weighted degrees     D = diag(d_1, ..., d_n), d_i = sum_j w_ij
    L  Laplacian            L = D - A
    H  semi-normalized      H = D^{-1/2} L   (same link pattern as L,
                            effective link weight w_ij / d_i)
    N  normalized           N = D^{-1/2} L D^{-1/2}
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

__all__ = ["Graph", "GraphMatrices", "load_edge_list", "path_graph", "build_matrices"]


@dataclass(frozen=True)
class Graph:
    """Weighted graph on nodes 0..n-1 with positive edge weights.

    Undirected graphs keep one record per unordered pair; `directed=True`
    keeps (src, dst) as stored. Self-loops and duplicate edges are
    rejected at construction.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]
    directed: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError(f"graph needs at least one node, got n={self.n}")
        seen: set[tuple[int, int]] = set()
        for src, dst, weight in self.edges:
            if src == dst:
                raise ValidationError(f"self-loop on node {src} is not allowed")
            if not (0 <= src < self.n and 0 <= dst < self.n):
                raise ValidationError(
                    f"edge ({src}, {dst}) outside node range [0, {self.n})"
                )
            if not weight > 0:
                raise ValidationError(
                    f"edge ({src}, {dst}) has non-positive weight {weight}"
                )
            key = (src, dst) if self.directed else (min(src, dst), max(src, dst))
            if key in seen:
                raise ValidationError(f"duplicate edge ({src}, {dst})")
            seen.add(key)

    def fingerprint(self) -> str:
        """Stable hash of (n, directedness, edge set), for trajectory provenance."""
        digest = hashlib.sha256()
        digest.update(f"n={self.n};directed={self.directed};".encode())
        for src, dst, weight in sorted(self.edges):
            digest.update(f"{src},{dst},{weight!r};".encode())
        return digest.hexdigest()


@dataclass(frozen=True)
class GraphMatrices:
    """The five matrices of one graph, mutually consistent by construction."""

    graph: Graph
    adjacency: np.ndarray
    degree: np.ndarray
    laplacian: np.ndarray
    semi_normalized: np.ndarray
    normalized: np.ndarray
    sqrt_degree: np.ndarray = field(repr=False)
    inv_sqrt_degree: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def degrees(self) -> np.ndarray:
        """Weighted degree vector d."""
        return np.diag(self.degree)


def load_edge_list(text: str, directed: bool = False) -> Graph:
    """Parse an edge-list document into a Graph.

    One edge per line, "src dst weight" separated by whitespace. Lines
    starting with '#' and blank lines are ignored. Node count is
    1 + max node index seen.

    Raises ValidationError with the 1-based line number for malformed
    lines; non-positive weights, self-loops and duplicate edges are
    rejected.
    """
    edges: list[tuple[int, int, float]] = []
    max_index = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValidationError(
                f"line {lineno}: expected 'src dst weight', got {raw!r}"
            )
        try:
            src, dst = int(parts[0]), int(parts[1])
            weight = float(parts[2])
        except ValueError as exc:
            raise ValidationError(f"line {lineno}: {exc}") from exc
        if src < 0 or dst < 0:
            raise ValidationError(f"line {lineno}: negative node index")
        if not weight > 0:
            raise ValidationError(
                f"line {lineno}: weight must be positive, got {weight}"
            )
        if src == dst:
            raise ValidationError(f"line {lineno}: self-loop on node {src}")
        edges.append((src, dst, weight))
        max_index = max(max_index, src, dst)
    if not edges:
        raise ValidationError("edge list contains no edges")
    seen: set[tuple[int, int]] = set()
    for src, dst, _ in edges:
        key = (src, dst) if directed else (min(src, dst), max(src, dst))
        if key in seen:
            raise ValidationError(f"duplicate edge ({src}, {dst})")
        seen.add(key)
    return Graph(n=max_index + 1, edges=tuple(edges), directed=directed)


def path_graph(n: int, weight: float = 1.0) -> Graph:
    """Undirected chain 0-1-2-...-(n-1) with uniform edge weight."""
    if n < 2:
        raise ValidationError(f"path graph needs n >= 2, got {n}")
    if not weight > 0:
        raise ValidationError(f"weight must be positive, got {weight}")
    edges = tuple((i, i + 1, float(weight)) for i in range(n - 1))
    return Graph(n=n, edges=edges, directed=False)


def build_matrices(g: Graph) -> GraphMatrices:
    """Build A, D, L, H, N for a graph.

    Every node must have positive weighted degree, otherwise D^{-1/2} is
    undefined and a ValidationError names the offending node.
    """
    A = np.zeros((g.n, g.n))
    for src, dst, weight in g.edges:
        A[src, dst] = weight
        if not g.directed:
            A[dst, src] = weight
    d = A.sum(axis=1)
    isolated = np.flatnonzero(d <= 0)
    if isolated.size:
        raise ValidationError(
            f"node {isolated[0]} has zero weighted degree; D^(-1/2) is undefined"
        )
    D = np.diag(d)
    L = D - A
    sqrt_d = np.sqrt(d)
    inv_sqrt_D = np.diag(1.0 / sqrt_d)
    H = inv_sqrt_D @ L
    # elementwise two-sided scaling keeps N exactly symmetric when L is
    N = L * np.outer(1.0 / sqrt_d, 1.0 / sqrt_d)
    return GraphMatrices(
        graph=g,
        adjacency=A,
        degree=D,
        laplacian=L,
        semi_normalized=H,
        normalized=N,
        sqrt_degree=np.diag(sqrt_d),
        inv_sqrt_degree=inv_sqrt_D,
    )
