import numpy as np
import pytest

from netosc import Graph, make_dual_state


def random_connected_graph(rng: np.random.Generator, n: int, extra_edges: int | None = None) -> Graph:
    """Random spanning tree plus a few extra edges, weights in [0.5, 2]."""
    edges = []
    seen = set()
    for i in range(1, n):
        j = int(rng.integers(0, i))
        edges.append((j, i, float(rng.uniform(0.5, 2.0))))
        seen.add((j, i))
    if extra_edges is None:
        extra_edges = int(rng.integers(0, n))
    for _ in range(extra_edges):
        i, j = sorted(rng.choice(n, size=2, replace=False).tolist())
        if (i, j) in seen:
            continue
        seen.add((i, j))
        edges.append((i, j, float(rng.uniform(0.5, 2.0))))
    return Graph(n=n, edges=tuple(edges), directed=False)


def random_dual_state(rng: np.random.Generator, n: int):
    return make_dual_state(rng.normal(size=n), rng.normal(size=n))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260808)
