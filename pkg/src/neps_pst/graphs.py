"""Dense adjacency matrices for NEPS products of the 3-vertex path.

Vertices of an n-factor product are tuples over {1,2,3} in dictionary order:
(v1,...,vn) maps to index sum((vi-1) * 3**(n-i)).
"""

from __future__ import annotations

import json
from collections import deque
from typing import Sequence

import numpy as np

from .gf2 import Basis

# Neighbor pairs of the 3-vertex path on 0-based coordinate values {0,1,2}.
_PATH3_EDGE_PAIRS = ((0, 1), (1, 0), (1, 2), (2, 1))


def path3() -> np.ndarray:
    """Adjacency matrix of the path on vertices 1-2-3."""
    return np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])


def complete_graph(m: int) -> np.ndarray:
    """Adjacency matrix of the complete graph on m >= 2 vertices."""
    if m < 2:
        raise ValueError(f"complete graph needs at least 2 vertices, got {m}")
    return np.ones((m, m)) - np.eye(m)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def vertex_index(coords: Sequence[int]) -> int:
    """Dictionary-order index (0-based) of a vertex tuple over {1,2,3}."""
    if not coords:
        raise ValueError("vertex tuple must be nonempty")
    idx = 0
    for v in coords:
        if v not in (1, 2, 3):
            raise ValueError(f"coordinates must be 1, 2 or 3, got {v}")
        idx = idx * 3 + (v - 1)
    return idx


def index_to_coords(index: int, n: int) -> tuple[int, ...]:
    """Inverse of vertex_index for n factors."""
    if not 0 <= index < 3**n:
        raise ValueError(f"index {index} out of range for {n} factors")
    coords = []
    for _ in range(n):
        coords.append(index % 3 + 1)
        index //= 3
    return tuple(reversed(coords))


def center_index(n: int) -> int:
    """Index of the all-2 vertex, (3**n - 1) / 2."""
    return (3**n - 1) // 2


def pst_pair_indices(n: int, j: int) -> tuple[int, int]:
    """Indices of the vertices that are all 2 except coordinate j set to 1 or 3."""
    if not 1 <= j <= n:
        raise ValueError(f"coordinate j must be in 1..{n}, got {j}")
    offset = 3 ** (n - j)
    c = center_index(n)
    return c - offset, c + offset


def neps_adjacency(basis: Basis) -> np.ndarray:
    """Adjacency matrix of the NEPS of n copies of the path with this basis.

    Each basis row contributes the edges where coordinates under a 1 move to a
    path neighbor and coordinates under a 0 stay fixed; rows contribute
    disjoint edge sets. Edges are generated by index arithmetic instead of
    materializing per-row Kronecker factors.
    """
    n = basis.n
    order = 3**n
    adj = np.zeros((order, order))
    for row in basis.rows:
        xs = np.zeros(1, dtype=np.int64)
        ys = np.zeros(1, dtype=np.int64)
        for j in range(n):
            stride = 3 ** (n - 1 - j)
            if row.bit(j):
                moves_x = np.array([a * stride for a, _ in _PATH3_EDGE_PAIRS])
                moves_y = np.array([b * stride for _, b in _PATH3_EDGE_PAIRS])
            else:
                moves_x = moves_y = np.array([0, stride, 2 * stride])
            xs = (xs[:, None] + moves_x[None, :]).ravel()
            ys = (ys[:, None] + moves_y[None, :]).ravel()
        adj[xs, ys] = 1.0
    return adj


def connected_components(adj: np.ndarray) -> tuple[int, list[int]]:
    """Component count and per-vertex component ids by breadth-first search."""
    order = adj.shape[0]
    labels = [-1] * order
    count = 0
    for start in range(order):
        if labels[start] != -1:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in np.nonzero(adj[v])[0]:
                if labels[w] == -1:
                    labels[w] = count
                    queue.append(int(w))
        count += 1
    return count, labels


def matrix_to_json(a: np.ndarray) -> str:
    entries = [[float(x) for x in row] for row in a]
    return json.dumps({"entries": entries, "order": a.shape[0]}, indent=2, sort_keys=True) + "\n"


def matrix_to_csv(a: np.ndarray) -> str:
    return "\n".join(",".join(repr(float(x)) for x in row) for row in a) + "\n"
