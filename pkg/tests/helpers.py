"""Shared test helpers: random basis generators and independent oracles."""

from __future__ import annotations

import itertools

import numpy as np

from neps_pst import Basis, BitVector


def random_basis(rng: np.random.Generator, n: int, max_m: int | None = None) -> Basis:
    """Random basis: a nonempty set of distinct nonzero rows of length n."""
    pool = list(range(1, 2**n))
    limit = len(pool) if max_m is None else min(max_m, len(pool))
    m = int(rng.integers(1, limit + 1))
    words = rng.choice(pool, size=m, replace=False)
    return Basis(n, tuple(BitVector(n, int(w)) for w in sorted(words)))


def random_uniform_basis(rng: np.random.Generator, n: int, k: int) -> Basis:
    """Random basis whose rows all have weight k."""
    pool = [w for w in range(1, 2**n) if bin(w).count("1") == k]
    m = int(rng.integers(1, len(pool) + 1))
    words = rng.choice(pool, size=m, replace=False)
    return Basis(n, tuple(BitVector(n, int(w)) for w in sorted(words)))


def span_rank_oracle(words: list[int]) -> int:
    """Rank over GF(2) by enumerating the span: |span| = 2**rank."""
    span = {0}
    for w in words:
        span |= {v ^ w for v in span}
    size = len(span)
    rank = size.bit_length() - 1
    assert 2**rank == size
    return rank


def brute_neps_adjacency(basis: Basis) -> np.ndarray:
    """Adjacency straight from the vertex-tuple definition of the product."""
    n = basis.n
    labels = list(itertools.product((1, 2, 3), repeat=n))
    order = 3**n
    adj = np.zeros((order, order))
    for a, x in enumerate(labels):
        for b, y in enumerate(labels):
            for row in basis.rows:
                ok = True
                for i in range(n):
                    if row.bit(i) == 0:
                        if x[i] != y[i]:
                            ok = False
                            break
                    elif abs(x[i] - y[i]) != 1:
                        ok = False
                        break
                if ok:
                    adj[a, b] = 1.0
                    break
    return adj
