"""Spectral decompositions and quantum-walk transition matrices.

The transition matrix of a graph with adjacency matrix A is exp(-itA),
evaluated here three independent ways: from a numerical eigendecomposition,
from the closed-form product over basis rows (NEPS factors of the 3-vertex
path), and from a scaling-and-squaring power series used as an oracle.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .gf2 import Basis, BitVector

SQRT2 = math.sqrt(2.0)

_EYE3 = np.eye(3)

# Closed-form spectral projectors of the 3-vertex path, eigenvalues
# -sqrt(2), 0, sqrt(2). Their alternating sum E1 - E2 + E3 is the
# anti-diagonal flip permutation.
_P3_PROJ_LOW = 0.25 * np.array(
    [[1.0, -SQRT2, 1.0], [-SQRT2, 2.0, -SQRT2], [1.0, -SQRT2, 1.0]]
)
_P3_PROJ_MID = 0.5 * np.array([[1.0, 0.0, -1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 1.0]])
_P3_PROJ_HIGH = 0.25 * np.array(
    [[1.0, SQRT2, 1.0], [SQRT2, 2.0, SQRT2], [1.0, SQRT2, 1.0]]
)

_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class TauTime:
    """The time coeff * pi / sqrt(2)**k, kept in exact form until evaluated.

    Scaling by sqrt(2) shifts k instead of multiplying floats, so the
    prescribed times stay sharp through the per-coordinate recursion.
    """

    k: int
    coeff: float = 1.0

    def value(self) -> float:
        return self.coeff * math.pi * 2.0 ** (-0.5 * self.k)

    def negated(self) -> "TauTime":
        return TauTime(self.k, -self.coeff)

    def scaled(self, factor: float) -> "TauTime":
        return TauTime(self.k, self.coeff * factor)


Time = Union[TauTime, float]


def tau(k: int) -> TauTime:
    """The prescribed time pi / sqrt(2)**k."""
    return TauTime(k)


def time_value(t: Time) -> float:
    return t.value() if isinstance(t, TauTime) else float(t)


def _scale_sqrt2(t: Time, sign: float) -> Time:
    """Multiply a time by sign * sqrt(2)."""
    if isinstance(t, TauTime):
        return TauTime(t.k - 1, sign * t.coeff)
    return sign * SQRT2 * float(t)


@dataclass
class SpectralDecomposition:
    """Distinct ascending eigenvalues with their orthogonal projectors."""

    order: int
    eigenvalues: tuple[float, ...]
    projectors: tuple[np.ndarray, ...]


def _check_symmetric(a: np.ndarray) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if np.abs(a - a.T).max() > _SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric")


def eigendecompose(a: np.ndarray, group_tol: float | None = None) -> SpectralDecomposition:
    """Symmetric eigendecomposition with near-degenerate eigenvalues merged.

    Eigenvalues closer than group_tol to their neighbor are clustered into a
    single distinct eigenvalue (the cluster mean) whose projector sums the
    eigenvector outer products. Sums of path spectra collide exactly, so the
    grouping is required for a correct count of distinct eigenvalues.
    """
    a = np.asarray(a, dtype=float)
    _check_symmetric(a)
    if group_tol is None:
        group_tol = 1e-8 * (1.0 + float(np.abs(a).max()))
    w, v = np.linalg.eigh(a)
    eigenvalues = []
    projectors = []
    start = 0
    for i in range(1, len(w) + 1):
        if i == len(w) or w[i] - w[i - 1] > group_tol:
            block = v[:, start:i]
            eigenvalues.append(float(w[start:i].mean()))
            projectors.append(block @ block.T)
            start = i
    return SpectralDecomposition(a.shape[0], tuple(eigenvalues), tuple(projectors))


def p3_spectral() -> SpectralDecomposition:
    """Closed-form decomposition of the 3-vertex path: -sqrt(2), 0, sqrt(2)."""
    return SpectralDecomposition(
        3,
        (-SQRT2, 0.0, SQRT2),
        (_P3_PROJ_LOW.copy(), _P3_PROJ_MID.copy(), _P3_PROJ_HIGH.copy()),
    )


def transition_matrix(decomp: SpectralDecomposition, t: Time) -> np.ndarray:
    """exp(-itA) assembled from the spectral decomposition of A."""
    tv = time_value(t)
    h = np.zeros((decomp.order, decomp.order), dtype=complex)
    for lam, proj in zip(decomp.eigenvalues, decomp.projectors):
        h += np.exp(-1j * tv * lam) * proj
    return h


def _factor(bits: tuple[int, ...], t: Time) -> np.ndarray:
    # exp(-it K) for the Kronecker product K of path/identity factors chosen
    # by bits, peeling the last coordinate. A trailing 1 expands over the
    # path's three projectors at sqrt(2)-scaled times; the head transition at
    # the negated time is the complex conjugate, so it is computed once.
    if not bits:
        return np.array([[np.exp(-1j * time_value(t))]])
    head = bits[:-1]
    if bits[-1] == 0:
        return np.kron(_factor(head, t), _EYE3)
    h_plus = _factor(head, _scale_sqrt2(t, 1.0))
    h_minus = h_plus.conj()
    eye = np.eye(3 ** len(head))
    return (
        np.kron(h_minus, _P3_PROJ_LOW)
        + np.kron(eye, _P3_PROJ_MID)
        + np.kron(h_plus, _P3_PROJ_HIGH)
    )


def factor_transition(vec: BitVector, t: Time) -> np.ndarray:
    """Transition matrix of the single-row NEPS for one nonzero basis row."""
    if vec.word == 0:
        raise ValueError("basis row must be nonzero")
    return _factor(vec.bits(), t)


def product_transition(basis: Basis, t: Time) -> np.ndarray:
    """Transition matrix of the full NEPS: the product of per-row factors.

    The per-row adjacency terms commute, so exp of their sum is this product;
    factors are multiplied left to right in stored row order for
    reproducibility.
    """
    h = np.eye(3**basis.n, dtype=complex)
    for row in basis.rows:
        h = h @ factor_transition(row, t)
    return h


def expm_oracle(a: np.ndarray, t: Time, max_squarings: int = 60) -> np.ndarray:
    """exp(-itA) by scaling and squaring of the truncated power series.

    Independent of any eigendecomposition; used to cross-check the other two
    computation routes. Accurate to well below 1e-10 in max-entry norm for
    arguments within the scaling budget.
    """
    a = np.asarray(a, dtype=float)
    _check_symmetric(a)
    m = (-1j * time_value(t)) * a
    norm = float(np.abs(m).sum(axis=0).max())
    squarings = 0
    while norm > 0.5:
        norm /= 2.0
        squarings += 1
        if squarings > max_squarings:
            raise OverflowError("time * matrix norm exceeds the scaling budget")
    x = m / 2.0**squarings
    result = np.eye(a.shape[0], dtype=complex) + x
    term = x
    for order in range(2, 40):
        term = term @ x / order
        result += term
        if float(np.abs(term).max()) < 1e-20:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def unitarity_residual(h: np.ndarray) -> float:
    """Max-entry norm of H H* - I."""
    return float(np.abs(h @ h.conj().T - np.eye(h.shape[0])).max())


def symmetry_residual(h: np.ndarray) -> float:
    return float(np.abs(h - h.T).max())


def max_entry_diff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.abs(a - b).max())


def complex_matrix_to_json(h: np.ndarray) -> str:
    entries = [[[float(x.real), float(x.imag)] for x in row] for row in h]
    return json.dumps({"entries": entries, "order": h.shape[0]}, indent=2, sort_keys=True) + "\n"


def magnitude_csv(h: np.ndarray) -> str:
    return "\n".join(",".join(repr(float(abs(x))) for x in row) for row in h) + "\n"
