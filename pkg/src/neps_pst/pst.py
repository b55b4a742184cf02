"""Perfect state transfer and periodicity detection on NEPS of the path.

A report is produced for every input: the structural premises (full GF(2)
rank, shared weight parity, nonzero column sum of the minimum-weight rows)
are evaluated in order, the transfer/periodicity claims they support are
derived exactly, and each claim is confirmed against the numerically
computed transition matrix whenever the product order permits.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .gf2 import Basis, ParityClass, column_sum, min_weight_subset, parity_class, rank_gf2, weight
from .graphs import center_index, connected_components, kron, neps_adjacency, pst_pair_indices
from .spectral import (
    TauTime,
    Time,
    eigendecompose,
    max_entry_diff,
    product_transition,
    tau,
    time_value,
)

# Anti-diagonal 3x3 flip permutation; its own inverse.
FLIP = np.array([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]])

DEFAULT_TOL = 1e-9
DEFAULT_NUMERIC_CAP = 8


def center(a: np.ndarray) -> complex:
    """Middle entry of an odd-order square matrix."""
    order = a.shape[0]
    if a.ndim != 2 or a.shape[1] != order:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if order % 2 == 0:
        raise ValueError(f"order must be odd, got {order}")
    mid = order // 2
    return a[mid, mid]


def center_block(a: np.ndarray) -> np.ndarray:
    """Central 3x3 principal submatrix of an odd-order square matrix."""
    order = a.shape[0]
    if a.ndim != 2 or a.shape[1] != order:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if order % 2 == 0 or order < 3:
        raise ValueError(f"order must be odd and >= 3, got {order}")
    mid = order // 2
    return a[mid - 1 : mid + 2, mid - 1 : mid + 2].copy()


def predicted_center_block(basis: Basis, j: int) -> np.ndarray:
    """Exact central 3x3 block of the transition matrix at the prescribed time.

    Requires all rows to share one weight k. Relative to coordinate j the
    block is (-1)**m * FLIP**r where m is the row count and r the number of
    rows with a 1 in coordinate j; entries are exactly -1, 0 or 1.
    """
    weights = {weight(row) for row in basis.rows}
    if len(weights) != 1:
        raise ValueError("all rows must share a single weight")
    if not 1 <= j <= basis.n:
        raise ValueError(f"coordinate j must be in 1..{basis.n}, got {j}")
    ones = sum(row.bit(j - 1) for row in basis.rows)
    sign = -1.0 if basis.m % 2 else 1.0
    return sign * (FLIP if ones % 2 else np.eye(3))


class PstCheck(NamedTuple):
    verdict: bool
    magnitude: float
    phase: float


def check_pst(h: np.ndarray, u: int, v: int, tol: float = DEFAULT_TOL) -> PstCheck:
    """Whether |H[u,v]| is within tol of 1; u == v checks periodicity."""
    order = h.shape[0]
    if not (0 <= u < order and 0 <= v < order):
        raise IndexError(f"vertex pair ({u}, {v}) out of range for order {order}")
    entry = complex(h[u, v])
    magnitude = abs(entry)
    phase = math.atan2(entry.imag, entry.real)
    return PstCheck(abs(magnitude - 1.0) <= tol, magnitude, phase)


@dataclass
class Claim:
    """One asserted matrix entry: a transfer pair (u != v) or a periodic vertex."""

    j: int | None
    kind: str
    u: int
    v: int
    tau_k: int | None
    seconds: float
    predicted_phase: float | None = None
    magnitude: float | None = None
    phase: float | None = None
    verified: bool | None = None

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "kind": self.kind,
            "magnitude": self.magnitude,
            "phase": self.phase,
            "predicted_phase": self.predicted_phase,
            "time": {"seconds": self.seconds, "tau_k": self.tau_k},
            "u": self.u,
            "v": self.v,
            "verified": self.verified,
        }


@dataclass
class Premise:
    name: str
    holds: bool
    detail: str

    def to_dict(self) -> dict:
        return {"detail": self.detail, "holds": self.holds, "name": self.name}


@dataclass
class PstReport:
    n: int
    m: int
    rank: int
    connected: bool
    parity: ParityClass
    k: int
    rows: list[str]
    omega_star: list[str]
    column_sum_omega_star: str
    claims: list[Claim]
    premises: list[Premise]
    tol: float
    reduction_residual: float | None = None

    @property
    def all_premises_hold(self) -> bool:
        return all(p.holds for p in self.premises)

    @property
    def all_claims_verified(self) -> bool:
        return all(c.verified for c in self.claims if c.verified is not None)

    def to_dict(self) -> dict:
        return {
            "all_claims_verified": self.all_claims_verified,
            "all_premises_hold": self.all_premises_hold,
            "claims": [c.to_dict() for c in self.claims],
            "column_sum_omega_star": self.column_sum_omega_star,
            "connected": self.connected,
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "omega_star": self.omega_star,
            "parity": self.parity.value,
            "premises": [p.to_dict() for p in self.premises],
            "rank": self.rank,
            "reduction_residual": self.reduction_residual,
            "rows": self.rows,
            "tol": self.tol,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _predicted_phase(sign: int) -> float:
    return 0.0 if sign > 0 else math.pi


def _coordinate_claims(
    n: int,
    column_basis: Basis,
    sign: int,
    tau_k: int | None,
    seconds: float,
    structural: bool,
) -> list[Claim]:
    # column_basis decides the per-coordinate verdict: an odd count of ones in
    # column j gives a transfer pair, an even count two periodic vertices.
    predicted = _predicted_phase(sign) if structural else None
    claims = []
    for j in range(1, n + 1):
        ones = sum(row.bit(j - 1) for row in column_basis.rows)
        u, v = pst_pair_indices(n, j)
        if ones % 2:
            claims.append(Claim(j, "pst", u, v, tau_k, seconds, predicted))
        else:
            claims.append(Claim(j, "periodic", u, u, tau_k, seconds, predicted))
            claims.append(Claim(j, "periodic", v, v, tau_k, seconds, predicted))
    c = center_index(n)
    claims.append(Claim(None, "periodic", c, c, tau_k, seconds, predicted))
    return claims


def _verify_claims(
    claims: list[Claim], h: np.ndarray, tol: float, predicted_value: complex | None
) -> None:
    # With a structural prediction, verification pins the exact complex entry;
    # otherwise only the unit magnitude is checked.
    for claim in claims:
        entry = complex(h[claim.u, claim.v])
        claim.magnitude = abs(entry)
        claim.phase = math.atan2(entry.imag, entry.real)
        if predicted_value is None:
            claim.verified = abs(claim.magnitude - 1.0) <= tol
        else:
            claim.verified = abs(entry - predicted_value) <= tol


def classify_uniform_weight(
    basis: Basis, tol: float = DEFAULT_TOL, verify: bool = True
) -> PstReport:
    """Per-coordinate transfer/periodicity verdicts for a uniform-weight basis.

    Every row must have the same weight k. Coordinate j gets a transfer pair
    at the prescribed time when column j has an odd number of ones, two
    periodic vertices otherwise; the all-2 vertex is periodic in every case.
    """
    weights = {weight(row) for row in basis.rows}
    if len(weights) != 1:
        raise ValueError("all rows must share a single weight")
    k = weights.pop()
    sign = -1 if basis.m % 2 else 1
    t = tau(k)
    claims = _coordinate_claims(basis.n, basis, sign, k, t.value(), structural=True)
    if verify:
        h = product_transition(basis, t)
        _verify_claims(claims, h, tol, complex(sign))
    rank = rank_gf2(basis)
    return PstReport(
        n=basis.n,
        m=basis.m,
        rank=rank,
        connected=rank == basis.n,
        parity=parity_class(basis),
        k=k,
        rows=basis.row_strings(),
        omega_star=basis.row_strings(),
        column_sum_omega_star=column_sum(basis).to_string(),
        claims=claims,
        premises=[Premise("uniform_weight", True, f"all rows have weight {k}")],
        tol=tol,
    )


def min_weight_reduction(basis: Basis) -> tuple[Basis, float]:
    """Minimum-weight sub-basis and the max-entry gap between both transitions.

    When all row weights share a parity, the transition matrix of the full
    basis at the prescribed time of the minimum weight k equals the one of
    the weight-k rows alone; the returned residual measures that equality.
    """
    if parity_class(basis) is ParityClass.MIXED:
        raise ValueError("row weights must share a parity")
    k, star = min_weight_subset(basis)
    t = tau(k)
    h_full = product_transition(basis, t)
    if star.rows == basis.rows:
        return star, 0.0
    return star, max_entry_diff(h_full, product_transition(star, t))


def analyze_basis(
    basis: Basis,
    tol: float = DEFAULT_TOL,
    numeric_cap: int = DEFAULT_NUMERIC_CAP,
    time_override: Time | None = None,
) -> PstReport:
    """Full checker: premises, derived claims, and numeric confirmation.

    Premises, in order: full rank over GF(2) (equivalent to connectivity),
    a shared weight parity, and a nonzero column sum of the minimum-weight
    rows. Claims are derived from the minimum-weight rows whenever the
    parity is uniform, even if other premises fail; numeric verification
    runs when n is within numeric_cap. A time_override replaces the
    prescribed time for verification, in which case only magnitudes are
    checked.
    """
    n, m = basis.n, basis.m
    rank = rank_gf2(basis)
    parity = parity_class(basis)
    k, star = min_weight_subset(basis)
    colsum = column_sum(star)
    row_weights = sorted({weight(row) for row in basis.rows})
    premises = [
        Premise("rank_full", rank == n, f"rank {rank} of {n}"),
        Premise(
            "uniform_parity",
            parity is not ParityClass.MIXED,
            f"row weights {row_weights}",
        ),
        Premise(
            "omega_star_sum_nonzero",
            colsum.word != 0,
            f"minimum-weight rows sum to {colsum}",
        ),
    ]
    claims: list[Claim] = []
    residual = None
    if parity is not ParityClass.MIXED:
        sign = -1 if star.m % 2 else 1
        default_time = tau(k)
        structural = time_override is None or time_override == default_time
        t = default_time if time_override is None else time_override
        tau_k = t.k if isinstance(t, TauTime) else None
        claims = _coordinate_claims(n, star, sign, tau_k, time_value(t), structural)
        if n <= numeric_cap:
            h = product_transition(basis, t)
            _verify_claims(claims, h, tol, complex(sign) if structural else None)
            if star.rows == basis.rows:
                residual = 0.0
            else:
                h_k = h if structural else product_transition(basis, default_time)
                residual = max_entry_diff(h_k, product_transition(star, default_time))
    return PstReport(
        n=n,
        m=m,
        rank=rank,
        connected=rank == n,
        parity=parity,
        k=k,
        rows=basis.row_strings(),
        omega_star=star.row_strings(),
        column_sum_omega_star=colsum.to_string(),
        claims=claims,
        premises=premises,
        tol=tol,
        reduction_residual=residual,
    )


@dataclass
class EigenvalueCheck:
    eigenvalue: float
    ratio: float
    holds: bool

    def to_dict(self) -> dict:
        return {"eigenvalue": self.eigenvalue, "holds": self.holds, "ratio": self.ratio}


@dataclass
class KroneckerLiftReport:
    """Verdict for the Kronecker product of a NEPS with a second graph."""

    base: PstReport
    r: float
    g_order: int
    eigenvalue_checks: list[EigenvalueCheck]
    premises: list[Premise]
    claims: list[Claim]
    product_components: int | None
    product_connected: bool | None
    tol: float

    @property
    def all_premises_hold(self) -> bool:
        return all(p.holds for p in self.premises)

    @property
    def all_claims_verified(self) -> bool:
        return all(c.verified for c in self.claims if c.verified is not None)

    def to_dict(self) -> dict:
        return {
            "all_claims_verified": self.all_claims_verified,
            "all_premises_hold": self.all_premises_hold,
            "base": self.base.to_dict(),
            "claims": [c.to_dict() for c in self.claims],
            "eigenvalue_checks": [e.to_dict() for e in self.eigenvalue_checks],
            "g_order": self.g_order,
            "premises": [p.to_dict() for p in self.premises],
            "product_components": self.product_components,
            "product_connected": self.product_connected,
            "r": self.r,
            "tol": self.tol,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def kronecker_product_check(
    basis: Basis,
    g_adjacency: np.ndarray,
    r: float,
    tol: float = DEFAULT_TOL,
    numeric_cap: int = DEFAULT_NUMERIC_CAP,
    odd_tol: float = 1e-8,
) -> KroneckerLiftReport:
    """Transfer check for NEPS x G at the prescribed time divided by r.

    Requires every eigenvalue of G divided by r to be an odd integer (within
    odd_tol) on top of the base premises. When everything holds, the product
    transition matrix is assembled over G's spectral projectors and transfer
    is confirmed at every lifted pair ((u, w), (v, w)); connectivity of the
    product is reported by component count.
    """
    if r == 0:
        raise ValueError("scale r must be nonzero")
    base = analyze_basis(basis, tol=tol, numeric_cap=numeric_cap)
    g = np.asarray(g_adjacency, dtype=float)
    decomp = eigendecompose(g)
    checks = []
    for lam in decomp.eigenvalues:
        ratio = lam / r
        nearest = round(ratio)
        holds = abs(ratio - nearest) <= odd_tol and nearest % 2 == 1
        checks.append(EigenvalueCheck(lam, ratio, holds))
    premises = list(base.premises) + [
        Premise(
            "g_eigenvalues_odd",
            all(c.holds for c in checks),
            f"eigenvalue/r ratios {[round(c.ratio, 6) for c in checks]}",
        )
    ]
    claims: list[Claim] = []
    product_components = None
    product_connected = None
    if all(p.holds for p in premises) and basis.n <= numeric_cap:
        k = base.k
        p_order = g.shape[0]
        h = np.zeros((3**basis.n * p_order,) * 2, dtype=complex)
        for lam, proj in zip(decomp.eigenvalues, decomp.projectors):
            h += np.kron(product_transition(basis, tau(k).scaled(lam / r)), proj)
        sign = -1 if len(base.omega_star) % 2 else 1
        seconds = tau(k).value() / r
        tau_k = k if r == 1 else None
        for c in base.claims:
            if c.kind != "pst":
                continue
            for w in range(p_order):
                claims.append(
                    Claim(
                        c.j,
                        "pst",
                        c.u * p_order + w,
                        c.v * p_order + w,
                        tau_k,
                        seconds,
                        _predicted_phase(sign),
                    )
                )
        _verify_claims(claims, h, tol, complex(sign))
        count, _ = connected_components(kron(neps_adjacency(basis), g))
        product_components = count
        product_connected = count == 1
    return KroneckerLiftReport(
        base=base,
        r=float(r),
        g_order=g.shape[0],
        eigenvalue_checks=checks,
        premises=premises,
        claims=claims,
        product_components=product_components,
        product_connected=product_connected,
        tol=tol,
    )
