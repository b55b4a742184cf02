"""Bit vectors and GF(2) basis arithmetic for NEPS basis sets.

Rows are packed into plain ints (coordinate j of n maps to bit j-1), which
keeps rank computation and column sums cheap for every supported length.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

MAX_LENGTH = 64


class ParityClass(Enum):
    """Weight parity of a basis: every row even, every row odd, or mixed."""

    ALL_EVEN = "even"
    ALL_ODD = "odd"
    MIXED = "mixed"


@dataclass(frozen=True)
class BitVector:
    """A length-n vector over GF(2), packed into an int.

    Coordinate j (1-based) is bit j-1 of ``word``. The all-zero vector is a
    valid BitVector; only Basis forbids it as a row.
    """

    n: int
    word: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_LENGTH:
            raise ValueError(f"vector length must be in 1..{MAX_LENGTH}, got {self.n}")
        if self.word < 0 or self.word >> self.n:
            raise ValueError(f"word {self.word:#x} does not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        word = 0
        for j, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit entries must be 0 or 1, got {b!r}")
            word |= b << j
        return cls(len(bits), word)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"row string must be nonempty over {{0,1}}, got {text!r}")
        return cls.from_bits([int(c) for c in text])

    def bit(self, j: int) -> int:
        """Coordinate j, 0-based."""
        if not 0 <= j < self.n:
            raise IndexError(f"coordinate {j} out of range for length {self.n}")
        return (self.word >> j) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple((self.word >> j) & 1 for j in range(self.n))

    def to_string(self) -> str:
        return "".join(str(b) for b in self.bits())

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class Basis:
    """An ordered set of distinct nonzero BitVectors of common length n.

    Doubles as a GF(2) matrix with the vectors as rows; row order is
    preserved everywhere so serialized output is reproducible.
    """

    n: int
    rows: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("basis must contain at least one row")
        if not 1 <= self.n <= MAX_LENGTH:
            raise ValueError(f"basis length must be in 1..{MAX_LENGTH}, got {self.n}")
        seen = set()
        for row in self.rows:
            if row.n != self.n:
                raise ValueError(f"row {row} has length {row.n}, expected {self.n}")
            if row.word == 0:
                raise ValueError("basis rows must be nonzero")
            if row.word in seen:
                raise ValueError(f"duplicate row {row}")
            seen.add(row.word)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "Basis":
        vectors = tuple(BitVector.from_string(r) for r in rows)
        if not vectors:
            raise ValueError("basis must contain at least one row")
        return cls(vectors[0].n, vectors)

    @property
    def m(self) -> int:
        return len(self.rows)

    def row_strings(self) -> list[str]:
        return [row.to_string() for row in self.rows]


def weight(vec: BitVector) -> int:
    """Number of nonzero coordinates."""
    return vec.word.bit_count()


def _word_rank(words: Iterable[int]) -> int:
    """Row rank over GF(2): eliminate against pivots keyed by lowest set bit."""
    pivots: dict[int, int] = {}
    rank = 0
    for w in words:
        while w:
            low = w & -w
            if low in pivots:
                w ^= pivots[low]
            else:
                pivots[low] = w
                rank += 1
                break
    return rank


def rank_gf2(basis: Basis) -> int:
    """Row rank of the basis over GF(2)."""
    return _word_rank(row.word for row in basis.rows)


def column_sum(basis: Basis) -> BitVector:
    """Componentwise mod-2 sum of all rows."""
    acc = 0
    for row in basis.rows:
        acc ^= row.word
    return BitVector(basis.n, acc)


def parity_class(basis: Basis) -> ParityClass:
    parities = {weight(row) % 2 for row in basis.rows}
    if parities == {0}:
        return ParityClass.ALL_EVEN
    if parities == {1}:
        return ParityClass.ALL_ODD
    return ParityClass.MIXED


def min_weight_subset(basis: Basis) -> tuple[int, Basis]:
    """Minimum row weight k and the sub-basis of all weight-k rows, in order."""
    k = min(weight(row) for row in basis.rows)
    rows = tuple(row for row in basis.rows if weight(row) == k)
    return k, Basis(basis.n, rows)


def swap_coordinates(basis: Basis, j: int) -> Basis:
    """Basis with coordinates j and n interchanged in every row (j 1-based)."""
    if not 1 <= j <= basis.n:
        raise ValueError(f"coordinate j must be in 1..{basis.n}, got {j}")
    a, b = j - 1, basis.n - 1
    rows = []
    for row in basis.rows:
        w = row.word
        if ((w >> a) ^ (w >> b)) & 1:
            w ^= (1 << a) | (1 << b)
        rows.append(BitVector(basis.n, w))
    return Basis(basis.n, tuple(rows))


def identity_basis(n: int) -> Basis:
    """Rows of the identity matrix of order n."""
    return Basis(n, tuple(BitVector(n, 1 << j) for j in range(n)))


def complement_identity_basis(n: int) -> Basis:
    """Rows of the all-ones matrix minus the identity (row j has a single 0)."""
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    full = (1 << n) - 1
    return Basis(n, tuple(BitVector(n, full ^ (1 << j)) for j in range(n)))


def construct_basis(n: int, k: int) -> Basis:
    """Build an n-row basis of uniform weight k with full rank over GF(2).

    Requires n >= 2 and odd k < n. Grows column by column from the smallest
    full-rank uniform-weight seed: the identity for k = 1, the complement of
    the identity (order k+1) otherwise. Each growth step appends a zero
    column to the existing rows plus one new row whose first k-1 coordinates
    are 1 and whose last coordinate is 1, which keeps every weight at k and
    raises the rank by one.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if k % 2 == 0 or k < 1:
        raise ValueError(f"k must be a positive odd integer, got {k}")
    if k >= n:
        raise ValueError(f"k must be < n, got k={k}, n={n}")

    if k == 1:
        words = [1, 2]
        size = 2
    else:
        seed = complement_identity_basis(k + 1)
        words = [row.word for row in seed.rows]
        size = k + 1
    while size < n:
        new_row = ((1 << (k - 1)) - 1) | (1 << size)
        words.append(new_row)
        size += 1
    return Basis(n, tuple(BitVector(n, w) for w in words))


def basis_to_json(basis: Basis) -> str:
    return json.dumps({"n": basis.n, "rows": basis.row_strings()}, indent=2, sort_keys=True) + "\n"


def basis_from_json(text: str) -> Basis:
    """Parse the `{"n": ..., "rows": ["0101", ...]}` format.

    Rejects ragged rows, all-zero rows and duplicates.
    """
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "rows" not in data:
        raise ValueError('basis JSON must be an object with "n" and "rows"')
    n = data["n"]
    rows = data["rows"]
    if not isinstance(n, int) or not isinstance(rows, list):
        raise ValueError('"n" must be an integer and "rows" a list of strings')
    vectors = []
    for entry in rows:
        if not isinstance(entry, str):
            raise ValueError(f"row entries must be strings, got {entry!r}")
        if len(entry) != n:
            raise ValueError(f"row {entry!r} has length {len(entry)}, expected n={n}")
        vectors.append(BitVector.from_string(entry))
    return Basis(n, tuple(vectors))
