import itertools

import numpy as np
import pytest

from neps_pst import (
    Basis,
    BitVector,
    ParityClass,
    basis_from_json,
    basis_to_json,
    column_sum,
    complement_identity_basis,
    construct_basis,
    identity_basis,
    min_weight_subset,
    parity_class,
    rank_gf2,
    swap_coordinates,
    weight,
)
from neps_pst.gf2 import _word_rank

from helpers import random_basis, span_rank_oracle


def test_weight_basics():
    assert weight(BitVector.from_string("100")) == 1
    assert weight(BitVector.from_string("0000")) == 0
    for row in complement_identity_basis(4).rows:
        assert weight(row) == 3


def test_weight_matches_naive_count_exhaustively():
    for n in range(1, 5):
        for bits in itertools.product((0, 1), repeat=n):
            assert weight(BitVector.from_bits(bits)) == sum(bits)


def test_bitvector_string_round_trip():
    v = BitVector.from_string("10110")
    assert v.bits() == (1, 0, 1, 1, 0)
    assert v.to_string() == "10110"
    assert [v.bit(j) for j in range(5)] == [1, 0, 1, 1, 0]


def test_bitvector_rejects_bad_input():
    with pytest.raises(ValueError):
        BitVector.from_string("10x1")
    with pytest.raises(ValueError):
        BitVector.from_string("")
    with pytest.raises(ValueError):
        BitVector(0, 0)
    with pytest.raises(ValueError):
        BitVector(65, 0)
    with pytest.raises(ValueError):
        BitVector(2, 5)
    with pytest.raises(IndexError):
        BitVector.from_string("11").bit(2)


def test_basis_invariants():
    with pytest.raises(ValueError):
        Basis(2, ())
    with pytest.raises(ValueError):
        Basis.from_strings(["10", "10"])
    with pytest.raises(ValueError):
        Basis.from_strings(["10", "00"])
    with pytest.raises(ValueError):
        Basis(3, (BitVector.from_string("10"),))


def test_rank_identity_and_complement():
    assert rank_gf2(identity_basis(3)) == 3
    assert rank_gf2(complement_identity_basis(4)) == 4
    # n = 3: row1 + row2 = row3 over GF(2), hand-checked
    assert rank_gf2(complement_identity_basis(3)) == 2


def test_rank_matches_span_oracle():
    rng = np.random.default_rng(7)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        basis = random_basis(rng, n)
        words = [row.word for row in basis.rows]
        assert rank_gf2(basis) == span_rank_oracle(words)


def test_rank_invariant_under_permutation_and_duplicates():
    rng = np.random.default_rng(11)
    for _ in range(25):
        basis = random_basis(rng, 4)
        words = [row.word for row in basis.rows]
        r = _word_rank(words)
        perm = list(rng.permutation(words))
        assert _word_rank(perm) == r
        assert _word_rank(words + [words[0]]) == r


def test_column_sum():
    for n in (2, 3, 5):
        assert column_sum(identity_basis(n)).to_string() == "1" * n
    assert column_sum(complement_identity_basis(4)).to_string() == "1111"
    assert column_sum(complement_identity_basis(3)).to_string() == "000"
    assert column_sum(Basis.from_strings(["11"])).to_string() == "11"


def test_parity_class():
    odd = Basis.from_strings(["100", "010", "001", "111"])
    assert parity_class(odd) is ParityClass.ALL_ODD
    even = Basis.from_strings(["110", "011"])
    assert parity_class(even) is ParityClass.ALL_EVEN
    mixed = Basis.from_strings(["10", "11"])
    assert parity_class(mixed) is ParityClass.MIXED


def test_min_weight_subset():
    basis = Basis.from_strings(["100", "010", "001", "111"])
    k, star = min_weight_subset(basis)
    assert k == 1
    assert star.row_strings() == ["100", "010", "001"]

    k, star = min_weight_subset(complement_identity_basis(4))
    assert k == 3
    assert star.rows == complement_identity_basis(4).rows

    k, star = min_weight_subset(Basis.from_strings(["111"]))
    assert k == 3
    assert star.row_strings() == ["111"]


def test_min_weight_subset_complement_weights_are_larger():
    rng = np.random.default_rng(3)
    for _ in range(25):
        basis = random_basis(rng, 4)
        k, star = min_weight_subset(basis)
        star_words = {row.word for row in star.rows}
        assert all(weight(row) == k for row in star.rows)
        assert all(weight(row) > k for row in basis.rows if row.word not in star_words)


def test_construct_basis_base_cases():
    assert construct_basis(2, 1).row_strings() == ["10", "01"]
    assert construct_basis(3, 1).row_strings() == ["100", "010", "001"]
    assert construct_basis(4, 3).rows == complement_identity_basis(4).rows


def test_construct_basis_properties():
    for n in range(2, 11):
        for k in range(1, n, 2):
            basis = construct_basis(n, k)
            assert basis.m == n
            assert all(weight(row) == k for row in basis.rows)
            assert rank_gf2(basis) == n
            assert column_sum(basis).word != 0


def test_construct_basis_rejects_bad_arguments():
    with pytest.raises(ValueError):
        construct_basis(1, 1)
    with pytest.raises(ValueError):
        construct_basis(4, 2)
    with pytest.raises(ValueError):
        construct_basis(3, 3)
    with pytest.raises(ValueError):
        construct_basis(5, -1)


def test_swap_coordinates():
    basis = Basis.from_strings(["100", "011"])
    swapped = swap_coordinates(basis, 1)
    assert swapped.row_strings() == ["001", "110"]
    assert swap_coordinates(swapped, 1).rows == basis.rows
    assert swap_coordinates(basis, basis.n).rows == basis.rows
    with pytest.raises(ValueError):
        swap_coordinates(basis, 4)


def test_basis_json_round_trip():
    basis = Basis.from_strings(["1110", "1101", "1011", "0111"])
    text = basis_to_json(basis)
    parsed = basis_from_json(text)
    assert parsed.rows == basis.rows
    assert parsed.n == 4


@pytest.mark.parametrize(
    "payload",
    [
        '{"rows": ["10"]}',
        '{"n": 2}',
        '{"n": 2, "rows": ["10", "100"]}',
        '{"n": 2, "rows": ["00", "10"]}',
        '{"n": 2, "rows": ["10", "10"]}',
        '{"n": 2, "rows": [10]}',
        '{"n": "2", "rows": ["10"]}',
        '[1, 2]',
    ],
)
def test_basis_json_rejects_malformed(payload):
    with pytest.raises(ValueError):
        basis_from_json(payload)
