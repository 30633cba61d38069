import galois
import numpy as np
import pytest

from colexcode import gf2
from colexcode.errors import EnumerationCapError

GF2 = galois.GF(2)


def random_matrices(count=20, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        num_rows, num_cols = rng.integers(1, 12, size=2)
        yield rng.integers(0, 2, size=(num_rows, num_cols), dtype=np.uint8)


def test_weight_support_roundtrip():
    assert gf2.weight(0b1011) == 3
    assert gf2.parity(0b1011) == 1
    assert gf2.support(0b1011) == [0, 1, 3]
    assert gf2.bits_from_support([0, 1, 3]) == 0b1011


def test_bit_vector_rejects_out_of_range():
    with pytest.raises(ValueError):
        gf2.BitVector(3, 0b1000)
    with pytest.raises(ValueError):
        gf2.BitVector.from_support(3, [3])
    with pytest.raises(ValueError):
        gf2.BitVector(3, 1) ^ gf2.BitVector(4, 1)


def test_bit_vector_dot():
    u = gf2.BitVector.from_support(5, [0, 2, 4])
    v = gf2.BitVector.from_support(5, [2, 4])
    assert u.dot(v) == 0
    assert u.dot(gf2.BitVector.from_support(5, [0])) == 1


@pytest.mark.parametrize('array', list(random_matrices()))
def test_rank_matches_galois(array):
    assert gf2.rank(gf2.BitMatrix.from_array(array)) == np.linalg.matrix_rank(GF2(array))


@pytest.mark.parametrize('array', list(random_matrices(seed=1)))
def test_row_echelon_matches_galois(array):
    rows, pivots = gf2.row_echelon(gf2.BitMatrix.from_array(array))
    expected = GF2(array).row_reduce()
    expected = expected.view(np.ndarray)[:len(rows)].astype(np.uint8)
    np.testing.assert_array_equal(gf2.BitMatrix(rows, array.shape[1]).to_array(), expected)
    assert pivots == sorted(pivots)


@pytest.mark.parametrize('array', list(random_matrices(seed=2)))
def test_kernel_basis(array):
    M = gf2.BitMatrix.from_array(array)
    K = gf2.kernel_basis(M)
    assert K.num_rows == M.num_cols - gf2.rank(M)
    assert gf2.rank(K) == K.num_rows
    if K.num_rows:
        assert not np.any((array.astype(int) @ K.to_array().T.astype(int)) % 2)


def test_transpose_and_multiply():
    array = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    M = gf2.BitMatrix.from_array(array)
    np.testing.assert_array_equal(M.transpose().to_array(), array.T)
    assert M.multiply_vector(0b101) == gf2.bits_from_support([1])
    assert M.multiply_vector(gf2.BitVector(3, 0b111)) == gf2.bits_from_support([])


def test_in_row_space_and_solve_combination():
    M = gf2.BitMatrix.from_supports([[0, 1], [1, 2], [0, 2]], 4)
    assert gf2.in_row_space(M, gf2.bits_from_support([0, 2]))
    assert not gf2.in_row_space(M, gf2.bits_from_support([3]))
    target = gf2.bits_from_support([0, 2])
    combination = gf2.solve_combination(M, target)
    total = 0
    for i in gf2.support(combination):
        total ^= M.rows[i]
    assert total == target
    assert gf2.solve_combination(M, gf2.bits_from_support([3])) is None


def test_extend_basis_skips_dependent_candidates():
    base = gf2.BitMatrix.from_supports([[0, 1]], 3)
    chosen = gf2.extend_basis(base, [0b011, 0b001, 0b010, 0b100])
    assert chosen == [0b001, 0b100]


def test_enumerate_span_visits_every_element_once():
    B = gf2.BitMatrix.from_supports([[0, 1], [1, 2], [3]], 4)
    elements = list(gf2.enumerate_span(B))
    assert len(elements) == 8
    assert len(set(elements)) == 8
    assert elements[0] == 0
    for a, b in zip(elements, elements[1:]):
        assert a ^ b in B.rows


def test_enumerate_span_coset():
    B = gf2.BitMatrix.from_supports([[0], [1]], 3)
    assert sorted(gf2.enumerate_span(B, offset=0b100)) == [0b100, 0b101, 0b110, 0b111]


def test_enumerate_span_rejects_dependent_rows():
    with pytest.raises(ValueError):
        gf2.enumerate_span(gf2.BitMatrix([0b11, 0b11], 2))


def test_enumerate_span_cap():
    B = gf2.BitMatrix.identity(10)
    with pytest.raises(EnumerationCapError):
        gf2.enumerate_span(B, cap=1 << 9)


def test_enumerate_subset_sums_allows_dependent_rows():
    sums = list(gf2.enumerate_subset_sums([0b11, 0b11]))
    assert sorted(sums) == [0, 0, 0b11, 0b11]


def test_popcount_array():
    np.testing.assert_array_equal(gf2.popcount_array([0, 1, 3, 255, 1 << 40]), [0, 1, 2, 8, 1])
