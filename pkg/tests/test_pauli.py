import itertools

import numpy as np
import pytest

from colexcode import pauli
from colexcode.pauli import PauliOp


def all_paulis(n, phases=(0,)):
    for x, z, phase in itertools.product(range(1 << n), range(1 << n), phases):
        yield PauliOp(n, x, z, phase)


def transversal_cnot_matrix(n):
    half = n // 2
    mask = (1 << half) - 1
    U = np.zeros((1 << n, 1 << n))
    for index in range(1 << n):
        U[index ^ ((index & mask) << half), index] = 1
    return U


def test_labels():
    assert PauliOp(3, x=0b001, z=0b100).to_label() == '+XIZ'
    assert PauliOp(1, x=1, z=1).to_label() == '-iY'
    assert PauliOp(1, x=1, z=1, phase=1).to_label() == '+Y'
    assert PauliOp.identity(2).to_label() == '+II'


def test_rejects_support_beyond_size():
    with pytest.raises(ValueError):
        PauliOp(2, x=0b100)


def test_from_support():
    assert pauli.from_support('X', [0, 2], 3) == PauliOp(3, x=0b101)
    assert pauli.from_support('z', [1], 3) == PauliOp(3, z=0b010)
    with pytest.raises(ValueError):
        pauli.from_support('Y', [1], 3)


def test_weight_and_types():
    P = PauliOp(4, x=0b0011, z=0b0110)
    assert P.weight == 3
    assert P.support() == [0, 1, 2]
    assert not P.is_x_type and not P.is_z_type
    assert pauli.from_support('X', [1], 4).is_x_type


def test_multiply_matches_matrices():
    for P, Q in itertools.product(all_paulis(2, phases=(0, 1)), repeat=2):
        np.testing.assert_allclose((P * Q).to_matrix(), P.to_matrix() @ Q.to_matrix(), atol=1e-12)


def test_commutes_matches_matrices():
    for P, Q in itertools.product(all_paulis(2), repeat=2):
        A, B = P.to_matrix(), Q.to_matrix()
        assert pauli.commutes(P, Q) == np.allclose(A @ B, B @ A)


def test_size_mismatch():
    with pytest.raises(ValueError):
        pauli.commutes(PauliOp(2), PauliOp(3))


def test_tensor():
    P = PauliOp(2, x=0b01, phase=2)
    Q = PauliOp(2, z=0b10)
    T = pauli.tensor(P, Q)
    assert T == PauliOp(4, x=0b0001, z=0b1000, phase=2)


def test_transversal_cnot_matches_matrix():
    U = transversal_cnot_matrix(4)
    for P in all_paulis(4, phases=(0, 1)):
        expected = U @ P.to_matrix() @ U.T
        np.testing.assert_allclose(pauli.conjugate_by_transversal_cnot(P).to_matrix(), expected, atol=1e-12)
