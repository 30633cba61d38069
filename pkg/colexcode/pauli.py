"""
Pauli operators in symplectic form.

An operator is stored as i^phase * X^x * Z^z, where on every qubit the X
factor is written to the left of the Z factor. A qubit with both bits set
therefore carries XZ = -iY; `to_label` folds those factors back into Y.
"""
import functools

import numpy as np

from colexcode import gf2

_PHASE_PREFIXES = ('+', '+i', '-', '-i')


class PauliOp(object):
    __slots__ = ('n', 'x', 'z', 'phase')

    def __init__(self, n, x=0, z=0, phase=0):
        if x >> n or z >> n:
            raise ValueError('support exceeds %d qubits' % n)
        self.n = n
        self.x = x
        self.z = z
        self.phase = phase % 4

    @classmethod
    def identity(cls, n):
        return cls(n)

    @property
    def x_support(self):
        return gf2.BitVector(self.n, self.x)

    @property
    def z_support(self):
        return gf2.BitVector(self.n, self.z)

    @property
    def weight(self):
        return gf2.weight(self.x | self.z)

    @property
    def is_x_type(self):
        return self.z == 0

    @property
    def is_z_type(self):
        return self.x == 0

    def support(self):
        return gf2.support(self.x | self.z)

    def to_label(self):
        """Renders the operator as a phase prefix and a string over {I,X,Y,Z}, qubit 0 first."""
        letters = []
        num_y = 0
        for j in range(self.n):
            xj, zj = (self.x >> j) & 1, (self.z >> j) & 1
            if xj and zj:
                letters.append('Y')
                num_y += 1
            elif xj:
                letters.append('X')
            elif zj:
                letters.append('Z')
            else:
                letters.append('I')
        # each XZ factor equals -iY
        return _PHASE_PREFIXES[(self.phase - num_y) % 4] + ''.join(letters)

    def to_matrix(self):
        if self.n > 10:
            raise ValueError('dense matrices are limited to 10 qubits, got %d' % self.n)
        x_gate = np.array([[0, 1], [1, 0]], dtype=complex)
        z_gate = np.array([[1, 0], [0, -1]], dtype=complex)
        factors = []
        for j in range(self.n):
            factor = np.eye(2, dtype=complex)
            if (self.x >> j) & 1:
                factor = factor @ x_gate
            if (self.z >> j) & 1:
                factor = factor @ z_gate
            factors.append(factor)
        # qubit j is bit j of the basis index, so qubit 0 is the rightmost factor
        matrix = functools.reduce(np.kron, reversed(factors), np.eye(1, dtype=complex))
        return (1j ** self.phase) * matrix

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, PauliOp) and self.n == other.n and self.x == other.x
                and self.z == other.z and self.phase == other.phase)

    def __hash__(self):
        return hash((self.n, self.x, self.z, self.phase))

    def __repr__(self):
        return 'PauliOp(%s)' % self.to_label()


def from_support(kind, sites, n):
    """B_S^X or B_S^Z: the tensor product of X (or Z) over the qubits in `sites`."""
    bits = gf2.BitVector.from_support(n, sites).bits
    if kind in ('X', 'x'):
        return PauliOp(n, x=bits)
    elif kind in ('Z', 'z'):
        return PauliOp(n, z=bits)
    else:
        raise ValueError('Unknown Pauli kind %r' % (kind,))


def _check_sizes(P, Q):
    if P.n != Q.n:
        raise ValueError('size mismatch: %d != %d qubits' % (P.n, Q.n))


def commutes(P, Q):
    _check_sizes(P, Q)
    return gf2.parity((P.x & Q.z) ^ (P.z & Q.x)) == 0


def multiply(P, Q):
    _check_sizes(P, Q)
    # moving Z^{z1} past X^{x2} picks up (-1)^{|z1 & x2|}
    phase = P.phase + Q.phase + 2 * gf2.weight(P.z & Q.x)
    return PauliOp(P.n, P.x ^ Q.x, P.z ^ Q.z, phase)


def tensor(P, Q):
    """P on qubits 0..P.n-1 followed by Q on the next Q.n qubits."""
    return PauliOp(P.n + Q.n, P.x | (Q.x << P.n), P.z | (Q.z << P.n), P.phase + Q.phase)


def conjugate_by_transversal_cnot(P):
    """
    Conjugates P by CNOT applied pairwise between two equal registers: qubit j
    of the first register controls qubit j of the second.

    X on a control spreads to its target, Z on a target spreads to its control;
    the X-before-Z ordering survives conjugation, so the phase is unchanged.
    """
    if P.n % 2:
        raise ValueError('transversal CNOT needs an even number of qubits, got %d' % P.n)
    half = P.n // 2
    mask = (1 << half) - 1
    x1, x2 = P.x & mask, P.x >> half
    z1, z2 = P.z & mask, P.z >> half
    x2 ^= x1
    z1 ^= z2
    return PauliOp(P.n, x1 | (x2 << half), z1 | (z2 << half), P.phase)
