"""
Dense state vectors for up to 20 qubits. Basis index bit j is qubit j.
"""
import cmath
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from colexcode import gf2
from colexcode.code import check_weight_congruence

logger = logging.getLogger(__name__)

MAX_QUBITS = 20
AMPLITUDE_TOLERANCE = 1e-10
NORM_TOLERANCE = 1e-12
K_HALF_PHASE = np.exp(1j * np.pi / 4)


class StateVector(object):
    def __init__(self, n, amplitudes):
        if n > MAX_QUBITS:
            raise ValueError('state vectors are limited to %d qubits, got %d' % (MAX_QUBITS, n))
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (1 << n,):
            raise ValueError('expected %d amplitudes, got shape %s' % (1 << n, amplitudes.shape))
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1) > NORM_TOLERANCE:
            raise ValueError('state is not normalized (norm %r)' % norm)
        self.n = n
        self.amplitudes = amplitudes

    @classmethod
    def basis_state(cls, n, index=0):
        amplitudes = np.zeros(1 << n, dtype=np.complex128)
        amplitudes[index] = 1
        return cls(n, amplitudes)

    @classmethod
    def uniform(cls, n, indices):
        indices = np.asarray(sorted(indices), dtype=np.int64)
        amplitudes = np.zeros(1 << n, dtype=np.complex128)
        amplitudes[indices] = 1 / np.sqrt(len(indices))
        return cls(n, amplitudes)

    def nonzero(self):
        """(index, amplitude) pairs above tolerance, ordered by basis index."""
        indices = np.flatnonzero(np.abs(self.amplitudes) > AMPLITUDE_TOLERANCE)
        return [(int(i), complex(self.amplitudes[i])) for i in indices]

    def to_json(self):
        return [dict(index=i, real=a.real, imag=a.imag) for i, a in self.nonzero()]

    def __repr__(self):
        return 'StateVector(n=%d, %d nonzero)' % (self.n, len(self.nonzero()))


def _basis_indices(n):
    return np.arange(1 << n, dtype=np.int64)


def _popcount(indices, mask):
    return gf2.popcount_array(indices & mask)


def _check_code(code):
    if code.n > MAX_QUBITS:
        raise ValueError('code has %d qubits, state vectors are limited to %d' % (code.n, MAX_QUBITS))
    if code.k != 1:
        raise ValueError('encoding needs k=1, code has k=%d' % code.k)


def encode_zero(code, cap=gf2.DEFAULT_ENUMERATION_CAP):
    """|0> encoded: the uniform superposition over the X-stabilizer space V."""
    _check_code(code)
    return StateVector.uniform(code.n, gf2.enumerate_span(gf2.independent_rows(code.hx), cap=cap))


def encode_one(code, cap=gf2.DEFAULT_ENUMERATION_CAP):
    return apply_pauli(encode_zero(code, cap=cap), code.logical_x[0])


def encode_plus(code, cap=gf2.DEFAULT_ENUMERATION_CAP):
    zero, one = encode_zero(code, cap=cap), encode_one(code, cap=cap)
    return StateVector(code.n, (zero.amplitudes + one.amplitudes) / np.sqrt(2))


def encode_zero_by_projectors(code):
    """prod_c (1 + B_c^X)/2 applied to |0...0>, then normalized."""
    _check_code(code)
    amplitudes = StateVector.basis_state(code.n).amplitudes
    indices = _basis_indices(code.n)
    for row in code.hx.rows:
        amplitudes = (amplitudes + amplitudes[indices ^ row]) / 2
    return StateVector(code.n, amplitudes / np.linalg.norm(amplitudes))


def apply_pauli(state, P):
    """i^phase X^x Z^z: Z first, then the X bit flips."""
    if P.n != state.n:
        raise ValueError('operator acts on %d qubits, state has %d' % (P.n, state.n))
    indices = _basis_indices(state.n)
    signs = 1 - 2 * (_popcount(indices, P.z) & 1)
    amplitudes = state.amplitudes * signs
    # X^x maps |v> to |v ^ x>
    amplitudes = amplitudes[indices ^ P.x]
    return StateVector(state.n, (1j ** P.phase) * amplitudes)


def apply_transversal_k_half(state, repetitions=1):
    """K^{1/2} = diag(1, e^{i pi/4}) on every qubit, `repetitions` times."""
    weights = _popcount(_basis_indices(state.n), (1 << state.n) - 1)
    phases = np.exp(1j * np.pi / 4 * ((weights * repetitions) % 8))
    return StateVector(state.n, state.amplitudes * phases)


def overlap(a, b):
    """<a|b>"""
    if a.n != b.n:
        raise ValueError('size mismatch: %d != %d qubits' % (a.n, b.n))
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def stabilizer_expectations(state, code):
    """(cell expectations, face expectations) of the stabilizer generators."""
    cells = [overlap(state, apply_pauli(state, code.x_stabilizer(i))).real for i in range(code.num_cells)]
    faces = [overlap(state, apply_pauli(state, code.z_stabilizer(j))).real for j in range(code.num_faces)]
    return cells, faces


def check_ground_conditions(state, code):
    if state.n != code.n:
        raise ValueError('state has %d qubits, code has %d' % (state.n, code.n))
    cells, faces = stabilizer_expectations(state, code)
    return all(abs(e - 1) < AMPLITUDE_TOLERANCE for e in cells + faces)


def energy_expectation(state, code):
    cells, faces = stabilizer_expectations(state, code)
    return -(sum(cells) + sum(faces))


@dataclass
class TransversalTReport:
    n: int
    l: int
    repetitions: int
    logical_matrix: list
    zero_phase: complex
    one_phase: complex
    single_layer_zero_phase: complex
    single_layer_one_phase: complex
    fidelity_error: float
    superposition_error: float
    amplitudes: Optional[dict] = None

    @property
    def single_layer_error(self):
        # one layer fixes |0> and multiplies |1> by e^{i l pi/4}
        return max(abs(self.single_layer_zero_phase - 1),
                   abs(self.single_layer_one_phase - K_HALF_PHASE ** self.l))

    @property
    def passed(self):
        return max(self.fidelity_error, self.superposition_error, self.single_layer_error) < AMPLITUDE_TOLERANCE

    def to_dict(self):
        def pair(z):
            return [z.real, z.imag]
        report = dict(passed=self.passed, n=self.n, l=self.l, repetitions=self.repetitions,
                      logical_matrix=[[pair(z) for z in row] for row in self.logical_matrix],
                      zero_phase=pair(self.zero_phase), one_phase=pair(self.one_phase),
                      single_layer_zero_phase=pair(self.single_layer_zero_phase),
                      single_layer_one_phase=pair(self.single_layer_one_phase),
                      single_layer_one_angle=cmath.phase(self.single_layer_one_phase) % (2 * np.pi),
                      fidelity_error=self.fidelity_error, superposition_error=self.superposition_error)
        if self.amplitudes is not None:
            report['amplitudes'] = self.amplitudes
        return report


def verify_transversal_t(code, cap=gf2.DEFAULT_ENUMERATION_CAP, dump_amplitudes=False):
    """
    Applies the transversal K^{1/2} layer r times, with r * l = 1 (mod 8) and
    l = n (mod 8), and measures its action on the encoded basis. With
    `dump_amplitudes` the nonzero amplitudes of the encoded basis states are
    attached to the report.
    """
    _check_code(code)
    congruence = check_weight_congruence(code, cap=cap)
    if not congruence.all_weights_mod8_zero:
        raise ValueError('X-stabilizer weights are not all divisible by 8, the transversal gate is not logical')
    l = code.n % 8
    if l % 2 == 0:
        raise ValueError('n = %d is even mod 8, no repetition count inverts it' % code.n)
    repetitions = pow(l, -1, 8)
    zero, one = encode_zero(code, cap=cap), encode_one(code, cap=cap)
    basis = [zero, one]
    images = [apply_transversal_k_half(state, repetitions) for state in basis]
    # column j holds the image of basis state j
    logical = np.array([[overlap(basis[i], images[j]) for j in range(2)] for i in range(2)])
    target = np.diag([1, K_HALF_PHASE])
    fidelity_error = float(np.max(np.abs(logical - target)))

    plus = encode_plus(code, cap=cap)
    plus_image = apply_transversal_k_half(plus, repetitions)
    predicted = (logical[0, 0] * zero.amplitudes + logical[1, 1] * one.amplitudes) / np.sqrt(2)
    superposition_error = float(np.max(np.abs(plus_image.amplitudes - predicted)))

    report = TransversalTReport(
        n=code.n, l=l, repetitions=repetitions, logical_matrix=logical.tolist(),
        zero_phase=complex(logical[0, 0]), one_phase=complex(logical[1, 1]),
        single_layer_zero_phase=overlap(zero, apply_transversal_k_half(zero, 1)),
        single_layer_one_phase=overlap(one, apply_transversal_k_half(one, 1)),
        fidelity_error=fidelity_error, superposition_error=superposition_error,
        amplitudes=dict(zero=zero.to_json(), one=one.to_json()) if dump_amplitudes else None)
    logger.info('transversal K^1/2: l=%d r=%d fidelity error %.3g', l, repetitions, fidelity_error)
    return report