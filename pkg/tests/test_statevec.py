import cmath

import numpy as np
import pytest

from colexcode import gf2, statevec
from colexcode.code import CssCode, ground_energy
from colexcode.pauli import PauliOp, from_support
from colexcode.statevec import StateVector


@pytest.fixture(scope='module')
def tetra_states(tetra_code):
    return statevec.encode_zero(tetra_code), statevec.encode_one(tetra_code)


def expectation(state, P):
    return statevec.overlap(state, statevec.apply_pauli(state, P)).real


def test_state_vector_checks():
    with pytest.raises(ValueError):
        StateVector(1, [1, 1])
    with pytest.raises(ValueError):
        StateVector(2, [1, 0])
    with pytest.raises(ValueError):
        StateVector.basis_state(statevec.MAX_QUBITS + 1)


def test_apply_pauli_matches_matrix():
    rng = np.random.default_rng(0)
    amplitudes = rng.normal(size=8) + 1j * rng.normal(size=8)
    state = StateVector(3, amplitudes / np.linalg.norm(amplitudes))
    P = PauliOp(3, x=0b011, z=0b110, phase=1)
    np.testing.assert_allclose(statevec.apply_pauli(state, P).amplitudes, P.to_matrix() @ state.amplitudes,
                               atol=1e-12)


def test_encodings_agree(tetra_code, tetra_states):
    zero, _ = tetra_states
    assert len(zero.nonzero()) == 16
    by_projectors = statevec.encode_zero_by_projectors(tetra_code)
    assert abs(statevec.overlap(zero, by_projectors)) == pytest.approx(1)


def test_basis_states(tetra_code, tetra_states):
    zero, one = tetra_states
    assert abs(statevec.overlap(zero, one)) < statevec.AMPLITUDE_TOLERANCE
    assert expectation(zero, tetra_code.logical_z[0]) == pytest.approx(1)
    assert expectation(one, tetra_code.logical_z[0]) == pytest.approx(-1)
    plus = statevec.encode_plus(tetra_code)
    assert expectation(plus, tetra_code.logical_x[0]) == pytest.approx(1)


def test_ground_conditions(tetra_code, tetra_states):
    for state in tetra_states:
        assert statevec.check_ground_conditions(state, tetra_code)
        assert statevec.energy_expectation(state, tetra_code) == pytest.approx(ground_energy(tetra_code))
    excited = statevec.apply_pauli(tetra_states[0], from_support('X', [3], tetra_code.n))
    assert not statevec.check_ground_conditions(excited, tetra_code)


def test_encoding_needs_one_qubit(tesseract_code):
    with pytest.raises(ValueError):
        statevec.encode_zero(tesseract_code)


def test_transversal_k_half(tetra_code):
    report = statevec.verify_transversal_t(tetra_code)
    assert report.passed
    assert (report.l, report.repetitions) == (7, 7)
    assert report.zero_phase == pytest.approx(1, abs=1e-10)
    assert report.one_phase == pytest.approx(cmath.exp(1j * np.pi / 4), abs=1e-10)
    assert report.single_layer_zero_phase == pytest.approx(1, abs=1e-10)
    assert report.single_layer_one_phase == pytest.approx(cmath.exp(7j * np.pi / 4), abs=1e-10)
    assert report.single_layer_error < 1e-10
    assert report.to_dict()['single_layer_one_angle'] == pytest.approx(7 * np.pi / 4, abs=1e-10)
    assert 'amplitudes' not in report.to_dict()


def test_transversal_k_half_rejects_wrong_single_layer_phase(tetra_code):
    report = statevec.verify_transversal_t(tetra_code)
    report.single_layer_one_phase = cmath.exp(1j * np.pi / 4)
    assert not report.passed
    assert not report.to_dict()['passed']


def test_transversal_k_half_amplitude_dump(tetra_code):
    amplitudes = statevec.verify_transversal_t(tetra_code, dump_amplitudes=True).to_dict()['amplitudes']
    assert len(amplitudes['zero']) == 16
    assert len(amplitudes['one']) == 16
    assert amplitudes['zero'][0] == dict(index=0, real=pytest.approx(0.25), imag=pytest.approx(0))


def test_transversal_k_half_needs_congruence():
    H = gf2.BitMatrix.from_supports([[3, 4, 5, 6], [1, 2, 5, 6], [0, 2, 4, 6]], 7)
    with pytest.raises(ValueError):
        statevec.verify_transversal_t(CssCode(H, H))


def test_to_json(tetra_states):
    zero, _ = tetra_states
    entries = zero.to_json()
    assert entries[0]['index'] == 0
    assert entries[0]['real'] == pytest.approx(0.25)
