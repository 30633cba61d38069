import itertools

import pytest

from colexcode import decoder, gf2, metrics
from colexcode.code import Syndrome, syndrome
from colexcode.errors import DistanceRefutedError
from colexcode.pauli import PauliOp


@pytest.fixture(scope='module')
def lookup(tetra_code):
    return decoder.build_lookup(tetra_code, 3)


def test_table_sizes(lookup):
    assert lookup.t == 1
    # the empty error and the 15 single-qubit errors all have distinct syndromes
    assert len(lookup.x_table.table) == 16
    assert len(lookup.z_table.table) == 16


def test_corrects_every_error_up_to_t(tetra_code, lookup):
    for site in range(tetra_code.n):
        for x, z in ((1, 0), (0, 1), (1, 1)):
            E = PauliOp(tetra_code.n, x=x << site, z=z << site)
            decoding = decoder.decode(lookup, syndrome(tetra_code, E))
            assert not decoding.best_effort
            assert tetra_code.in_x_stabilizers(decoding.correction.x ^ E.x)
            assert tetra_code.in_z_stabilizers(decoding.correction.z ^ E.z)


def test_best_effort_reproduces_syndrome(tetra_code, lookup):
    for support in itertools.combinations(range(tetra_code.n), 2):
        bits = gf2.bits_from_support(support)
        s = tetra_code.hx.multiply_vector(bits)
        correction, _ = lookup.decode_bits('z', s)
        assert tetra_code.hx.multiply_vector(correction) == s


def test_overclaimed_distance_is_refuted(tetra_code):
    with pytest.raises(DistanceRefutedError) as excinfo:
        decoder.build_lookup(tetra_code, 5)
    assert excinfo.value.kind == 'Z'
    assert excinfo.value.weight in (3, 4)


def test_lookup_needs_one_qubit(tesseract_code):
    with pytest.raises(ValueError):
        decoder.build_lookup(tesseract_code, 3)


def test_decode_rejects_foreign_syndrome(lookup):
    with pytest.raises(ValueError):
        decoder.decode(lookup, Syndrome(frozenset([4]), frozenset()))
    with pytest.raises(ValueError):
        lookup.table_for('y')


@pytest.mark.parametrize('basis', ['z', 'x'])
def test_simulate_measurement(tetra_code, lookup, basis):
    for logical_value in (0, 1):
        outcome = decoder.simulate_measurement(tetra_code, lookup, logical_value, 0.0, basis=basis, seed=1)
        assert outcome.decoded == logical_value
        assert not outcome.best_effort
        for site in range(tetra_code.n):
            outcome = decoder.simulate_measurement(tetra_code, lookup, logical_value, 0.0, basis=basis,
                                                   seed=site, flips=[site])
            assert outcome.decoded == logical_value
            assert len(outcome.raw_bits) == tetra_code.n


def test_simulate_measurement_checks_arguments(tetra_code, lookup):
    with pytest.raises(ValueError):
        decoder.simulate_measurement(tetra_code, lookup, 2, 0.01)
    with pytest.raises(ValueError):
        decoder.simulate_measurement(tetra_code, lookup, 0, 0.5)
    with pytest.raises(ValueError):
        decoder.simulate_measurement(tetra_code, lookup, 0, 0.01, basis='y')


def test_noiseless_monte_carlo(tetra_code, lookup):
    report, = decoder.monte_carlo(tetra_code, lookup, [0.0], 2000, seed=0)
    assert report.failures == 0
    assert report.best_effort_count == 0
    assert report.logical_rate == 0.0
    assert report.confidence_interval()[0] == 0.0


def test_monte_carlo_is_reproducible(tetra_code, lookup):
    kwargs = dict(p_grid=[0.02, 0.05], trials=3000, seed=11, basis='both', shard_size=1000)
    first = decoder.monte_carlo(tetra_code, lookup, threads=1, **kwargs)
    second = decoder.monte_carlo(tetra_code, lookup, threads=3, **kwargs)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]


def test_monte_carlo_report(tetra_code, lookup):
    report, = decoder.monte_carlo(tetra_code, lookup, [0.05], 4000, seed=5, basis='x')
    report_dict = report.to_dict()
    assert set(report_dict) == {'p', 'trials', 'failures', 'rate', 'seed', 'rng_id', 'best_effort_count',
                                'basis', 'ci'}
    assert report_dict['rng_id'] == 'PCG64'
    assert 0 < report.failures < report.trials
    low, high = report_dict['ci']
    assert low <= report.logical_rate <= high


def test_monte_carlo_checks_arguments(tetra_code, lookup):
    with pytest.raises(ValueError):
        decoder.monte_carlo(tetra_code, lookup, [0.6], 10, seed=0)
    with pytest.raises(ValueError):
        decoder.monte_carlo(tetra_code, lookup, [0.1], 10, seed=0, basis='y')


def test_clopper_pearson():
    assert metrics.clopper_pearson(0, 0) == (0.0, 1.0)
    low, high = metrics.clopper_pearson(5, 100)
    assert 0 < low < 0.05 < high < 1
    assert metrics.clopper_pearson(100, 100)[1] == 1.0


def test_loglog_slope():
    assert metrics.loglog_slope(0.01, 1e-4, 0.02, 4e-4) == pytest.approx(2)
    assert metrics.loglog_slope(0.01, 0.0, 0.02, 4e-4) is None


def test_logical_rate_is_monotone(tetra_code, lookup):
    low, high = decoder.monte_carlo(tetra_code, lookup, [0.01, 0.05], 100000, seed=42)
    assert low.logical_rate < high.logical_rate


def test_logical_rate_scaling(tetra_code, lookup):
    low, high = decoder.monte_carlo(tetra_code, lookup, [0.005, 0.02], 1000000, seed=42)
    assert 0 < low.logical_rate < high.logical_rate
    slope = metrics.loglog_slope(low.p, low.logical_rate, high.p, high.logical_rate)
    assert slope >= lookup.t + 0.5
