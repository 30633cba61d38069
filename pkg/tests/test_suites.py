import pytest

from colexcode import suites
from colexcode.utils.report_utils import RunReport


def run_suites(colex, names=suites.SUITE_NAMES, claims=False, **kwargs):
    report = RunReport('verify', dict(suite='test'))
    context = suites.VerificationContext(colex, claims=claims, **kwargs)
    for name in names:
        suites.get_suite_class(name)(context).run(report)
    return report


def test_tetra_outcomes(tetra):
    report = run_suites(tetra)
    assert report.passed
    assert report.outcome('code/distance') == 'disagrees'
    assert report.outcome('code/degeneracy') == 'pass'
    assert report.outcome('code/decoder_cross_check') == 'pass'
    assert report.outcome('congruence/weights_mod8') == 'pass'
    assert report.outcome('transversal/transversal_k_half') == 'pass'
    assert report.outcome('nets/string_net') == 'pass'
    assert report.outcome('nets/membrane_net') == 'pass'
    assert report.outcome('nets/color_combination') == 'skipped'


def test_tesseract_outcomes(tesseract):
    report = run_suites(tesseract)
    assert report.passed
    assert report.outcome('axioms/validate') == 'pass'
    assert report.outcome('code/distance') == 'skipped'
    assert report.outcome('congruence/weights_mod8') == 'skipped'
    assert report.outcome('transversal/transversal_cnot') == 'skipped'
    assert report.outcome('nets/elementary_excitations') == 'pass'


def test_torus_outcomes(torus):
    report = run_suites(torus)
    assert report.passed
    assert report.outcome('axioms/validate') == 'pass'
    assert report.outcome('code/degeneracy') == 'pass'
    assert report.outcome('nets/color_combination') == 'pass'
    assert report.outcome('transversal/transversal_k_half') == 'skipped'


def test_transversal_amplitude_dump(tetra):
    report = RunReport('verify', dict(suite='test'))
    context = suites.VerificationContext(tetra)
    suites.get_suite_class('transversal')(context, hparams='dump_amplitudes=true').run(report)
    check = next(check for check in report.checks if check['name'] == 'transversal/transversal_k_half')
    assert check['outcome'] == 'pass'
    assert len(check['details']['amplitudes']['one']) == 16


def test_distance_cap_skips(tetra):
    report = run_suites(tetra, names=('code',), cap=16)
    assert report.outcome('code/distance') == 'skipped'
    assert report.outcome('code/parameters') == 'pass'


def test_claims_are_attached(tetra):
    report = run_suites(tetra, names=('code',), claims=True)
    check = next(check for check in report.checks if check['name'] == 'code/distance')
    assert check['details']['claimed'] == [15, 1, 5]
    assert check['details']['d'] == 3


def test_suite_hparams():
    context = suites.VerificationContext(None)
    suite = suites.get_suite_class('nets')(context, hparams_dict=dict(samples=5), hparams='seed=9')
    assert (suite.hparams.samples, suite.hparams.seed) == (5, 9)
    with pytest.raises(ValueError):
        suites.get_suite_class('nets')(context, hparams='rounds=2')
    with pytest.raises(ValueError):
        suites.get_suite_class('bogus')


def test_report_rejects_duplicates():
    report = RunReport('verify', {})
    report.add_check('a/b', 'pass')
    with pytest.raises(ValueError):
        report.add_check('a/b', 'pass')
    with pytest.raises(ValueError):
        report.add_check('a/c', 'maybe')
    report.add_check('a/c', 'fail')
    assert not report.passed
