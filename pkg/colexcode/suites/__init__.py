from .base_suite import BaseVerificationSuite, VerificationContext, CLAIMS
from .axioms_suite import AxiomsSuite
from .code_suite import CodeSuite
from .congruence_suite import CongruenceSuite
from .transversal_suite import TransversalSuite
from .nets_suite import NetsSuite

SUITE_NAMES = ('axioms', 'code', 'congruence', 'transversal', 'nets')


def get_suite_class(suite):
    suite_mappings = {
        'axioms': 'AxiomsSuite',
        'code': 'CodeSuite',
        'congruence': 'CongruenceSuite',
        'transversal': 'TransversalSuite',
        'nets': 'NetsSuite',
    }
    suite_class = suite_mappings.get(suite, suite)
    suite_class = globals().get(suite_class)
    if suite_class is None or not issubclass(suite_class, BaseVerificationSuite):
        raise ValueError('Invalid suite %s' % suite)
    return suite_class
