import logging
from functools import cached_property

from colexcode import gf2
from colexcode.code import code_from_colex, compute_distance
from colexcode.errors import DistanceRefutedError, EnumerationCapError, SearchFailureError
from colexcode.utils import hparams_utils

logger = logging.getLogger(__name__)

# published reference values, reported next to the computed ones
CLAIMS = dict(
    tetrahedral_parameters=[15, 1, 5],
    tetrahedral_distance=5,
    degeneracy='k = 3 * first_betti_number',
    phase_gate_exponent='l = n mod 8',
)


class VerificationContext(object):
    """
    State shared by the suites of one run: the colex and the lazily derived
    code and distance.
    """

    def __init__(self, colex, cap=gf2.DEFAULT_ENUMERATION_CAP, threads=None, claims=False):
        self.colex = colex
        self.cap = cap
        self.threads = threads
        self.claims = claims

    @cached_property
    def code(self):
        return code_from_colex(self.colex)

    @property
    def is_tetrahedral(self):
        return not self.colex.closed and self.code.k == 1

    @cached_property
    def distance(self):
        paper_claim_d = CLAIMS['tetrahedral_distance'] if self.is_tetrahedral else None
        return compute_distance(self.code, cap=self.cap, threads=self.threads, paper_claim_d=paper_claim_d)


class CheckSkipped(Exception):
    pass


class BaseVerificationSuite(object):
    name = None

    def __init__(self, context, hparams_dict=None, hparams=None):
        """
        Args:
            context: the `VerificationContext` of the run.
            hparams_dict: a dict of `name=value` pairs, where `name` must be
                defined in `self.get_default_hparams_dict()`.
            hparams: a string of comma separated list of `name=value` pairs,
                where `name` must be defined in `self.get_default_hparams_dict()`.
                These values overrides any values in hparams_dict (if any).
        """
        self.context = context
        self.hparams = self.parse_hparams(hparams_dict, hparams)

    def get_default_hparams_dict(self):
        return dict()

    def parse_hparams(self, hparams_dict, hparams):
        return hparams_utils.parse_hparams(self.get_default_hparams_dict(), hparams_dict, hparams)

    @property
    def colex(self):
        return self.context.colex

    @property
    def code(self):
        return self.context.code

    def checks(self):
        """List of (check name, callable returning (outcome, details))."""
        raise NotImplementedError

    def run(self, report):
        for name, check in self.checks():
            try:
                outcome, details = check()
            except CheckSkipped as e:
                outcome, details = 'skipped', dict(reason=str(e))
            except EnumerationCapError as e:
                outcome, details = 'skipped', dict(reason=str(e))
            except (SearchFailureError, DistanceRefutedError) as e:
                outcome, details = 'fail', dict(error=str(e))
            if outcome == 'skipped':
                logger.warning('%s/%s skipped: %s', self.name, name, details.get('reason'))
            else:
                logger.info('%s/%s: %s', self.name, name, outcome)
            if self.context.claims and name in self.claimed_values():
                details = dict(details, claimed=self.claimed_values()[name])
            report.add_check('%s/%s' % (self.name, name), outcome, details)
        return report

    def claimed_values(self):
        """Published values printed next to check results when claims are requested."""
        return {}


def outcome_of(passed):
    return 'pass' if passed else 'fail'
