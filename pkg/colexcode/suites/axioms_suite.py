from colexcode.colexes.base_colex import validate
from .base_suite import BaseVerificationSuite, outcome_of


class AxiomsSuite(BaseVerificationSuite):
    name = 'axioms'

    def checks(self):
        return [
            ('validate', self.check_validate),
            ('site_parity', self.check_site_parity),
        ]

    def check_validate(self):
        report = validate(self.colex)
        return outcome_of(report.passed), report.to_dict()

    def check_site_parity(self):
        # closed colexes have an even number of sites, punctured ones odd
        expected = 'even' if self.colex.closed else 'odd'
        parity = 'even' if self.colex.n_sites % 2 == 0 else 'odd'
        return outcome_of(parity == expected), dict(n_sites=self.colex.n_sites, parity=parity,
                                                     closed=self.colex.closed)
