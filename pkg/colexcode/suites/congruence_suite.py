from colexcode.code import check_weight_congruence
from .base_suite import BaseVerificationSuite, CheckSkipped, outcome_of


class CongruenceSuite(BaseVerificationSuite):
    name = 'congruence'

    def checks(self):
        return [
            ('weights_mod8', self.check_weights),
            ('shared_sites', self.check_shared_sites),
            ('size_condition', self.check_size_condition),
        ]

    def _report(self):
        if not self.context.is_tetrahedral:
            raise CheckSkipped('the weight congruence is stated for punctured codes with k=1')
        if not hasattr(self, '_congruence'):
            self._congruence = check_weight_congruence(self.code, cap=self.context.cap)
        return self._congruence

    def check_weights(self):
        report = self._report()
        return outcome_of(report.all_weights_mod8_zero), dict(
            weight_distribution=report.to_dict()['weight_distribution'],
            counterexamples=[c for c in report.counterexamples if c['kind'] == 'weight'])

    def check_shared_sites(self):
        report = self._report()
        return outcome_of(report.lemma_shared_sites_ok), dict(
            shared_site_counts=report.to_dict()['shared_site_counts'],
            counterexamples=[c for c in report.counterexamples if c['kind'] == 'shared_sites'])

    def check_size_condition(self):
        report = self._report()
        return outcome_of(report.size_condition_ok), dict(
            face_sizes=sorted({len(face.sites) for face in self.colex.faces}),
            cell_sizes=sorted({len(cell.sites) for cell in self.colex.cells}))
