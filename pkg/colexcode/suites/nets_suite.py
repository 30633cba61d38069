from colexcode import nets
from colexcode.code import equivalent_mod_stabilizers, syndrome
from colexcode.colexes.base_colex import Color
from colexcode.pauli import commutes
from .base_suite import BaseVerificationSuite, CheckSkipped, CLAIMS, outcome_of


class NetsSuite(BaseVerificationSuite):
    name = 'nets'

    def get_default_hparams_dict(self):
        """
        Returns:
            A dict with the following hyperparameters.

            samples: number of random string and membrane pairs drawn by
                the disjoint_colors check.
            seed: seed of the generator used for those samples.
            max_winding: largest absolute winding per axis explored when
                searching for closed strings on the torus.
        """
        default_hparams = super(NetsSuite, self).get_default_hparams_dict()
        hparams = dict(
            samples=100,
            seed=0,
            max_winding=nets.DEFAULT_MAX_WINDING,
        )
        return dict(list(default_hparams.items()) + list(hparams.items()))

    def checks(self):
        return [
            ('elementary_excitations', self.check_elementary_excitations),
            ('crossing', self.check_crossing),
            ('disjoint_colors', self.check_disjoint_colors),
            ('color_combination', self.check_color_combination),
            ('string_net', self.check_string_net),
            ('membrane_net', self.check_membrane_net),
        ]

    def claimed_values(self):
        return dict(color_combination=CLAIMS['degeneracy'])

    def check_elementary_excitations(self):
        report = nets.elementary_excitation_check(self.code, self.colex)
        if not report.sites_checked:
            raise CheckSkipped('no site lies in four cells')
        return outcome_of(report.passed), report.to_dict()

    def check_crossing(self):
        s, m = nets.find_crossing_pair(self.colex, Color.R, frozenset([Color.R, Color.G]))
        report = nets.crossing_anticommutation_check(self.colex, s, m)
        # a single crossing anticommutes
        return outcome_of(report.passed and report.anticommute), dict(
            report.to_dict(), links=sorted(s.link_ids), faces=sorted(m.face_ids))

    def check_disjoint_colors(self):
        report = nets.sampled_color_rule_check(self.colex, samples=self.hparams.samples, seed=self.hparams.seed)
        return outcome_of(report.passed), report.to_dict()

    def check_color_combination(self):
        if self.colex.link_windings is None:
            raise CheckSkipped('colex carries no link windings')
        report = nets.color_combination_check(self.code, self.colex, max_winding=self.hparams.max_winding)
        return outcome_of(report.passed), report.to_dict()

    def _require_tetrahedral(self):
        if not self.context.is_tetrahedral:
            raise CheckSkipped('string and membrane nets are built on punctured codes with k=1')

    def check_string_net(self):
        self._require_tetrahedral()
        code = self.code
        op = nets.tetra_string_net(code, self.colex, threads=self.context.threads)
        ok = (syndrome(code, op).is_trivial and not commutes(op, code.logical_x[0])
              and equivalent_mod_stabilizers(code, op, code.logical_z[0]))
        return outcome_of(ok), dict(operator=op.to_label(), weight=op.weight)

    def check_membrane_net(self):
        self._require_tetrahedral()
        code = self.code
        op = nets.tetra_membrane_net(code, self.colex)
        string_net = nets.tetra_string_net(code, self.colex, threads=self.context.threads)
        ok = (syndrome(code, op).is_trivial and equivalent_mod_stabilizers(code, op, code.logical_x[0])
              and not commutes(op, string_net))
        return outcome_of(ok), dict(operator=op.to_label(), weight=op.weight)
