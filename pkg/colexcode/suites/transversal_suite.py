from colexcode.code import energy, ground_energy, syndrome, verify_transversal_cnot
from colexcode.pauli import PauliOp, commutes
from colexcode.statevec import (apply_pauli, check_ground_conditions, encode_zero, energy_expectation,
                                verify_transversal_t)
from .base_suite import BaseVerificationSuite, CheckSkipped, CLAIMS, outcome_of

ENERGY_TOLERANCE = 1e-10


class TransversalSuite(BaseVerificationSuite):
    name = 'transversal'

    def get_default_hparams_dict(self):
        """
        Returns:
            A dict with the following hyperparameters.

            dump_amplitudes: whether the transversal_k_half details include
                the nonzero amplitudes of the encoded |0> and |1> states.
        """
        default_hparams = super(TransversalSuite, self).get_default_hparams_dict()
        hparams = dict(
            dump_amplitudes=False,
        )
        return dict(list(default_hparams.items()) + list(hparams.items()))

    def checks(self):
        return [
            ('logicals_anticommute', self.check_logicals_anticommute),
            ('transversal_cnot', self.check_transversal_cnot),
            ('ground_conditions', self.check_ground_conditions),
            ('transversal_k_half', self.check_transversal_k_half),
        ]

    def claimed_values(self):
        return dict(transversal_k_half=CLAIMS['phase_gate_exponent'])

    def _require_tetrahedral(self):
        if not self.context.is_tetrahedral:
            raise CheckSkipped('transversal gates are checked on punctured codes with k=1')

    def check_logicals_anticommute(self):
        self._require_tetrahedral()
        lx, lz = self.code.logical_x[0], self.code.logical_z[0]
        return outcome_of(not commutes(lx, lz)), dict(n=self.code.n, logical_x=lx.to_label(),
                                                      logical_z=lz.to_label())

    def check_transversal_cnot(self):
        self._require_tetrahedral()
        report = verify_transversal_cnot(self.code)
        return outcome_of(report.passed), report.to_dict()

    def check_ground_conditions(self):
        self._require_tetrahedral()
        code = self.code
        zero = encode_zero(code, cap=self.context.cap)
        ground = ground_energy(code)
        measured = energy_expectation(zero, code)
        excited = apply_pauli(zero, PauliOp(code.n, z=1))
        excited_energy = energy_expectation(excited, code)
        predicted = energy(code, syndrome(code, PauliOp(code.n, z=1)))
        ok = (check_ground_conditions(zero, code) and not check_ground_conditions(excited, code)
              and abs(measured - ground) < ENERGY_TOLERANCE
              and abs(excited_energy - predicted) < ENERGY_TOLERANCE)
        return outcome_of(ok), dict(ground_energy=ground, measured_energy=measured,
                                    single_z_energy=excited_energy, predicted_single_z_energy=predicted)

    def check_transversal_k_half(self):
        self._require_tetrahedral()
        try:
            report = verify_transversal_t(self.code, cap=self.context.cap,
                                          dump_amplitudes=self.hparams.dump_amplitudes)
        except ValueError as e:
            return 'fail', dict(error=str(e))
        return outcome_of(report.passed), report.to_dict()
