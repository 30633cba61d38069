from colexcode import gf2
from colexcode.code import code_report, minimal_logicals
from colexcode.decoder import build_lookup
from colexcode.pauli import commutes
from .base_suite import BaseVerificationSuite, CheckSkipped, CLAIMS, outcome_of


class CodeSuite(BaseVerificationSuite):
    name = 'code'

    def checks(self):
        return [
            ('parameters', self.check_parameters),
            ('stabilizers_commute', self.check_stabilizers_commute),
            ('degeneracy', self.check_degeneracy),
            ('logicals', self.check_logicals),
            ('distance', self.check_distance),
            ('decoder_cross_check', self.check_decoder_cross_check),
        ]

    def claimed_values(self):
        return dict(distance=CLAIMS['tetrahedral_parameters'], degeneracy=CLAIMS['degeneracy'])

    def check_parameters(self):
        return 'pass', code_report(self.code)

    def check_stabilizers_commute(self):
        code = self.code
        product = [gf2.weight(x_row & z_row) % 2 for x_row in code.hx.rows for z_row in code.hz.rows]
        return outcome_of(not any(product)), dict(pairs=len(product))

    def check_degeneracy(self):
        betti = self.colex.first_betti_number
        if betti is None:
            raise CheckSkipped('first Betti number unknown')
        # puncturing a closed colex adds one logical qubit
        expected = 3 * betti + (0 if self.colex.closed else 1)
        return outcome_of(self.code.k == expected), dict(k=self.code.k, first_betti_number=betti,
                                                         expected_k=expected, closed=self.colex.closed)

    def check_logicals(self):
        code = self.code
        if code.k == 0:
            raise CheckSkipped('code encodes no qubits')
        ok = True
        for i, lx in enumerate(code.logical_x):
            ok = ok and not code.hz.multiply_vector(lx.x)
            for j, lz in enumerate(code.logical_z):
                ok = ok and commutes(lx, lz) == (i != j)
        for lz in code.logical_z:
            ok = ok and not code.hx.multiply_vector(lz.z)
        return outcome_of(ok), dict(k=code.k, x_weights=[P.weight for P in code.logical_x],
                                    z_weights=[P.weight for P in code.logical_z])

    def check_distance(self):
        if self.code.k == 0:
            raise CheckSkipped('code encodes no qubits')
        distance = self.context.distance
        x_logical, z_logical = minimal_logicals(self.code, distance)
        details = dict(distance.to_dict(), min_x_logical=x_logical.to_label(), min_z_logical=z_logical.to_label())
        if distance.agrees is None:
            return 'pass', details
        return ('agrees' if distance.agrees else 'disagrees'), details

    def check_decoder_cross_check(self):
        if not self.context.is_tetrahedral:
            raise CheckSkipped('lookup decoding applies to k=1 codes')
        distance = self.context.distance
        # raises DistanceRefutedError on a collision
        decoder = build_lookup(self.code, distance.d)
        return 'pass', dict(d=distance.d, t=decoder.t, x_syndromes=len(decoder.x_table.table),
                            z_syndromes=len(decoder.z_table.table))
