"""
CSS stabilizer codes of colexes: cells give X-type generators, faces give
Z-type generators.
"""
import collections
import itertools
import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from colexcode import gf2
from colexcode.colexes.base_colex import validate, pair_name
from colexcode.errors import ColexValidationError, EnumerationCapError
from colexcode.pauli import PauliOp, conjugate_by_transversal_cnot, tensor
from colexcode.utils import parallel

logger = logging.getLogger(__name__)

# leading basis coefficients fixed per distance-search shard
DISTANCE_SHARD_BITS = 4


class Syndrome(NamedTuple):
    cell_defects: frozenset
    face_defects: frozenset

    @property
    def is_trivial(self):
        return not self.cell_defects and not self.face_defects

    def to_dict(self):
        return dict(cell_defects=sorted(self.cell_defects), face_defects=sorted(self.face_defects))


class CssCode(object):
    def __init__(self, hx, hz, colex=None, name=None):
        """
        Args:
            hx: BitMatrix of X-type generators (cells), one row each.
            hz: BitMatrix of Z-type generators (faces), one row each.
            colex: the colex the matrices were derived from, if any.
        """
        if hx.num_cols != hz.num_cols:
            raise ValueError('Hx has %d columns but Hz has %d' % (hx.num_cols, hz.num_cols))
        for i, x_row in enumerate(hx.rows):
            for j, z_row in enumerate(hz.rows):
                if gf2.parity(x_row & z_row):
                    raise ValueError('X generator %d and Z generator %d anticommute' % (i, j))
        self.n = hx.num_cols
        self.hx = hx
        self.hz = hz
        self.colex = colex
        self.name = name
        self.rank_hx = gf2.rank(hx)
        self.rank_hz = gf2.rank(hz)
        self.k = self.n - self.rank_hx - self.rank_hz
        self._hx_echelon = gf2.row_echelon(hx)
        self._hz_echelon = gf2.row_echelon(hz)
        self.logical_x, self.logical_z = self._logical_operators()

    @property
    def num_cells(self):
        return self.hx.num_rows

    @property
    def num_faces(self):
        return self.hz.num_rows

    def x_stabilizer(self, i):
        return PauliOp(self.n, x=self.hx.rows[i])

    def z_stabilizer(self, j):
        return PauliOp(self.n, z=self.hz.rows[j])

    def in_x_stabilizers(self, bits):
        return gf2.reduce_vector(*self._hx_echelon, bits) == 0

    def in_z_stabilizers(self, bits):
        return gf2.reduce_vector(*self._hz_echelon, bits) == 0

    def _logical_operators(self):
        # complete the stabilizer row spaces inside the opposite kernels
        x_vectors = gf2.extend_basis(self.hx, gf2.kernel_basis(self.hz).rows)
        z_vectors = gf2.extend_basis(self.hz, gf2.kernel_basis(self.hx).rows)
        if len(x_vectors) != self.k or len(z_vectors) != self.k:
            raise ValueError('found %d X and %d Z logicals for k=%d' % (len(x_vectors), len(z_vectors), self.k))

        all_ones = (1 << self.n) - 1
        if (self.k == 1 and self.n % 2 and not self.hx.multiply_vector(all_ones)
                and not self.hz.multiply_vector(all_ones)):
            return [PauliOp(self.n, x=all_ones)], [PauliOp(self.n, z=all_ones)]

        # symplectic Gram-Schmidt
        pairs = []
        while x_vectors:
            x = x_vectors.pop(0)
            index = next((j for j, z in enumerate(z_vectors) if gf2.parity(x & z)), None)
            if index is None:
                raise ValueError('X logical %s has no Z partner' % gf2.support(x))
            z = z_vectors.pop(index)
            x_vectors = [v ^ x if gf2.parity(v & z) else v for v in x_vectors]
            z_vectors = [v ^ z if gf2.parity(v & x) else v for v in z_vectors]
            pairs.append((x, z))
        return ([PauliOp(self.n, x=x) for x, _ in pairs],
                [PauliOp(self.n, z=z) for _, z in pairs])

    def stabilizer_counts(self):
        return dict(cells=self.num_cells, faces=self.num_faces, rank_hx=self.rank_hx, rank_hz=self.rank_hz)

    def parameters(self):
        return self.n, self.k

    def __repr__(self):
        return 'CssCode(%s[[%d,%d]])' % (self.name + ' ' if self.name else '', self.n, self.k)


def code_from_colex(colex, name=None):
    report = validate(colex)
    if not report.passed:
        raise ColexValidationError(report)
    hx = gf2.BitMatrix.from_supports([cell.sites for cell in colex.cells], colex.n_sites)
    hz = gf2.BitMatrix.from_supports([face.sites for face in colex.faces], colex.n_sites)
    code = CssCode(hx, hz, colex=colex, name=name)
    logger.info('code from colex: n=%d k=%d, %d cells (rank %d), %d faces (rank %d)',
                code.n, code.k, code.num_cells, code.rank_hx, code.num_faces, code.rank_hz)
    return code


@dataclass
class DistanceReport:
    dx: int
    dz: int
    x_witness: list
    z_witness: list
    paper_claim_d: Optional[int] = None

    @property
    def d(self):
        return min(self.dx, self.dz)

    @property
    def t(self):
        return (self.d - 1) // 2

    @property
    def agrees(self):
        if self.paper_claim_d is None:
            return None
        return self.d == self.paper_claim_d

    def to_dict(self):
        agrees = None if self.agrees is None else ('AGREES' if self.agrees else 'DISAGREES')
        return dict(dx=self.dx, dz=self.dz, d=self.d, t=self.t,
                    paper_claim_d=self.paper_claim_d, agrees=agrees,
                    x_witness=list(self.x_witness), z_witness=list(self.z_witness))


def _min_weight_shard(basis_rows, offset, echelon, cap):
    best_weight, best = None, None
    for v in gf2.enumerate_span(gf2.BitMatrix(basis_rows, echelon[2]), cap=cap, offset=offset):
        w = gf2.weight(v)
        if w == 0 or (best_weight is not None and w >= best_weight):
            continue
        if gf2.reduce_vector(echelon[0], echelon[1], v) == 0:
            continue
        best_weight, best = w, v
    return best_weight, best


def _min_weight_outside(kernel, stabilizers, cap, threads):
    """Minimum weight over span(kernel) minus rowspace(stabilizers)."""
    rows = list(kernel.rows)
    if len(rows) >= 63 or (1 << len(rows)) > cap:
        raise EnumerationCapError('kernel of dimension %d exceeds the enumeration cap of %d elements'
                                  % (len(rows), cap))
    echelon_rows, pivots = gf2.row_echelon(stabilizers)
    echelon = (echelon_rows, pivots, kernel.num_cols)
    shard_bits = min(DISTANCE_SHARD_BITS, len(rows))
    free_rows, fixed_rows = rows[:len(rows) - shard_bits], rows[len(rows) - shard_bits:]
    offsets = []
    for coefficients in itertools.product((0, 1), repeat=shard_bits):
        offset = 0
        for c, row in zip(coefficients, fixed_rows):
            if c:
                offset ^= row
        offsets.append(offset)
    logger.debug('distance search over 2^%d vectors in %d shards', len(rows), len(offsets))
    results = parallel.parallel_map(lambda offset: _min_weight_shard(free_rows, offset, echelon, cap),
                                    offsets, threads=threads)
    results = [result for result in results if result[0] is not None]
    if not results:
        return None, None
    # shards are fixed, so the witness does not depend on the thread count
    return min(results, key=lambda result: (result[0], result[1]))


def compute_distance(code, cap=gf2.DEFAULT_ENUMERATION_CAP, threads=None, paper_claim_d=None):
    """
    Exhaustive X and Z distances.

    dz is the minimum weight of a Z operator commuting with every cell
    (kernel of Hx) that is not a product of faces; dx is symmetric.
    """
    if code.k == 0:
        raise ValueError('code encodes no qubits, distance is undefined')
    dz, z_bits = _min_weight_outside(gf2.kernel_basis(code.hx), code.hz, cap, threads)
    dx, x_bits = _min_weight_outside(gf2.kernel_basis(code.hz), code.hx, cap, threads)
    report = DistanceReport(dx=dx, dz=dz, x_witness=gf2.support(x_bits), z_witness=gf2.support(z_bits),
                            paper_claim_d=paper_claim_d)
    logger.info('distance of %r: dx=%d dz=%d d=%d', code, dx, dz, report.d)
    return report


def minimal_logicals(code, distance_report):
    """Minimum-weight X and Z logical representatives found by the distance search."""
    return (PauliOp(code.n, x=gf2.bits_from_support(distance_report.x_witness)),
            PauliOp(code.n, z=gf2.bits_from_support(distance_report.z_witness)))


def _check_size(code, E):
    if E.n != code.n:
        raise ValueError('operator acts on %d qubits, code has %d' % (E.n, code.n))


def syndrome(code, E):
    _check_size(code, E)
    cell_defects = frozenset(i for i, row in enumerate(code.hx.rows) if gf2.parity(row & E.z))
    face_defects = frozenset(j for j, row in enumerate(code.hz.rows) if gf2.parity(row & E.x))
    return Syndrome(cell_defects, face_defects)


def ground_energy(code):
    return -(code.num_cells + code.num_faces)


def energy(code, s):
    """Energy of H = -sum_c B_c^X - sum_f B_f^Z on an eigenstate with syndrome s."""
    return ground_energy(code) + 2 * (len(s.cell_defects) + len(s.face_defects))


@dataclass
class CongruenceReport:
    all_weights_mod8_zero: bool
    lemma_shared_sites_ok: bool
    size_condition_ok: bool
    weight_distribution: dict
    shared_site_counts: dict
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self):
        return self.all_weights_mod8_zero and self.lemma_shared_sites_ok and not self.counterexamples

    def to_dict(self):
        return dict(passed=self.passed,
                    all_weights_mod8_zero=self.all_weights_mod8_zero,
                    lemma_shared_sites_ok=self.lemma_shared_sites_ok,
                    size_condition_ok=self.size_condition_ok,
                    weight_distribution={str(w): c for w, c in sorted(self.weight_distribution.items())},
                    shared_site_counts={str(s): c for s, c in sorted(self.shared_site_counts.items())},
                    counterexamples=list(self.counterexamples))


MAX_COUNTEREXAMPLES = 10


def check_weight_congruence(code, cap=gf2.DEFAULT_ENUMERATION_CAP):
    """
    Checks that every element of the X-stabilizer space V has weight
    divisible by 8, and that every cell shares 0 or 4 sites (mod 8) with every
    product of the other cells.
    """
    counterexamples = []
    weights = collections.Counter()
    basis = gf2.independent_rows(code.hx)
    for v in gf2.enumerate_span(basis, cap=cap):
        w = gf2.weight(v)
        weights[w] += 1
        if w % 8 and len(counterexamples) < MAX_COUNTEREXAMPLES:
            counterexamples.append(dict(kind='weight', support=gf2.support(v), weight=w))
    all_weights_ok = all(w % 8 == 0 for w in weights)

    shared = collections.Counter()
    lemma_ok = True
    for i, cell in enumerate(code.hx.rows):
        others = code.hx.rows[:i] + code.hx.rows[i + 1:]
        for product in gf2.enumerate_subset_sums(others, cap=cap):
            s = gf2.weight(product & cell)
            shared[s] += 1
            if s % 8 not in (0, 4):
                lemma_ok = False
                if len(counterexamples) < MAX_COUNTEREXAMPLES:
                    counterexamples.append(dict(kind='shared_sites', cell=i,
                                                product=gf2.support(product), shared=s))

    size_ok = (all(gf2.weight(row) % 8 == 0 for row in code.hx.rows)
               and all(gf2.weight(row) % 4 == 0 for row in code.hz.rows))
    report = CongruenceReport(all_weights_mod8_zero=all_weights_ok, lemma_shared_sites_ok=lemma_ok,
                              size_condition_ok=size_ok, weight_distribution=dict(weights),
                              shared_site_counts=dict(shared), counterexamples=counterexamples)
    logger.info('weight congruence: weights %s, passed=%s', sorted(weights), report.passed)
    return report


@dataclass
class TransversalCnotReport:
    num_images: int
    failed_images: list
    logical_maps: dict

    @property
    def stabilizer_images_ok(self):
        return not self.failed_images

    @property
    def passed(self):
        return self.stabilizer_images_ok and all(self.logical_maps.values())

    def to_dict(self):
        return dict(passed=self.passed, num_images=self.num_images,
                    stabilizer_images_ok=self.stabilizer_images_ok,
                    failed_images=list(self.failed_images), logical_maps=dict(self.logical_maps))


def doubled_code(code):
    """Two copies of the code side by side on 2n qubits."""
    n = code.n
    hx = gf2.BitMatrix(list(code.hx.rows) + [row << n for row in code.hx.rows], 2 * n)
    hz = gf2.BitMatrix(list(code.hz.rows) + [row << n for row in code.hz.rows], 2 * n)
    return hx, hz


def verify_transversal_cnot(code):
    """
    Conjugates the doubled stabilizer generators and the logical Paulis by
    pairwise CNOT from the first copy to the second.
    """
    if code.k != 1:
        raise ValueError('transversal CNOT check needs k=1, code has k=%d' % code.k)
    n = code.n
    hx2, hz2 = doubled_code(code)
    hx2_echelon, hz2_echelon = gf2.row_echelon(hx2), gf2.row_echelon(hz2)

    def in_group(P):
        return (P.phase == 0 and gf2.reduce_vector(*hx2_echelon, P.x) == 0
                and gf2.reduce_vector(*hz2_echelon, P.z) == 0)

    generators = ([('x', i, PauliOp(2 * n, x=row)) for i, row in enumerate(hx2.rows)]
                  + [('z', j, PauliOp(2 * n, z=row)) for j, row in enumerate(hz2.rows)])
    failed = []
    for kind, index, P in generators:
        image = conjugate_by_transversal_cnot(P)
        if not in_group(image):
            failed.append(dict(kind=kind, index=index, image=image.to_label()))

    identity = PauliOp.identity(n)
    lx, lz = code.logical_x[0], code.logical_z[0]
    expected_maps = [
        ('XI->XX', tensor(lx, identity), tensor(lx, lx)),
        ('IX->IX', tensor(identity, lx), tensor(identity, lx)),
        ('ZI->ZI', tensor(lz, identity), tensor(lz, identity)),
        ('IZ->ZZ', tensor(identity, lz), tensor(lz, lz)),
    ]
    logical_maps = {}
    for name, P, expected in expected_maps:
        # image * expected is a stabilizer iff the two agree up to the group
        logical_maps[name] = in_group(conjugate_by_transversal_cnot(P) * expected)
    report = TransversalCnotReport(num_images=len(generators), failed_images=failed, logical_maps=logical_maps)
    logger.info('transversal CNOT: %d images, %d failed, logical maps %s',
                len(generators), len(failed), logical_maps)
    return report


def equivalent_mod_stabilizers(code, P, Q):
    """
    Whether two pure-type operators differ by a stabilizer: X-type operators
    modulo products of cells, Z-type operators modulo products of faces.
    """
    _check_size(code, P)
    _check_size(code, Q)
    if P.is_x_type and Q.is_x_type:
        return code.in_x_stabilizers(P.x ^ Q.x)
    if P.is_z_type and Q.is_z_type:
        return code.in_z_stabilizers(P.z ^ Q.z)
    raise ValueError('operators %s and %s are not of a common pure type' % (P.to_label(), Q.to_label()))


def code_report(code, distance_report=None):
    report = dict(n=code.n, k=code.k, stabilizer_counts=code.stabilizer_counts(),
                  logical_weights=dict(x=[P.weight for P in code.logical_x],
                                       z=[P.weight for P in code.logical_z]))
    if code.colex is not None:
        report['face_color_pairs'] = dict(collections.Counter(pair_name(face.color_pair)
                                                              for face in code.colex.faces))
    if distance_report is not None:
        report.update(distance_report.to_dict())
    return report
