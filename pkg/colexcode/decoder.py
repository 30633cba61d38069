"""
Lookup-table decoding of CSS codes and Monte Carlo estimates of the logical
error rate of a destructive single-basis readout.

X errors are detected by the face checks (Hz) and Z errors by the cell checks
(Hx); the two are decoded independently.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.special import comb

from colexcode import gf2, metrics
from colexcode.errors import DistanceRefutedError, EnumerationCapError
from colexcode.pauli import PauliOp
from colexcode.utils import parallel

logger = logging.getLogger(__name__)

DEFAULT_TABLE_CAP = 1 << 22
# weights beyond t searched for syndromes missing from the table
BEST_EFFORT_EXTRA_WEIGHT = 2
DEFAULT_SHARD_SIZE = 1 << 16
RNG_ID = 'PCG64'
BASES = ('z', 'x', 'both')


class Decoding(NamedTuple):
    correction: PauliOp
    best_effort: bool


def _num_patterns(n, weights):
    return sum(int(comb(n, w, exact=True)) for w in weights)


class _ErrorTable(object):
    def __init__(self, kind, checks, stabilizers, t, cap):
        """
        Args:
            kind: 'x' or 'z', the error type this table corrects.
            checks: the checks detecting that error type.
            stabilizers: generators of the same type, errors equal modulo
                their row space are equivalent.
        """
        self.kind = kind
        self.checks = checks
        self.n = checks.num_cols
        self.t = t
        self.cap = cap
        self._stabilizer_echelon = gf2.row_echelon(stabilizers)
        self.table = self._build()
        self._extended = None
        self._cache = {}

    def _patterns(self, weights):
        for w in weights:
            for support in itertools.combinations(range(self.n), w):
                yield gf2.bits_from_support(support)

    def _build(self):
        table = {}
        for error in self._patterns(range(self.t + 1)):
            s = self.checks.multiply_vector(error)
            other = table.get(s)
            if other is None:
                table[s] = error
            elif gf2.reduce_vector(*self._stabilizer_echelon, other ^ error):
                raise DistanceRefutedError(self.kind.upper(), gf2.support(other), gf2.support(error),
                                           gf2.weight(other ^ error))
        logger.info('%s-error table: %d syndromes for weight <= %d', self.kind.upper(), len(table), self.t)
        return table

    def _extended_table(self):
        if self._extended is None:
            weights = range(self.t + 1, self.t + 1 + BEST_EFFORT_EXTRA_WEIGHT)
            extended = {}
            if _num_patterns(self.n, weights) <= self.cap:
                for error in self._patterns(weights):
                    extended.setdefault(self.checks.multiply_vector(error), error)
            else:
                logger.warning('skipping the best-effort table, %d patterns exceed the cap',
                               _num_patterns(self.n, weights))
            # published only once complete, shards may race to build it
            self._extended = extended
        return self._extended

    def decode(self, s):
        """Returns (error bits, best_effort)."""
        error = self.table.get(s)
        if error is not None:
            return error, False
        error = self._cache.get(s)
        if error is None:
            error = self._extended_table().get(s)
            if error is None:
                # any set of qubits whose check columns sum to s
                error = gf2.solve_combination(self.checks.transpose(), s)
                if error is None:
                    raise ValueError('%s syndrome %s is not produced by any error'
                                     % (self.kind.upper(), gf2.support(s)))
            self._cache[s] = error
        return error, True


class LookupDecoder(object):
    def __init__(self, code, d, cap=DEFAULT_TABLE_CAP):
        """
        Args:
            d: the distance the table is built for; t = (d - 1) // 2.
            cap: maximum number of error patterns per table.
        """
        self.code = code
        self.d = d
        self.t = (d - 1) // 2
        size = _num_patterns(code.n, range(self.t + 1))
        if size > cap:
            raise EnumerationCapError('%d error patterns of weight <= %d exceed the table cap of %d'
                                      % (size, self.t, cap))
        self.x_table = _ErrorTable('x', code.hz, code.hx, self.t, cap)
        self.z_table = _ErrorTable('z', code.hx, code.hz, self.t, cap)

    def table_for(self, kind):
        if kind == 'x':
            return self.x_table
        elif kind == 'z':
            return self.z_table
        else:
            raise ValueError('Invalid error kind %s' % kind)

    def decode_bits(self, kind, s):
        return self.table_for(kind).decode(s)


def build_lookup(code, d, cap=DEFAULT_TABLE_CAP):
    if code.k != 1:
        raise ValueError('lookup decoding needs k=1, code has k=%d' % code.k)
    return LookupDecoder(code, d, cap=cap)


def decode(dec, s):
    """Correction for a syndrome; face defects locate X errors, cell defects Z errors."""
    if any(not 0 <= j < dec.code.num_faces for j in s.face_defects) or \
            any(not 0 <= i < dec.code.num_cells for i in s.cell_defects):
        raise ValueError('syndrome does not match the code\'s %d cells and %d faces'
                         % (dec.code.num_cells, dec.code.num_faces))
    x, x_best_effort = dec.decode_bits('x', gf2.bits_from_support(s.face_defects))
    z, z_best_effort = dec.decode_bits('z', gf2.bits_from_support(s.cell_defects))
    return Decoding(PauliOp(dec.code.n, x=x, z=z), x_best_effort or z_best_effort)


def _readout(code, basis):
    """(error kind, stabilizer rows, logical coset shift, readout support) of a basis."""
    if basis == 'z':
        return 'x', gf2.independent_rows(code.hx).rows, code.logical_x[0].x, code.logical_z[0].z
    elif basis == 'x':
        return 'z', gf2.independent_rows(code.hz).rows, code.logical_z[0].z, code.logical_x[0].x
    else:
        raise ValueError('Invalid measurement basis %s' % basis)


def _check_p(p):
    if not 0 <= p < 0.5:
        raise ValueError('error probability must lie in [0, 0.5), got %r' % p)


class MeasurementOutcome(NamedTuple):
    raw_bits: list
    decoded: int
    best_effort: bool


def simulate_measurement(code, dec, logical_value, p, basis='z', seed=None, flips=None):
    """
    Destructive readout of an encoded basis state: a random codeword of the
    logical value is sampled, each bit flips with probability p (or exactly
    the qubits in `flips`), and the syndrome is decoded before reading the
    logical parity.
    """
    _check_p(p)
    if logical_value not in (0, 1):
        raise ValueError('logical value must be 0 or 1, got %r' % (logical_value,))
    kind, rows, shift, readout = _readout(code, basis)
    rng = np.random.default_rng(seed)
    codeword = shift if logical_value else 0
    for row, coefficient in zip(rows, rng.integers(0, 2, size=len(rows))):
        if coefficient:
            codeword ^= row
    if flips is None:
        flips = gf2.bits_from_support(np.flatnonzero(rng.random(code.n) < p).tolist())
    else:
        flips = gf2.bits_from_support(flips)
    raw = codeword ^ flips
    correction, best_effort = dec.decode_bits(kind, dec.table_for(kind).checks.multiply_vector(raw))
    decoded = gf2.parity((raw ^ correction) & readout)
    raw_bits = [(raw >> j) & 1 for j in range(code.n)]
    return MeasurementOutcome(raw_bits, decoded, best_effort)


@dataclass
class MonteCarloReport:
    p: float
    trials: int
    failures: int
    seed: int
    basis: str
    best_effort_count: int = 0
    rng_id: str = RNG_ID

    @property
    def logical_rate(self):
        return self.failures / self.trials if self.trials else 0.0

    def confidence_interval(self, alpha=0.05):
        return metrics.clopper_pearson(self.failures, self.trials, alpha=alpha)

    def to_dict(self):
        return dict(p=self.p, trials=self.trials, failures=self.failures, rate=self.logical_rate,
                    seed=self.seed, rng_id=self.rng_id, best_effort_count=self.best_effort_count,
                    basis=self.basis, ci=list(self.confidence_interval()))


def _packed(bits, weights):
    return bits.astype(np.int64) @ weights


def _run_basis(code, dec, basis, p, trials, rng):
    """Failure and best-effort masks of one readout basis; the codeword drops out of both."""
    kind, _, _, readout = _readout(code, basis)
    checks = dec.table_for(kind).checks
    errors = rng.random((trials, code.n)) < p
    error_bits = _packed(errors, 1 << np.arange(code.n, dtype=np.int64))
    syndrome_bits = (errors.astype(np.int64) @ checks.to_array().T.astype(np.int64)) % 2
    syndromes = _packed(syndrome_bits, 1 << np.arange(checks.num_rows, dtype=np.int64))
    unique, inverse = np.unique(syndromes, return_inverse=True)
    corrections = np.zeros(len(unique), dtype=np.int64)
    flags = np.zeros(len(unique), dtype=bool)
    for i, s in enumerate(unique):
        corrections[i], flags[i] = dec.decode_bits(kind, int(s))
    residual = error_bits ^ corrections[inverse.ravel()]
    failed = (gf2.popcount_array(residual & readout) & 1).astype(bool)
    return failed, flags[inverse.ravel()]


def _run_shard(code, dec, basis, p, trials, seed_sequence):
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    failed = np.zeros(trials, dtype=bool)
    best_effort = np.zeros(trials, dtype=bool)
    for single_basis in (('z', 'x') if basis == 'both' else (basis,)):
        basis_failed, basis_best_effort = _run_basis(code, dec, single_basis, p, trials, rng)
        failed |= basis_failed
        best_effort |= basis_best_effort
    return int(failed.sum()), int(best_effort.sum())


def monte_carlo(code, dec, p_grid, trials, seed, basis='both', threads=None, shard_size=DEFAULT_SHARD_SIZE):
    """
    Independent trials per grid point. Every grid point and every fixed-size
    shard of trials gets its own child of SeedSequence(seed), so reports do
    not depend on the number of threads.
    """
    if basis not in BASES:
        raise ValueError('Invalid measurement basis %s' % basis)
    for p in p_grid:
        _check_p(p)
    if code.n >= 63 or code.num_faces >= 63 or code.num_cells >= 63:
        raise ValueError('Monte Carlo packs qubits and checks into 64-bit words, code is too large')
    grid_sequences = np.random.SeedSequence(seed).spawn(len(p_grid))
    reports = []
    for p, grid_sequence in zip(p_grid, grid_sequences):
        num_shards = -(-trials // shard_size)
        shard_trials = [min(shard_size, trials - i * shard_size) for i in range(num_shards)]
        jobs = list(zip(shard_trials, grid_sequence.spawn(num_shards)))
        results = parallel.parallel_map(lambda job: _run_shard(code, dec, basis, p, job[0], job[1]),
                                        jobs, threads=threads)
        report = MonteCarloReport(p=p, trials=trials, failures=sum(r[0] for r in results), seed=seed,
                                  basis=basis, best_effort_count=sum(r[1] for r in results))
        logger.info('p=%g: %d/%d failures (%d best-effort)', p, report.failures, trials, report.best_effort_count)
        reports.append(report)
    return reports


def get_default_sim_hparams_dict():
    """
    Returns:
        A dict with the following hyperparameters.

        p_grid: physical bit-flip probabilities to simulate.
        trials: number of trials per probability.
        seed: root seed; every probability and shard gets its own child
            sequence.
        basis: 'z', 'x' or 'both'. With 'both' a trial fails if either
            readout is decoded wrongly.
        shard_size: trials per worker task.
        table_cap: maximum number of error patterns in each lookup table.
    """
    return dict(
        p_grid=[0.005, 0.01, 0.02],
        trials=1000000,
        seed=42,
        basis='both',
        shard_size=DEFAULT_SHARD_SIZE,
        table_cap=DEFAULT_TABLE_CAP,
    )
