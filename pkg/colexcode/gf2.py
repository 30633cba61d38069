"""
Bit-vector and bit-matrix arithmetic over GF(2).

Vectors are packed into python ints: bit j of the int is coordinate j, so
qubit j of a code maps to bit j. XOR is addition, popcount is weight.
"""
import numpy as np

from colexcode.errors import EnumerationCapError

DEFAULT_ENUMERATION_CAP = 1 << 24


def weight(bits):
    return bin(bits).count('1')


def parity(bits):
    return weight(bits) & 1


def support(bits):
    indices = []
    j = 0
    while bits:
        if bits & 1:
            indices.append(j)
        bits >>= 1
        j += 1
    return indices


def bits_from_support(indices):
    bits = 0
    for j in indices:
        bits |= 1 << j
    return bits


class BitVector(object):
    __slots__ = ('length', 'bits')

    def __init__(self, length, bits=0):
        if bits >> length:
            raise ValueError('bits exceed vector length %d' % length)
        self.length = length
        self.bits = bits

    @classmethod
    def from_support(cls, length, indices):
        indices = list(indices)
        for j in indices:
            if not 0 <= j < length:
                raise ValueError('index %d out of range for length %d' % (j, length))
        return cls(length, bits_from_support(indices))

    @classmethod
    def from_array(cls, array):
        array = np.asarray(array).ravel()
        return cls(len(array), bits_from_support(np.flatnonzero(array % 2)))

    def to_array(self):
        array = np.zeros(self.length, dtype=np.uint8)
        array[support(self.bits)] = 1
        return array

    @property
    def weight(self):
        return weight(self.bits)

    def support(self):
        return support(self.bits)

    def __xor__(self, other):
        if self.length != other.length:
            raise ValueError('length mismatch %d != %d' % (self.length, other.length))
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other):
        if self.length != other.length:
            raise ValueError('length mismatch %d != %d' % (self.length, other.length))
        return BitVector(self.length, self.bits & other.bits)

    def dot(self, other):
        return parity((self & other).bits)

    def __eq__(self, other):
        return isinstance(other, BitVector) and self.length == other.length and self.bits == other.bits

    def __hash__(self):
        return hash((self.length, self.bits))

    def __repr__(self):
        return 'BitVector(%s)' % ''.join(str((self.bits >> j) & 1) for j in range(self.length))


class BitMatrix(object):
    """
    Dense binary matrix stored as a tuple of packed rows.
    """
    __slots__ = ('rows', 'num_cols')

    def __init__(self, rows, num_cols):
        rows = tuple(row.bits if isinstance(row, BitVector) else int(row) for row in rows)
        for row in rows:
            if row >> num_cols:
                raise ValueError('row exceeds %d columns' % num_cols)
        self.rows = rows
        self.num_cols = num_cols

    @classmethod
    def from_supports(cls, supports, num_cols):
        return cls([BitVector.from_support(num_cols, s).bits for s in supports], num_cols)

    @classmethod
    def from_array(cls, array):
        array = np.atleast_2d(np.asarray(array))
        return cls([bits_from_support(np.flatnonzero(row % 2)) for row in array], array.shape[1])

    @classmethod
    def zeros(cls, num_rows, num_cols):
        return cls([0] * num_rows, num_cols)

    @classmethod
    def identity(cls, size):
        return cls([1 << j for j in range(size)], size)

    @property
    def num_rows(self):
        return len(self.rows)

    @property
    def shape(self):
        return self.num_rows, self.num_cols

    def row(self, i):
        return BitVector(self.num_cols, self.rows[i])

    def to_array(self):
        array = np.zeros((self.num_rows, self.num_cols), dtype=np.uint8)
        for i, row in enumerate(self.rows):
            array[i, support(row)] = 1
        return array

    def transpose(self):
        columns = []
        for j in range(self.num_cols):
            column = 0
            for i, row in enumerate(self.rows):
                if (row >> j) & 1:
                    column |= 1 << i
            columns.append(column)
        return BitMatrix(columns, self.num_rows)

    def stack(self, other):
        if self.num_cols != other.num_cols:
            raise ValueError('column mismatch %d != %d' % (self.num_cols, other.num_cols))
        return BitMatrix(self.rows + other.rows, self.num_cols)

    def multiply_vector(self, v):
        """Returns M·v as an int with bit i = <row i, v>."""
        bits = v.bits if isinstance(v, BitVector) else v
        result = 0
        for i, row in enumerate(self.rows):
            if parity(row & bits):
                result |= 1 << i
        return result

    def __eq__(self, other):
        return isinstance(other, BitMatrix) and self.num_cols == other.num_cols and self.rows == other.rows

    def __hash__(self):
        return hash((self.num_cols, self.rows))

    def __repr__(self):
        return 'BitMatrix(%d x %d)' % self.shape


def _as_rows(M):
    if isinstance(M, BitMatrix):
        return list(M.rows), M.num_cols
    raise TypeError('expected BitMatrix, got %s' % type(M).__name__)


def row_echelon(M):
    """
    Reduced row echelon form over GF(2).

    Returns:
        (rows, pivots): the nonzero reduced rows and, for each, the column of
        its leading one. Every other row has a zero in that column.
    """
    work, num_cols = _as_rows(M)
    pivots = []
    rank_ = 0
    for col in range(num_cols):
        mask = 1 << col
        pivot = next((r for r in range(rank_, len(work)) if work[r] & mask), None)
        if pivot is None:
            continue
        work[rank_], work[pivot] = work[pivot], work[rank_]
        for r in range(len(work)):
            if r != rank_ and work[r] & mask:
                work[r] ^= work[rank_]
        pivots.append(col)
        rank_ += 1
        if rank_ == len(work):
            break
    return work[:rank_], pivots


def reduce_vector(echelon_rows, pivots, v):
    """Residual of v after eliminating the pivot columns; zero iff v is in the span."""
    for row, col in zip(echelon_rows, pivots):
        if (v >> col) & 1:
            v ^= row
    return v


def rank(M):
    return len(row_echelon(M)[1])


def in_row_space(M, v):
    bits = v.bits if isinstance(v, BitVector) else v
    if isinstance(v, BitVector) and v.length != M.num_cols:
        raise ValueError('vector length %d does not match %d columns' % (v.length, M.num_cols))
    if bits >> M.num_cols:
        raise ValueError('vector exceeds %d columns' % M.num_cols)
    rows, pivots = row_echelon(M)
    return reduce_vector(rows, pivots, bits) == 0


def kernel_basis(M):
    """Basis of {v : M·v = 0}, one row per free column."""
    rows, pivots = row_echelon(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.num_cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, col in zip(rows, pivots):
            if (row >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return BitMatrix(basis, M.num_cols)


def solve_combination(M, v):
    """
    Finds a set of rows of M summing to v.

    Returns:
        An int whose bit i marks row i, or None if v is not in the row space.
    """
    bits = v.bits if isinstance(v, BitVector) else v
    num_rows = M.num_rows
    # track the combination in the bits above num_cols
    augmented = BitMatrix([row | (1 << (M.num_cols + i)) for i, row in enumerate(M.rows)],
                          M.num_cols + num_rows)
    rows, pivots = row_echelon(augmented)
    residual = bits
    combination = 0
    for row, col in zip(rows, pivots):
        if col >= M.num_cols:
            break
        if (residual >> col) & 1:
            residual ^= row & ((1 << M.num_cols) - 1)
            combination ^= row >> M.num_cols
    if residual:
        return None
    return combination


def independent_rows(M):
    """A BitMatrix whose rows are a basis of the row space of M."""
    rows, _ = row_echelon(M)
    return BitMatrix(rows, M.num_cols)


def extend_basis(base, candidates):
    """
    Picks candidates that are independent modulo the span of `base`.

    Returns:
        List of the chosen candidate ints (unreduced).
    """
    rows, pivots = row_echelon(base)
    rows, pivots = list(rows), list(pivots)
    chosen = []
    for v in candidates:
        residual = reduce_vector(rows, pivots, v)
        if residual == 0:
            continue
        col = (residual & -residual).bit_length() - 1
        for i, row in enumerate(rows):
            if (row >> col) & 1:
                rows[i] = row ^ residual
        rows.append(residual)
        pivots.append(col)
        chosen.append(v)
    return chosen


def _check_cap(num_rows, cap):
    if num_rows >= 63 or (1 << num_rows) > cap:
        raise EnumerationCapError('span of %d rows exceeds the enumeration cap of %d elements' % (num_rows, cap))


def enumerate_span(B, cap=DEFAULT_ENUMERATION_CAP, offset=0):
    """
    Yields every element of span(B) (shifted by `offset`) exactly once in
    Gray-code order, starting with `offset` itself; consecutive elements
    differ by a single row of B.

    Args:
        B: BitMatrix with linearly independent rows.
        cap: maximum number of elements the caller is willing to visit.
        offset: coset representative, 0 for the span itself.
    """
    if rank(B) != B.num_rows:
        raise ValueError('rows of the basis are not independent')
    _check_cap(B.num_rows, cap)
    return _gray_code_span(B.rows, offset)


def _gray_code_span(rows, current):
    yield current
    for i in range(1, 1 << len(rows)):
        # index of the row that flips between gray codes i-1 and i
        current ^= rows[(i & -i).bit_length() - 1]
        yield current


def enumerate_subset_sums(rows, cap=DEFAULT_ENUMERATION_CAP):
    """
    Yields the sum of every subset of `rows` (which need not be independent),
    starting with the empty sum, in Gray-code order.
    """
    rows = [row.bits if isinstance(row, BitVector) else row for row in rows]
    _check_cap(len(rows), cap)
    return _gray_code_span(rows, 0)


def popcount_array(values):
    """Elementwise weight of a non-negative integer numpy array."""
    values = np.asarray(values, dtype=np.int64)
    counts = np.zeros_like(values)
    while np.any(values):
        counts += values & 1
        values = values >> 1
    return counts
