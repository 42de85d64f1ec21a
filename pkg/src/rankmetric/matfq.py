"""Dense matrices over F_q.

:class:`MatrixFq` is an immutable wrapper around an int64 array of encoded
field elements.  Rank and RREF delegate to the elimination kernels.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DependentBasis, OutOfRange, ShapeMismatch, SpecMismatch
from .gf import FieldElement, FieldSpec, field_new


class MatrixFq:
    __slots__ = ("field", "data", "_key")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries must lie in [0, {field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr
        self._key = None

    @classmethod
    def zeros(cls, field: FieldSpec, m: int, n: int) -> MatrixFq:
        return cls(field, np.zeros((m, n), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixFq:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def m(self) -> int:
        return self.data.shape[0]

    @property
    def n(self) -> int:
        return self.data.shape[1]

    def entry(self, r: int, c: int) -> FieldElement:
        return FieldElement(self.field, int(self.data[r, c]))

    def rows(self) -> list[list[int]]:
        return self.data.tolist()

    def is_zero(self) -> bool:
        return not self.data.any()

    @property
    def T(self) -> MatrixFq:
        return MatrixFq(self.field, self.data.T)

    def _check(self, other: MatrixFq):
        if not isinstance(other, MatrixFq):
            raise TypeError(f"expected MatrixFq, got {type(other).__name__}")
        if other.field != self.field:
            raise SpecMismatch(f"{self.field} vs {other.field}")
        if other.shape != self.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: MatrixFq) -> MatrixFq:
        self._check(other)
        return MatrixFq(self.field, _kernels.vadd(self.data, other.data, self.field.p, self.field.e))

    def __sub__(self, other: MatrixFq) -> MatrixFq:
        self._check(other)
        return MatrixFq(self.field, _kernels.vsub(self.data, other.data, self.field.p, self.field.e))

    def __neg__(self) -> MatrixFq:
        return MatrixFq(self.field, _kernels.vneg(self.data, self.field.p, self.field.e))

    def scale(self, c) -> MatrixFq:
        c = int(c)
        f = self.field
        return MatrixFq(f, _kernels.vmul(self.data, np.int64(c), f.exp_table, f.log_table))

    def key(self) -> bytes:
        """Hashable identity of the entries (shape included)."""
        if self._key is None:
            self._key = self.data.shape, self.data.tobytes()
        return self._key

    def __eq__(self, other):
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        return f"MatrixFq({self.field!r}, {self.rows()})"

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows())


def matrix(field: FieldSpec, rows: Sequence[Sequence]) -> MatrixFq:
    """Build a matrix from nested rows of ints or FieldElements."""
    rows = [[int(x) for x in row] for row in rows]
    if not rows:
        return MatrixFq(field, np.zeros((0, 0), dtype=np.int64))
    for x in rows:
        if len(x) != len(rows[0]):
            raise ShapeMismatch("ragged rows")
    return MatrixFq(field, rows)


@dataclass(frozen=True)
class RrefMatrix:
    """A matrix in reduced row echelon form with zero rows removed."""

    base: MatrixFq
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def field(self) -> FieldSpec:
        return self.base.field

    @property
    def n(self) -> int:
        return self.base.n

    def is_valid(self) -> bool:
        """Check the four RREF conditions directly on the entries."""
        A = self.base.data
        if A.shape[0] != len(self.pivots):
            return False
        prev = -1
        for r, pc in enumerate(self.pivots):
            row = A[r]
            nz = np.flatnonzero(row)
            if not len(nz) or nz[0] != pc or pc <= prev or row[pc] != 1:
                return False
            if np.count_nonzero(A[:, pc]) != 1:
                return False
            prev = pc
        return True


def rank(A: MatrixFq) -> int:
    if A.data.size == 0:
        return 0
    f = A.field
    return int(_kernels.batch_rank(A.data[None, :, :], *f.kernel_args())[0])


def rank_distance(A: MatrixFq, B: MatrixFq) -> int:
    return rank(A - B)


def rref(A: MatrixFq) -> RrefMatrix:
    m, n = A.shape
    if m == 0 or n == 0:
        return RrefMatrix(MatrixFq(A.field, np.zeros((0, n), dtype=np.int64)), ())
    rows, pivots = _kernels.rref_rows(A.data, *A.field.kernel_args())
    return RrefMatrix(MatrixFq(A.field, rows.reshape(len(pivots), n)),
                      tuple(int(c) for c in pivots))


def row_space_contains(R: RrefMatrix, v: Sequence[int]) -> bool:
    """Whether the vector ``v`` lies in the row space of ``R``."""
    stacked = np.vstack([R.base.data, np.asarray(v, dtype=np.int64)[None, :]])
    return rank(MatrixFq(R.field, stacked)) == R.rank


def puncture(A: MatrixFq, i: int, j: int) -> MatrixFq:
    """Delete the first ``i`` rows and the last ``j`` columns."""
    m, n = A.shape
    if not (0 <= i <= m and 0 <= j <= n):
        raise OutOfRange(f"cannot drop {i} rows and {j} columns from a {m}x{n} matrix")
    return MatrixFq(A.field, A.data[i:, : n - j])


def stack(words: Iterable[MatrixFq]) -> np.ndarray:
    words = list(words)
    if not words:
        return np.zeros((0, 0, 0), dtype=np.int64)
    return np.stack([w.data for w in words])


def coordinates(field: FieldSpec, basis: Sequence) -> np.ndarray:
    """Inverse of the ``e x e`` digit matrix of ``basis`` over F_p.

    Row vector of digits of x times the returned matrix gives the coordinates
    of x in ``basis``.  Raises DependentBasis when ``basis`` is not a basis.
    """
    p, e = field.p, field.e
    vals = [int(b) for b in basis]
    if len(vals) != e:
        raise DependentBasis(f"need {e} basis elements, got {len(vals)}")
    prime = _prime_field(p)
    B = np.array([field.digits(v) for v in vals], dtype=np.int64)
    aug = np.hstack([B, np.eye(e, dtype=np.int64)])
    R = rref(MatrixFq(prime, aug))
    if R.pivots[:e] != tuple(range(e)) or R.rank < e:
        raise DependentBasis("basis elements are linearly dependent over the prime field")
    return R.base.data[:, e:]


def _prime_field(p: int) -> FieldSpec:
    return field_new(p, 1)


def expand_ext_vector(v: Sequence, basis: Sequence) -> MatrixFq:
    """Write each coordinate of ``v`` in F_{p^e} as a row of F_p coordinates.

    Row i of the result holds the coordinates of ``v[i]`` with respect to
    ``basis``, so the result is ``len(v) x e`` over the prime field.
    """
    if not basis:
        raise DependentBasis("empty basis")
    field = _field_of(list(basis) + list(v))
    Binv = coordinates(field, basis)
    prime = _prime_field(field.p)
    D = np.array([field.digits(int(x)) for x in v], dtype=np.int64).reshape(len(v), field.e)
    # coords = D @ Binv over F_p
    out = (D @ Binv) % field.p
    return MatrixFq(prime, out)


def _field_of(items) -> FieldSpec:
    field = None
    for x in items:
        if isinstance(x, FieldElement):
            if field is None:
                field = x.field
            elif x.field != field:
                raise SpecMismatch(f"{field} vs {x.field}")
    if field is None:
        raise TypeError("need FieldElement entries to determine the extension field")
    return field
