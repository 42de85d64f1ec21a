"""Generalized rank-metric codes and Singleton-type bounds.

A code here is any finite set of equal-shape matrices over one field; linear
codes are the special case of F_q-subspaces.  Bounds return exact Python ints.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import BadParams, DependentPoints, OutOfRange, ShapeMismatch, SpecMismatch, TooFewCodewords
from .gf import FieldElement, FieldSpec, field_new, is_prime
from .matfq import MatrixFq, coordinates, expand_ext_vector, rank, stack


class RankMetricCode:
    """Deduplicated, ordered collection of ``m x n`` matrices over one field."""

    def __init__(self, words: Iterable[MatrixFq], field: FieldSpec | None = None,
                 shape: tuple[int, int] | None = None, linear: bool | None = None,
                 metadata: dict | None = None):
        seen = {}
        for w in words:
            if field is None:
                field = w.field
            if shape is None:
                shape = w.shape
            if w.field != field:
                raise SpecMismatch(f"{w.field} vs {field}")
            if w.shape != tuple(shape):
                raise ShapeMismatch(f"codeword of shape {w.shape} in a {shape} code")
            seen.setdefault(w.key(), w)
        if field is None or shape is None:
            raise ValueError("an empty code needs an explicit field and shape")
        self.field = field
        self.shape = tuple(shape)
        self.codewords = tuple(seen.values())
        self.linear = linear
        self.metadata = dict(metadata or {})
        self._min_distance = None
        self._array = None

    def __len__(self):
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __contains__(self, A: MatrixFq):
        return any(A == w for w in self.codewords)

    @property
    def array(self) -> np.ndarray:
        if self._array is None:
            m, n = self.shape
            arr = stack(self.codewords) if self.codewords else np.zeros((0, m, n), dtype=np.int64)
            arr.setflags(write=False)
            self._array = arr
        return self._array

    @property
    def min_distance(self) -> int:
        return min_rank_distance(self)

    def dimension(self) -> int:
        """F_q-dimension of the span of the codewords (equals log_q |C| for linear codes)."""
        if not self.codewords:
            return 0
        flat = self.array.reshape(len(self), -1)
        return rank(MatrixFq(self.field, flat))

    def __repr__(self):
        m, n = self.shape
        return f"<RankMetricCode {m}x{n} over {self.field!r}, {len(self)} codewords>"


def min_rank_distance(C: RankMetricCode) -> int:
    """Exact minimum rank distance by comparing every pair."""
    if len(C) < 2:
        raise TooFewCodewords(f"minimum distance needs two codewords, code has {len(C)}")
    if C._min_distance is None:
        C._min_distance = int(_kernels.pairwise_min_distance(C.array, *C.field.kernel_args()))
    return C._min_distance


def is_linear(C: RankMetricCode) -> bool:
    """Closed under addition and scalar multiplication (brute force)."""
    if not C.codewords:
        return False
    keys = {w.key() for w in C.codewords}
    f = C.field
    for w in C.codewords:
        for c in range(2, f.q):
            if w.scale(c).key() not in keys:
                return False
    for x, y in itertools.combinations_with_replacement(C.codewords, 2):
        if (x + y).key() not in keys:
            return False
    return True


def correctable_errors(d: int) -> int:
    if d < 1:
        raise BadParams(f"d must be positive, got {d}")
    return (d - 1) // 2


def classical_singleton_bound(n: int, d: int, q: int) -> int:
    if not 1 <= d <= n:
        raise BadParams(f"need 1 <= d <= n, got n={n}, d={d}")
    return q ** (n - d + 1)


def rank_singleton_exponent(m: int, n: int, d: int) -> int:
    if not 1 <= d <= min(m, n):
        raise BadParams(f"need 1 <= d <= min(m, n), got m={m}, n={n}, d={d}")
    return min(m * (n - d + 1), n * (m - d + 1))


def rank_singleton_bound(m: int, n: int, d: int, q: int) -> int:
    return q ** rank_singleton_exponent(m, n, d)


def format_bound(q: int, exponent: int) -> str:
    return f"{q}^{exponent} = {q ** exponent} (exponent {exponent})"


# -- classical (Hamming) codes ----------------------------------------------

class HammingCode:
    def __init__(self, words: Iterable[Sequence[int]], n: int | None = None, q: int = 2):
        rows = {}
        for w in words:
            t = tuple(int(x) for x in w)
            if n is None:
                n = len(t)
            if len(t) != n:
                raise ShapeMismatch(f"word of length {len(t)} in a length-{n} code")
            if any(not 0 <= x < q for x in t):
                raise ValueError(f"symbols must lie in [0, {q})")
            rows.setdefault(t, None)
        self.n = n or 0
        self.q = q
        self.codewords = tuple(rows)

    def __len__(self):
        return len(self.codewords)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.codewords, dtype=np.int64).reshape(len(self), self.n)

    def min_distance(self) -> int:
        if len(self) < 2:
            raise TooFewCodewords("minimum distance needs two codewords")
        W = self.array
        diff = (W[:, None, :] != W[None, :, :]).sum(axis=2)
        iu = np.triu_indices(len(self), 1)
        return int(diff[iu].min())


@dataclass(frozen=True)
class DeletionReport:
    words: tuple[tuple[int, ...], ...]
    distinct: bool


def delete_coordinates(C: HammingCode, positions: Iterable[int]) -> DeletionReport:
    """Drop ``positions`` from every codeword and report whether images stay distinct."""
    pos = set(int(p) for p in positions)
    if any(not 0 <= p < C.n for p in pos):
        raise OutOfRange(f"positions {sorted(pos)} outside [0, {C.n})")
    keep = [j for j in range(C.n) if j not in pos]
    words = tuple(tuple(w[j] for j in keep) for w in C.codewords)
    return DeletionReport(words, len(set(words)) == len(words))


# -- Gabidulin ----------------------------------------------------------------

def gabidulin_example_code() -> RankMetricCode:
    """The 3x3 binary MRD code given by the parity check (1, a^2, a) over F_8.

    F_8 is built on x^3 + x + 1 and every kernel vector is expanded with the
    basis {1, a, a^2}.
    """
    F8 = field_new(2, 3, (1, 1, 0, 1))
    a = F8.alpha
    h = (F8(1), a ** 2, a)
    kernel = [x for x in itertools.product(range(8), repeat=3)
              if sum((F8(xi) * hi for xi, hi in zip(x, h)), F8(0)) == 0]
    basis = [F8(1), a, a ** 2]
    words = [_expand(F8, x, basis) for x in kernel]
    return RankMetricCode(words, linear=True, metadata={"extension_dimension": 2})


def _expand(field: FieldSpec, v: Sequence, basis: Sequence, Binv=None) -> MatrixFq:
    if Binv is None:
        return expand_ext_vector([FieldElement(field, int(x)) for x in v], basis)
    D = np.array([field.digits(int(x)) for x in v], dtype=np.int64).reshape(len(v), field.e)
    return MatrixFq(field_new(field.p, 1), (D @ Binv) % field.p)


MAX_GABIDULIN_SIZE = 1 << 16


def gabidulin_construct(q: int, m: int, n: int, k: int, points: Sequence | None = None,
                        modulus=None) -> RankMetricCode:
    """Evaluation code of q-linearized polynomials of q-degree < k.

    Evaluates ``f(x) = sum_i f_i x^(q^i)`` at ``n`` points of F_{q^m} that are
    linearly independent over F_q, then expands each coordinate in the
    polynomial basis, giving ``n x m`` matrices over F_q.  ``q`` must be prime.
    """
    if not is_prime(q):
        raise BadParams(f"q must be prime, got {q}")
    if not (1 <= k <= n <= m):
        raise BadParams(f"need 1 <= k <= n <= m, got k={k}, n={n}, m={m}")
    if q ** (m * k) > MAX_GABIDULIN_SIZE:
        raise BadParams(f"{q}^{m * k} codewords exceed the desk-scale cap {MAX_GABIDULIN_SIZE}")
    F = field_new(q, m, modulus)
    if points is None:
        points = [F.alpha ** j for j in range(n)]
    points = [FieldElement(F, int(g)) for g in points]
    if len(points) != n:
        raise BadParams(f"need {n} evaluation points, got {len(points)}")
    digits = MatrixFq(field_new(q, 1), [F.digits(g.value) for g in points])
    if rank(digits) < n:
        raise DependentPoints("evaluation points are linearly dependent over F_q")

    # frob[i][j] = g_j^(q^i)
    frob = [[g ** (q ** i) for g in points] for i in range(k)]
    basis = [F.alpha ** j for j in range(m)]
    Binv = coordinates(F, basis)
    words = []
    for msg in itertools.product(range(F.q), repeat=k):
        cw = []
        for j in range(n):
            acc = F(0)
            for i in range(k):
                acc = acc + F(msg[i]) * frob[i][j]
            cw.append(acc.value)
        words.append(_expand(F, cw, basis, Binv))
    return RankMetricCode(words, linear=True,
                          metadata={"extension_dimension": k, "designed_distance": n - k + 1})
