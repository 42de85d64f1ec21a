"""Generalized Ferrers diagram rank-metric codes.

A code is a set of ``a x b`` matrices vanishing off the dots of a Ferrers
diagram.  Dropping the first ``i`` rows and the last ``d-1-i`` columns of every
codeword keeps all codewords distinct when the minimum distance is at least
``d``; counting what survives gives ``|C| <= q^(min_i v_i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .codes import RankMetricCode, min_rank_distance
from .errors import ConsistencyViolation, OutOfRange, PrematureCall, ShapeMismatch, SupportViolation
from .ferrers import FerrersDiagram, ferrers_bound_exponent
from .gf import FieldSpec, field_new
from .matfq import MatrixFq, puncture, rank


def support_mask(F: FerrersDiagram, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Dot cells of ``F``; with ``shape`` the diagram sits right-aligned in its top rows."""
    a, b = F.box if shape is None else shape
    mask = np.zeros((a, b), dtype=bool)
    for r, length in enumerate(F.rows[:a]):
        mask[r, max(0, b - length):] = True
    return mask


class FerrersCode:
    def __init__(self, diagram: FerrersDiagram, underlying: RankMetricCode, declared_d: int | None = None):
        self.diagram = diagram
        self.underlying = underlying
        self.declared_d = declared_d

    @property
    def field(self) -> FieldSpec:
        return self.underlying.field

    @property
    def codewords(self):
        return self.underlying.codewords

    def __len__(self):
        return len(self.underlying)

    def min_distance(self) -> int:
        return min_rank_distance(self.underlying)

    def verify(self) -> bool:
        """Support condition plus (if declared) the minimum-distance premise."""
        mask = support_mask(self.diagram)
        if any(w.data[~mask].any() for w in self.codewords):
            return False
        if self.declared_d is not None and len(self) >= 2:
            return self.min_distance() >= self.declared_d
        return True

    def __repr__(self):
        return f"<FerrersCode diagram={self.diagram} M={len(self)} over {self.field!r}>"


def ferrers_code_new(F: FerrersDiagram, words: Iterable[MatrixFq], field: FieldSpec | None = None,
                     declared_d: int | None = None) -> FerrersCode:
    words = list(words)
    shape = F.box
    mask = support_mask(F)
    for w in words:
        # support first, so a stray entry is named even when the word is too big
        if w.shape != shape:
            bad = np.argwhere((w.data != 0) & ~support_mask(F, w.shape))
            if len(bad):
                raise SupportViolation(tuple(int(x) for x in bad[0]))
            raise ShapeMismatch(f"codeword of shape {w.shape} for a {shape[0]}x{shape[1]} diagram")
        bad = np.argwhere((w.data != 0) & ~mask)
        if len(bad):
            raise SupportViolation(tuple(int(x) for x in bad[0]))
    if field is None:
        field = words[0].field if words else field_new(2, 1)
    code = RankMetricCode(words, field=field, shape=shape)
    return FerrersCode(F, code, declared_d)


def ferrers_singleton_bound(F: FerrersDiagram, d: int, q: int) -> int:
    return q ** ferrers_bound_exponent(F, d).exponent


def ferrers_dim_bound(F: FerrersDiagram, d: int) -> int:
    """Upper bound on the F_q-dimension of a linear code on ``F`` with distance ``d``."""
    return ferrers_bound_exponent(F, d).exponent


def punctured_support(F: FerrersDiagram, i: int, j: int) -> set[tuple[int, int]]:
    """Dot cells that survive dropping the first ``i`` rows and last ``j`` columns,
    in the coordinates of the punctured ``(a-i) x (b-j)`` box."""
    cut = F.b - j
    return {(r - i, c) for r, c in F.dots if r >= i and c < cut}


@dataclass(frozen=True)
class PunctureReport:
    words: tuple[MatrixFq, ...]
    distinct: bool
    i: int
    j: int


def puncture_code(C: FerrersCode, i: int, d: int) -> PunctureReport:
    if d < 1 or not 0 <= i <= d - 1:
        raise OutOfRange(f"need 0 <= i <= d-1, got i={i}, d={d}")
    a, b = C.diagram.box
    j = d - 1 - i
    if i > a or j > b:
        raise OutOfRange(f"cannot drop {i} rows and {j} columns from a {a}x{b} box")
    images = tuple(puncture(w, i, j) for w in C.codewords)
    distinct = len({w.key() for w in images}) == len(images)
    if not distinct:
        if C.declared_d is not None and C.declared_d >= d:
            raise ConsistencyViolation(
                f"punctured codewords collide although d >= {d} was declared; the declared distance is wrong")
        if len(C) >= 2 and C.min_distance() >= d:
            raise ConsistencyViolation(f"punctured codewords collide in a code of minimum distance >= {d}")
    return PunctureReport(images, distinct, i, j)


@dataclass(frozen=True)
class RankChain:
    total: int  # rank(X - Y)
    top: int  # rank of the first i rows, blocks [A B]
    right: int  # rank of block C, last d-1-i columns below row i
    i: int
    d: int

    @property
    def holds(self) -> bool:
        return self.total <= self.top + self.right <= self.d - 1


def rank_decomposition(X: MatrixFq, Y: MatrixFq, i: int, d: int) -> RankChain:
    if X.shape != Y.shape:
        raise ShapeMismatch(f"{X.shape} vs {Y.shape}")
    a, b = X.shape
    j = d - 1 - i
    if d < 1 or not 0 <= i <= d - 1 or i > a or j > b:
        raise OutOfRange(f"bad puncturing i={i}, d={d} for a {a}x{b} matrix")
    if puncture(X, i, j) != puncture(Y, i, j):
        raise PrematureCall("the two matrices differ after puncturing")
    D = X - Y
    top = MatrixFq(D.field, D.data[:i, :])
    right = MatrixFq(D.field, D.data[i:, b - j:])
    return RankChain(rank(D), rank(top), rank(right), i, d)


def rank_decomposition_check(X: MatrixFq, Y: MatrixFq, i: int, d: int) -> bool:
    """rank(X-Y) <= rank([A B]) + rank(C) <= d-1 for a pair equal after puncturing."""
    return rank_decomposition(X, Y, i, d).holds
