"""Identifying vectors, echelon Ferrers forms, and the dot-filling of an RREF."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

import numpy as np

from .errors import ExtraCell, IncompleteFill, PinnedMismatch, SpecMismatch
from .ferrers import FerrersDiagram
from .gf import FieldElement, FieldSpec
from .matfq import MatrixFq, RrefMatrix

ZERO, ONE, DOT = 0, 1, 2
_GLYPH = {ZERO: "0", ONE: "1", DOT: "."}


@dataclass(frozen=True)
class IdentifyingVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"identifying vector must be binary: {bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> IdentifyingVector:
        text = text.strip().replace(",", "").replace(" ", "")
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(j for j, b in enumerate(self.bits) if b)

    def __str__(self):
        return "".join(str(b) for b in self.bits)


def identifying_vector(R: RrefMatrix) -> IdentifyingVector:
    piv = set(R.pivots)
    return IdentifyingVector(tuple(int(j in piv) for j in range(R.n)))


@dataclass(frozen=True)
class EchelonFerrersForm:
    v: IdentifyingVector

    @property
    def k(self) -> int:
        return self.v.weight

    @property
    def n(self) -> int:
        return self.v.n

    @cached_property
    def cells(self) -> np.ndarray:
        """``k x n`` grid of ZERO / ONE / DOT cell kinds."""
        piv = self.v.positions
        grid = np.full((self.k, self.n), ZERO, dtype=np.int8)
        pivset = set(piv)
        for r, pc in enumerate(piv):
            grid[r, pc] = ONE
            for c in range(pc + 1, self.n):
                if c not in pivset:
                    grid[r, c] = DOT
        grid.setflags(write=False)
        return grid

    @cached_property
    def dot_columns(self) -> tuple[int, ...]:
        """Form columns carrying at least one dot, left to right."""
        return tuple(c for c in range(self.n) if (self.cells[:, c] == DOT).any())

    @cached_property
    def diagram(self) -> FerrersDiagram:
        lengths = [int((self.cells[r] == DOT).sum()) for r in range(self.k)]
        return FerrersDiagram(tuple(x for x in lengths if x > 0))

    @cached_property
    def cell_map(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Diagram coordinate -> form coordinate for every dot."""
        col_of = {c: j for j, c in enumerate(self.dot_columns)}
        out = {}
        for r in range(self.k):
            for c in range(self.n):
                if self.cells[r, c] == DOT:
                    out[(r, col_of[c])] = (r, c)
        return out

    def render(self) -> str:
        return "\n".join("".join(_GLYPH[int(x)] for x in row) for row in self.cells)


def echelon_ferrers_form(v: IdentifyingVector | str) -> EchelonFerrersForm:
    if isinstance(v, str):
        v = IdentifyingVector.parse(v)
    return EchelonFerrersForm(v)


def extract_ferrers_matrix(R: RrefMatrix) -> tuple[EchelonFerrersForm, dict[tuple[int, int], FieldElement]]:
    """Read the dot entries of ``R`` off its echelon Ferrers form.

    The returned map is keyed by diagram coordinates ``(row, col)`` inside the
    diagram's bounding box.
    """
    ef = EchelonFerrersForm(identifying_vector(R))
    A = R.base.data
    cells = ef.cells
    pinned = cells != DOT
    if A.shape != cells.shape or not np.array_equal(A[pinned], cells[pinned].astype(np.int64)):
        bad = np.argwhere(pinned & (A != cells))
        where = tuple(int(x) for x in bad[0]) if len(bad) else None
        raise PinnedMismatch(f"entry at {where} contradicts the echelon form of its pivots")
    fill = {dc: FieldElement(R.field, int(A[fc])) for dc, fc in ef.cell_map.items()}
    return ef, fill


def inject_ferrers_matrix(ef: EchelonFerrersForm, fill: Mapping[tuple[int, int], object],
                          field: FieldSpec | None = None) -> RrefMatrix:
    """Substitute field elements into the dots of ``ef``."""
    if field is None:
        fields = {x.field for x in fill.values() if isinstance(x, FieldElement)}
        if len(fields) > 1:
            raise SpecMismatch("fill mixes fields")
        if not fields:
            raise ValueError("field must be given when the fill holds no FieldElements")
        field = fields.pop()
    expected = set(ef.cell_map)
    got = set(fill)
    if got - expected:
        raise ExtraCell(f"cells {sorted(got - expected)} are not dots of the form")
    if expected - got:
        raise IncompleteFill(f"cells {sorted(expected - got)} are missing from the fill")
    A = ef.cells.astype(np.int64) * (ef.cells == ONE)
    for dc, (r, c) in ef.cell_map.items():
        x = fill[dc]
        if isinstance(x, FieldElement) and x.field != field:
            raise SpecMismatch(f"{x.field} vs {field}")
        A[r, c] = FieldElement(field, int(x)).value
    return RrefMatrix(MatrixFq(field, A.reshape(ef.k, ef.n)), ef.v.positions)


def fill_to_matrix(ef: EchelonFerrersForm, fill: Mapping, field: FieldSpec) -> MatrixFq:
    """The ``a x b`` matrix associated with the diagram (zeros off the dots)."""
    a, b = ef.diagram.box
    A = np.zeros((a, b), dtype=np.int64)
    for (r, c), x in fill.items():
        A[r, c] = int(x)
    return MatrixFq(field, A)


def matrix_to_fill(ef: EchelonFerrersForm, A: MatrixFq) -> dict[tuple[int, int], FieldElement]:
    return {dc: A.entry(*dc) for dc in ef.cell_map}


def count_spanning_matrices(R: RrefMatrix) -> int:
    """Ordered bases of the row space: prod_{i<k} (q^k - q^i)."""
    q, k = R.field.q, R.rank
    out = 1
    for i in range(k):
        out *= q ** k - q ** i
    return out
