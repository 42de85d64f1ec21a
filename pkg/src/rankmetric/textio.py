"""Plain-text matrix and code files.

::

    # optional comments
    GF 2 3 11          field header: p e modulus-integer (modulus optional)
    DIAGRAM 4,4,2      optional, Ferrers codes only
    SHAPE 3 4          optional; inferred from the first block when absent
    1 0 0 1            one row per line, encoded field elements
    ...
                       blank line between matrices
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import FormatError
from .ferrers import FerrersDiagram
from .gf import FieldSpec, field_new
from .matfq import MatrixFq


@dataclass
class MatrixFile:
    field: FieldSpec
    matrices: list[MatrixFq]
    shape: tuple[int, int] | None = None
    diagram: FerrersDiagram | None = None


def parse_field_header(line: str) -> FieldSpec:
    tok = line.split()
    if not tok or tok[0] != "GF" or len(tok) not in (3, 4):
        raise FormatError(f"bad field header {line!r}, expected 'GF p e [modulus]'")
    try:
        p, e = int(tok[1]), int(tok[2])
        modulus = int(tok[3]) if len(tok) == 4 else None
    except ValueError:
        raise FormatError(f"non-integer token in field header {line!r}") from None
    return field_new(p, e, modulus)


def parse_matrices(text: str) -> MatrixFile:
    field = None
    shape = None
    diagram = None
    blocks: list[list[list[int]]] = []
    current: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if current:
                blocks.append(current)
                current = []
            continue
        head = line.split()[0]
        if head == "GF":
            if field is not None:
                raise FormatError(f"line {lineno}: second field header")
            field = parse_field_header(line)
        elif head == "SHAPE":
            tok = line.split()
            if len(tok) != 3:
                raise FormatError(f"line {lineno}: expected 'SHAPE m n'")
            shape = (int(tok[1]), int(tok[2]))
        elif head == "DIAGRAM":
            try:
                diagram = FerrersDiagram.parse(line[len("DIAGRAM"):])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: {exc}") from None
        else:
            if field is None:
                raise FormatError(f"line {lineno}: matrix rows before the 'GF' header")
            try:
                current.append([int(x) for x in line.split()])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer entry in {raw!r}") from None
    if current:
        blocks.append(current)
    if field is None:
        raise FormatError("missing 'GF p e modulus' header")
    if shape is None and diagram is not None:
        shape = diagram.box
    elif shape is not None and diagram is not None and shape != diagram.box:
        raise FormatError(f"SHAPE {shape} disagrees with the diagram box {diagram.box}")
    matrices = []
    for k, block in enumerate(blocks):
        if any(len(row) != len(block[0]) for row in block):
            raise FormatError(f"matrix {k + 1}: ragged rows")
        if shape is None:
            shape = (len(block), len(block[0]))
        if (len(block), len(block[0])) != shape:
            raise FormatError(f"matrix {k + 1}: shape {len(block)}x{len(block[0])}, expected {shape}")
        arr = np.array(block, dtype=np.int64)
        if arr.min() < 0 or arr.max() >= field.q:
            raise FormatError(f"matrix {k + 1}: entries must lie in [0, {field.q})")
        matrices.append(MatrixFq(field, arr))
    return MatrixFile(field, matrices, shape, diagram)


def read_matrices(path) -> MatrixFile:
    return parse_matrices(Path(path).read_text())


def format_matrices(field: FieldSpec, matrices: Iterable[MatrixFq], diagram: FerrersDiagram | None = None,
                    shape: tuple[int, int] | None = None) -> str:
    matrices = list(matrices)
    lines = [field.header()]
    if diagram is not None:
        lines.append(f"DIAGRAM {diagram}")
    if shape is None and matrices:
        shape = matrices[0].shape
    if shape is not None:
        lines.append(f"SHAPE {shape[0]} {shape[1]}")
    for k, A in enumerate(matrices):
        if k:
            lines.append("")
        lines.extend(" ".join(str(v) for v in row) for row in A.rows())
    return "\n".join(lines) + "\n"


def write_matrices(path, field: FieldSpec, matrices: Iterable[MatrixFq], diagram=None, shape=None):
    Path(path).write_text(format_matrices(field, matrices, diagram, shape))
