"""Matrix representations of biquivers.

A representation assigns a dimension d_v to each vertex and a d_v x d_u
complex-rational matrix to each arrow u -> v (of either kind). Base change
by invertible matrices S_1..S_t acts as S_v^{-1} A S_u on full arrows and
as conj(S_v)^{-1} A S_u on dashed ones; two representations are isomorphic
exactly when a base change carries one onto the other. Zero-dimensional
vertices are fully supported (empty matrices count as invertible).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError, PreconditionError
from .linalg import CMatrix, block_diag
from .model import (Biquiver, DimensionVector, biquiver_to_obj,
                    parse_biquiver_obj)
from .scalars import GaussianRational, parse_gaussian_pair


@dataclass(frozen=True)
class MatrixRepresentation:
    biquiver: Biquiver
    dims: DimensionVector
    matrices: dict[str, CMatrix]

    def __post_init__(self):
        g = self.biquiver
        if len(self.dims) != g.t:
            raise FormatError(
                f"dimension vector has length {len(self.dims)}, biquiver has {g.t} vertices")
        if any(d < 0 for d in self.dims):
            raise FormatError("dimensions must be nonnegative")
        ids = {a.id for a in g.arrows}
        extra = set(self.matrices) - ids
        if extra:
            raise FormatError(f"matrices given for unknown arrows: {sorted(extra)}")
        for a in g.arrows:
            m = self.matrices.get(a.id)
            if m is None:
                raise FormatError(f"missing matrix for arrow {a.id!r}")
            want = (self.dims[a.target - 1], self.dims[a.source - 1])
            if (m.rows, m.cols) != want:
                raise FormatError(
                    f"arrow {a.id!r} needs a {want[0]}x{want[1]} matrix, "
                    f"got {m.rows}x{m.cols}")

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    def total_dim(self) -> int:
        return sum(self.dims)


def zero_representation(g: Biquiver, dims: DimensionVector | None = None) -> MatrixRepresentation:
    """All-zero matrices; by default the zero-dimensional representation."""
    if dims is None:
        dims = (0,) * g.t
    mats = {a.id: CMatrix.zero(dims[a.target - 1], dims[a.source - 1]) for a in g.arrows}
    return MatrixRepresentation(g, tuple(dims), mats)


def direct_sum(a: MatrixRepresentation, b: MatrixRepresentation) -> MatrixRepresentation:
    if a.biquiver != b.biquiver:
        raise PreconditionError("direct sum needs representations of the same biquiver")
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    mats = {aid: block_diag(a.matrices[aid], b.matrices[aid]) for aid in a.matrices}
    return MatrixRepresentation(a.biquiver, dims, mats)


def direct_sum_list(g: Biquiver, summands: list[MatrixRepresentation]) -> MatrixRepresentation:
    total = zero_representation(g)
    for s in summands:
        total = direct_sum(total, s)
    return total


def apply_base_change(a: MatrixRepresentation, s: list[CMatrix]) -> MatrixRepresentation:
    """Transform by invertible S_1..S_t; the result is isomorphic to the input."""
    g = a.biquiver
    if len(s) != g.t:
        raise PreconditionError(f"need {g.t} transition matrices, got {len(s)}")
    inv = []
    for v, m in enumerate(s, start=1):
        if (m.rows, m.cols) != (a.dim(v), a.dim(v)):
            raise PreconditionError(
                f"transition matrix at vertex {v} must be {a.dim(v)}x{a.dim(v)}")
        inv.append(m.inverse())
    mats = {}
    for arr in g.arrows:
        m = a.matrices[arr.id]
        # conj(S)^{-1} = conj(S^{-1}), so one inverse per vertex suffices
        left = inv[arr.target - 1].conj() if arr.is_dashed else inv[arr.target - 1]
        mats[arr.id] = left @ m @ s[arr.source - 1]
    return MatrixRepresentation(g, a.dims, mats)


def random_representation(g: Biquiver, dims: DimensionVector, entry_bound: int,
                          seed: int) -> MatrixRepresentation:
    """Deterministic seeded representation with bounded rational entries.

    Each entry is re + im*i with numerators drawn from [-entry_bound,
    entry_bound] and denominators from [1, entry_bound]. Matrices are
    filled row-major in the biquiver's arrow order, so equal seeds give
    equal output.
    """
    if entry_bound < 1:
        raise PreconditionError("entry_bound must be at least 1")
    if len(dims) != g.t:
        raise PreconditionError(
            f"dimension vector has length {len(dims)}, biquiver has {g.t} vertices")
    rng = random.Random(seed)

    def entry() -> GaussianRational:
        re = Fraction(rng.randint(-entry_bound, entry_bound), rng.randint(1, entry_bound))
        im = Fraction(rng.randint(-entry_bound, entry_bound), rng.randint(1, entry_bound))
        return GaussianRational(re, im)

    mats = {}
    for a in g.arrows:
        r, c = dims[a.target - 1], dims[a.source - 1]
        mats[a.id] = CMatrix(r, c, tuple(entry() for _ in range(r * c)))
    return MatrixRepresentation(g, tuple(dims), mats)


# -- JSON format --------------------------------------------------------------

def matrix_to_obj(m: CMatrix) -> list:
    return [[m.at(i, j).to_pair() for j in range(m.cols)] for i in range(m.rows)]


def parse_matrix_obj(obj, rows: int | None = None, cols: int | None = None) -> CMatrix:
    if not isinstance(obj, list):
        raise FormatError("matrix must be a list of rows")
    r = len(obj)
    widths = {len(row) if isinstance(row, list) else -1 for row in obj}
    if -1 in widths:
        raise FormatError("matrix rows must be lists")
    if len(widths) > 1:
        raise FormatError("ragged matrix rows")
    c = widths.pop() if widths else (cols if cols is not None else 0)
    if rows is not None and r != rows:
        raise FormatError(f"expected {rows} rows, got {r}")
    if cols is not None and r > 0 and c != cols:
        raise FormatError(f"expected {cols} columns, got {c}")
    entries = tuple(parse_gaussian_pair(cell) for row in obj for cell in row)
    return CMatrix(r, c, entries)


def representation_to_obj(a: MatrixRepresentation, embed_biquiver: bool = True) -> dict:
    obj = {
        "dims": list(a.dims),
        "matrices": {aid: matrix_to_obj(m) for aid, m in sorted(a.matrices.items())},
    }
    if embed_biquiver:
        obj["biquiver"] = biquiver_to_obj(a.biquiver)
    return obj


def parse_representation_obj(obj, biquiver: Biquiver | None = None) -> MatrixRepresentation:
    """Parse {"dims", "matrices"[, "biquiver"]}; the biquiver may be embedded."""
    if not isinstance(obj, dict):
        raise FormatError("representation document must be a JSON object")
    if biquiver is None:
        if "biquiver" not in obj:
            raise FormatError(
                "no biquiver supplied and none embedded in the representation document")
        biquiver = parse_biquiver_obj(obj["biquiver"])
    dims = obj.get("dims")
    if (not isinstance(dims, list) or len(dims) != biquiver.t
            or any(not isinstance(d, int) or isinstance(d, bool) or d < 0 for d in dims)):
        raise FormatError(f"'dims' must be a list of {biquiver.t} nonnegative integers")
    raw = obj.get("matrices")
    if not isinstance(raw, dict):
        raise FormatError("'matrices' must be an object keyed by arrow id")
    mats = {}
    for arrow in biquiver.arrows:
        if arrow.id not in raw:
            raise FormatError(f"missing matrix for arrow {arrow.id!r}")
        mats[arrow.id] = parse_matrix_obj(
            raw[arrow.id], rows=dims[arrow.target - 1], cols=dims[arrow.source - 1])
    extra = set(raw) - {a.id for a in biquiver.arrows}
    if extra:
        raise FormatError(f"matrices given for unknown arrows: {sorted(extra)}")
    return MatrixRepresentation(biquiver, tuple(dims), mats)


def parse_representation(text: str, biquiver: Biquiver | None = None) -> MatrixRepresentation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return parse_representation_obj(obj, biquiver)


def serialize_representation(a: MatrixRepresentation, embed_biquiver: bool = True) -> str:
    return json.dumps(representation_to_obj(a, embed_biquiver),
                      sort_keys=True, separators=(",", ":"))
