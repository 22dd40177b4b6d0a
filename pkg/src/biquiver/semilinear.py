"""Matrix calculus for linear and semilinear maps.

The matrix M of a semilinear map sends coordinates x to conj(M x), so
composition picks up conjugations: composing with a linear map on the
outside conjugates the outer matrix, and two semilinear maps compose to a
linear one. Change of basis for a semilinear operator is consimilarity,
conj(S)^{-1} M S; consimilarity of two square matrices is decided by the
representation isomorphism test on the one-dashed-loop biquiver.
"""
from __future__ import annotations

from enum import Enum

from .errors import FormatError
from .linalg import CMatrix
from .model import Arrow, ArrowKind, Biquiver
from .morphisms import DEFAULT_COEFF_BOUND, DEFAULT_TRIALS, IsoResult, are_isomorphic
from .representation import MatrixRepresentation


class MapKind(Enum):
    LINEAR = "linear"
    SEMILINEAR = "semilinear"


def apply_map(kind: MapKind, m: CMatrix, x: CMatrix) -> CMatrix:
    """Apply the map with matrix m to a column vector x."""
    if x.cols != 1 or m.cols != x.rows:
        raise FormatError(
            f"cannot apply {m.rows}x{m.cols} matrix to {x.rows}x{x.cols} vector")
    y = m @ x
    return y.conj() if kind is MapKind.SEMILINEAR else y


def compose(kind_b: MapKind, b: CMatrix, kind_a: MapKind, a: CMatrix
            ) -> tuple[MapKind, CMatrix]:
    """Matrix and kind of the composition (b after a).

    The result is semilinear iff exactly one input is; the outer matrix is
    conjugated exactly when the inner map is semilinear.
    """
    if b.cols != a.rows:
        raise FormatError(
            f"inner dimensions differ: {b.rows}x{b.cols} after {a.rows}x{a.cols}")
    semi = (kind_b is MapKind.SEMILINEAR) != (kind_a is MapKind.SEMILINEAR)
    kind = MapKind.SEMILINEAR if semi else MapKind.LINEAR
    left = b.conj() if kind_a is MapKind.SEMILINEAR else b
    return kind, left @ a


def change_of_basis(kind: MapKind, m: CMatrix, s_target: CMatrix,
                    s_source: CMatrix) -> CMatrix:
    """Matrix of the same map after changing source and target bases."""
    if s_source.rows != m.cols or s_target.rows != m.rows:
        raise FormatError("transition matrices do not match the map's shape")
    left = s_target.conj() if kind is MapKind.SEMILINEAR else s_target
    return left.inverse() @ m @ s_source


_LOOP_ID = "a"


def _dashed_loop_rep(m: CMatrix) -> MatrixRepresentation:
    g = Biquiver(1, (Arrow(_LOOP_ID, 1, 1, ArrowKind.DASHED),))
    return MatrixRepresentation(g, (m.rows,), {_LOOP_ID: m})


def are_consimilar(a: CMatrix, b: CMatrix, trials: int = DEFAULT_TRIALS,
                   seed: int = 0, coeff_bound: int = DEFAULT_COEFF_BOUND) -> IsoResult:
    """Decide whether conj(S)^{-1} a S = b has an invertible solution S.

    Yes results carry an exactly verified S (the certificate's single
    matrix); No is certified via the morphism space, ProbablyNo is Monte
    Carlo. Delegates to the one-dashed-loop biquiver where isomorphism of
    representations is precisely consimilarity.
    """
    if not a.is_square or not b.is_square or a.rows != b.rows:
        raise FormatError("consimilarity needs square matrices of equal size")
    return are_isomorphic(_dashed_loop_rep(a), _dashed_loop_rep(b),
                          trials=trials, seed=seed, coeff_bound=coeff_bound)
