"""The Tits quadratic form of a biquiver and its exact definiteness.

q_G(x) = sum x_i^2 - sum_{arrows u->v} x_u x_v, summed over all arrows of
either kind. Definiteness is decided without floating point: the
characteristic polynomial of the rational Gram matrix is computed by the
Faddeev-LeVerrier recurrence and classified by coefficient signs.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import FormatError, PreconditionError
from .linalg import fraction_nullspace
from .model import Biquiver, DimensionVector


class Definiteness(Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    POSITIVE_SEMIDEFINITE = "PositiveSemidefinite"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class TitsGram:
    """Symmetric rational Gram matrix Q with x^T Q x = q_G(x)."""
    t: int
    q: tuple[tuple[Fraction, ...], ...]


def gram_matrix(g: Biquiver) -> TitsGram:
    half = Fraction(1, 2)
    q = [[Fraction(0)] * g.t for _ in range(g.t)]
    for v in range(g.t):
        q[v][v] = Fraction(1)
    for a in g.arrows:
        u, v = a.source - 1, a.target - 1
        if u == v:
            q[u][u] -= 1
        else:
            q[u][v] -= half
            q[v][u] -= half
    return TitsGram(g.t, tuple(tuple(row) for row in q))


def evaluate(g: Biquiver, z: DimensionVector) -> int:
    """q_G(z), always an integer for integer z."""
    if len(z) != g.t:
        raise PreconditionError(
            f"dimension vector has length {len(z)}, biquiver has {g.t} vertices")
    total = sum(zi * zi for zi in z)
    for a in g.arrows:
        total -= z[a.source - 1] * z[a.target - 1]
    return total


def _char_poly_signs(gram: TitsGram) -> list[Fraction]:
    """Elementary symmetric functions e_1..e_t of the eigenvalues of Q.

    Faddeev-LeVerrier: with p(x) = x^t + c_1 x^{t-1} + ... + c_t,
    e_k = (-1)^k c_k.
    """
    n = gram.t
    a = [list(row) for row in gram.q]
    mk = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    es = []
    sign = -1
    for k in range(1, n + 1):
        am = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        ck = -sum(am[i][i] for i in range(n)) / k
        es.append(sign * ck)
        sign = -sign
        mk = [[am[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return es


def definiteness(gram: TitsGram) -> Definiteness:
    """Exact three-way verdict on the symmetric rational matrix Q.

    All eigenvalues of a real symmetric Q are real, so Q is positive
    semidefinite iff every elementary symmetric function of the eigenvalues
    is nonnegative, and positive definite iff additionally det Q > 0.
    PositiveSemidefinite here means semidefinite and singular.
    """
    for i in range(gram.t):
        for j in range(i):
            if gram.q[i][j] != gram.q[j][i]:
                raise FormatError("Gram matrix must be symmetric")
    es = _char_poly_signs(gram)
    if any(e < 0 for e in es):
        return Definiteness.INDEFINITE
    if es[-1] > 0:
        return Definiteness.POSITIVE_DEFINITE
    return Definiteness.POSITIVE_SEMIDEFINITE


def radical_vector(gram: TitsGram) -> DimensionVector | None:
    """Primitive positive integer generator of ker Q, when it exists.

    Present exactly when Q is positive semidefinite singular with a
    one-dimensional kernel spanned by a strictly positive vector (the case
    of a connected tame biquiver).
    """
    if definiteness(gram) is not Definiteness.POSITIVE_SEMIDEFINITE:
        return None
    rows = [list(row) for row in gram.q]
    basis = fraction_nullspace(rows, gram.t)
    if len(basis) != 1:
        return None
    vec = basis[0]
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        return None
    return tuple(ints)
