"""Morphism spaces, isomorphism testing, and Krull-Schmidt decomposition.

A morphism F: A -> B is a tuple of complex matrices F_v with
B_alpha F_u = F_v A_alpha on full arrows and B_alpha F_u = conj(F_v) A_alpha
on dashed ones. Because of the conjugation, Hom(A, B) is only a *real*
vector space; writing F_v = X_v + i Y_v turns the constraints into a
homogeneous rational linear system whose exact nullspace we compute. All
certified answers (isomorphism certificates, decompositions) are verified
by exact rational arithmetic before being returned; negative answers are
certified only when Hom itself rules them out, and are otherwise Monte
Carlo with seeded sampling.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import PreconditionError, SingularMatrixError
from .linalg import (CMatrix, block_diag, fraction_nullspace, fraction_solve,
                     hstack, submatrix)
from .model import Biquiver, DimensionVector
from .polynomials import (poly_divmod, poly_factor, poly_mul, poly_normalize,
                          poly_xgcd)
from .representation import (MatrixRepresentation, apply_base_change,
                             direct_sum_list)
from .scalars import ZERO, GaussianRational

DEFAULT_TRIALS = 8
DEFAULT_COEFF_BOUND = 10 ** 4

MorphismTuple = tuple[CMatrix, ...]


@dataclass(frozen=True)
class MorphismBasis:
    """Real-rational basis of Hom(A, B) as tuples of per-vertex matrices."""
    biquiver: Biquiver
    source_dims: DimensionVector
    target_dims: DimensionVector
    tuples: tuple[MorphismTuple, ...]

    @property
    def dimension(self) -> int:
        return len(self.tuples)


class Verdict(Enum):
    YES = "Yes"
    NO = "No"
    PROBABLY_NO = "ProbablyNo"


@dataclass(frozen=True)
class IsoResult:
    verdict: Verdict
    certificate: tuple[CMatrix, ...] | None = None
    reason: str | None = None
    trials: int = 0
    seed: int | None = None

    def __bool__(self) -> bool:
        return self.verdict is Verdict.YES


class IndecomposabilityStatus(Enum):
    CERTIFIED = "CertifiedIndecomposable"
    PROBABLE = "ProbablyIndecomposable"


@dataclass(frozen=True)
class Decomposition:
    summands: tuple[MatrixRepresentation, ...]
    base_change: tuple[CMatrix, ...]
    statuses: tuple[IndecomposabilityStatus, ...]
    trials: int
    seed: int


# -- Hom spaces ---------------------------------------------------------------

def _check_same_biquiver(a: MatrixRepresentation, b: MatrixRepresentation) -> None:
    if a.biquiver != b.biquiver:
        raise PreconditionError("representations live over different biquivers")


def hom_basis(a: MatrixRepresentation, b: MatrixRepresentation) -> MorphismBasis:
    """Exact basis of the real vector space Hom(a, b).

    Unknowns are the real and imaginary parts of each F_v, laid out
    vertex by vertex; the basis is the canonical nullspace basis of the
    assembled system, hence deterministic.
    """
    _check_same_biquiver(a, b)
    g = a.biquiver
    da, db = a.dims, b.dims

    offsets = []
    total = 0
    for v in range(g.t):
        offsets.append(total)
        total += 2 * db[v] * da[v]

    def x_index(v: int, i: int, j: int) -> int:
        return offsets[v] + i * da[v] + j

    def y_index(v: int, i: int, j: int) -> int:
        return offsets[v] + db[v] * da[v] + i * da[v] + j

    rows: list[list[Fraction]] = []
    zero = Fraction(0)
    for arrow in g.arrows:
        u, v = arrow.source - 1, arrow.target - 1
        am, bm = a.matrices[arrow.id], b.matrices[arrow.id]
        dashed = arrow.is_dashed
        for i in range(db[v]):
            for j in range(da[u]):
                real = [zero] * total
                imag = [zero] * total
                for k in range(db[u]):
                    c = bm.at(i, k)
                    if c:
                        real[x_index(u, k, j)] += c.re
                        real[y_index(u, k, j)] -= c.im
                        imag[y_index(u, k, j)] += c.re
                        imag[x_index(u, k, j)] += c.im
                for l in range(da[v]):
                    c = am.at(l, j)
                    if not c:
                        continue
                    if dashed:
                        # conj(F_v) A: real -= Xv.Are + Yv.Aim, imag -= Xv.Aim - Yv.Are
                        real[x_index(v, i, l)] -= c.re
                        real[y_index(v, i, l)] -= c.im
                        imag[x_index(v, i, l)] -= c.im
                        imag[y_index(v, i, l)] += c.re
                    else:
                        # F_v A: real -= Xv.Are - Yv.Aim, imag -= Xv.Aim + Yv.Are
                        real[x_index(v, i, l)] -= c.re
                        real[y_index(v, i, l)] += c.im
                        imag[x_index(v, i, l)] -= c.im
                        imag[y_index(v, i, l)] -= c.re
                if any(real):
                    rows.append(real)
                if any(imag):
                    rows.append(imag)

    basis_vectors = fraction_nullspace(rows, total)

    def unflatten(vec: list[Fraction]) -> MorphismTuple:
        mats = []
        for v in range(g.t):
            ent = []
            for i in range(db[v]):
                for j in range(da[v]):
                    ent.append(GaussianRational(vec[x_index(v, i, j)], vec[y_index(v, i, j)]))
            mats.append(CMatrix(db[v], da[v], tuple(ent)))
        return tuple(mats)

    return MorphismBasis(g, da, db, tuple(unflatten(v) for v in basis_vectors))


def _flatten_tuple(basis: MorphismBasis, mats: MorphismTuple) -> list[Fraction]:
    vec: list[Fraction] = []
    for m in mats:
        for e in m.entries:
            vec.append(e.re)
        for e in m.entries:
            vec.append(e.im)
    return vec


def _combine(basis: MorphismBasis, coeffs: list[Fraction]) -> MorphismTuple:
    g = basis.biquiver
    mats = []
    for v in range(g.t):
        r, c = basis.target_dims[v], basis.source_dims[v]
        acc = CMatrix.zero(r, c)
        for coef, tup in zip(coeffs, basis.tuples):
            if coef:
                acc = acc + tup[v].scale(GaussianRational(coef))
        mats.append(acc)
    return tuple(mats)


def _tuple_compose(f: MorphismTuple, g_: MorphismTuple) -> MorphismTuple:
    """Composition f after g, componentwise matrix product."""
    return tuple(fm @ gm for fm, gm in zip(f, g_))


def _identity_tuple(dims: DimensionVector) -> MorphismTuple:
    return tuple(CMatrix.identity(d) for d in dims)


def _satisfies_morphism(a: MatrixRepresentation, b: MatrixRepresentation,
                        f: MorphismTuple) -> bool:
    for arrow in a.biquiver.arrows:
        u, v = arrow.source - 1, arrow.target - 1
        left = b.matrices[arrow.id] @ f[u]
        fv = f[v].conj() if arrow.is_dashed else f[v]
        if left != fv @ a.matrices[arrow.id]:
            return False
    return True


# -- isomorphism testing ------------------------------------------------------

def are_isomorphic(a: MatrixRepresentation, b: MatrixRepresentation,
                   trials: int = DEFAULT_TRIALS, seed: int = 0,
                   coeff_bound: int = DEFAULT_COEFF_BOUND) -> IsoResult:
    """Randomized isomorphism test with exact certificates.

    Yes certificates S_1..S_t are verified exactly before being returned.
    No is certified only when the dimension vectors differ or Hom(a, b)
    is zero while the dimensions are not. Otherwise random rational
    combinations of the Hom basis are tried; invertible tuples form the
    complement of a determinant hypersurface, so when an isomorphism
    exists a random point misses the hypersurface with high probability
    and ProbablyNo after `trials` failures is Monte Carlo evidence only.
    """
    _check_same_biquiver(a, b)
    if a.dims != b.dims:
        return IsoResult(Verdict.NO, reason="dimension vectors differ")
    if a == b:
        return IsoResult(Verdict.YES, certificate=_identity_tuple(a.dims))
    basis = hom_basis(a, b)
    if basis.dimension == 0:
        return IsoResult(Verdict.NO, reason="Hom(a, b) = 0 with nonzero dimensions")
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in basis.tuples]
        f = _combine(basis, coeffs)
        try:
            s = tuple(m.inverse() for m in f)
        except SingularMatrixError:
            continue
        if apply_base_change(a, list(s)) == b:
            return IsoResult(Verdict.YES, certificate=s, trials=trials, seed=seed)
    return IsoResult(Verdict.PROBABLY_NO,
                     reason=f"no invertible morphism found in {trials} samples",
                     trials=trials, seed=seed)


# -- endomorphism algebras ----------------------------------------------------

@dataclass(frozen=True)
class EndAlgebra:
    """End(A) with exact rational structure constants b_i b_j = sum_k c[i][j][k] b_k."""
    basis: MorphismBasis
    structure_constants: tuple[tuple[tuple[Fraction, ...], ...], ...]
    identity_coords: tuple[Fraction, ...]


def end_algebra(a: MatrixRepresentation) -> EndAlgebra:
    basis = hom_basis(a, a)
    flat = [_flatten_tuple(basis, t) for t in basis.tuples]
    columns = [list(v) for v in flat]

    def coords(t: MorphismTuple) -> tuple[Fraction, ...]:
        target = _flatten_tuple(basis, t)
        sol = fraction_solve(columns, target)
        if sol is None:
            raise AssertionError("endomorphism algebra is not closed under composition")
        return tuple(sol)

    n = basis.dimension
    table = tuple(
        tuple(coords(_tuple_compose(basis.tuples[i], basis.tuples[j])) for j in range(n))
        for i in range(n)
    )
    ident = coords(_identity_tuple(a.dims)) if a.total_dim() else tuple()
    return EndAlgebra(basis, table, ident)


# -- Krull-Schmidt decomposition ----------------------------------------------

def _minimal_polynomial(basis: MorphismBasis, phi: MorphismTuple) -> list[Fraction]:
    """Monic minimal polynomial of phi as a real-linear operator tuple.

    Found as the first linear dependence among the flattened powers of phi,
    tracked through incremental Gaussian elimination.
    """
    echelon: list[tuple[int, list[Fraction], list[Fraction]]] = []
    power = _identity_tuple(basis.source_dims)
    poly = [Fraction(1)]
    while True:
        vec = _flatten_tuple(basis, power)
        combo = list(poly)
        for pivot, row, row_poly in echelon:
            if vec[pivot]:
                f = vec[pivot]
                vec = [x - f * y for x, y in zip(vec, row)]
                pad = len(combo) - len(row_poly)
                padded = row_poly + [Fraction(0)] * pad
                combo = [x - f * y for x, y in zip(combo, padded)]
        lead = next((i for i, x in enumerate(vec) if x), None)
        if lead is None:
            return poly_normalize(combo)
        inv = 1 / vec[lead]
        echelon.append((lead, [x * inv for x in vec], [x * inv for x in combo]))
        power = _tuple_compose(phi, power)
        poly = [Fraction(0)] + poly


def _eval_poly_tuple(poly: list[Fraction], phi: MorphismTuple,
                     dims: DimensionVector) -> MorphismTuple:
    """Horner evaluation of a rational polynomial at a morphism tuple."""
    acc = tuple(CMatrix.zero(d, d) for d in dims)
    ident = _identity_tuple(dims)
    for c in reversed(poly):
        acc = _tuple_compose(acc, phi)
        if c:
            acc = tuple(am + im.scale(GaussianRational(c)) for am, im in zip(acc, ident))
    return acc


def _coprime_split(minpoly: list[Fraction]) -> tuple[list[Fraction], list[Fraction]] | None:
    """Split the minimal polynomial into two nonconstant coprime factors."""
    factors = poly_factor(minpoly)
    if len(factors) < 2:
        return None
    base, mult = factors[0]
    m1 = [Fraction(1)]
    for _ in range(mult):
        m1 = poly_mul(m1, base)
    m2, rem = poly_divmod(minpoly, m1)
    assert not any(rem)
    return m1, m2


def _splitting_idempotent(minpoly, phi, dims) -> MorphismTuple | None:
    split = _coprime_split(minpoly)
    if split is None:
        return None
    m1, m2 = split
    _, u, w = poly_xgcd(m1, m2)
    # e = (w m2)(phi) acts as identity on ker m1(phi) and zero on ker m2(phi)
    e = _eval_poly_tuple(poly_mul(w, m2), phi, dims)
    assert _tuple_compose(e, e) == e
    return e


def _vertex_killers(basis: MorphismBasis, vertex: int,
                    vec: CMatrix) -> list[list[Fraction]]:
    """Coordinates of the endomorphisms annihilating a vector at one vertex.

    Such endomorphisms are singular, so their minimal polynomials pick up a
    factor of x; together with the coprime Fitting split this decomposes
    isotypic sums X + X whose generic endomorphisms have irreducible
    rational minimal polynomials.
    """
    columns = []
    for tup in basis.tuples:
        image = tup[vertex] @ vec
        flat = [e.re for e in image.entries]
        flat.extend(e.im for e in image.entries)
        columns.append(flat)
    height = len(columns[0]) if columns else 0
    rows = [[col[i] for col in columns] for i in range(height)]
    return fraction_nullspace(rows, len(columns))


def _trace_form(basis: MorphismBasis) -> list[list[Fraction]]:
    """Gram matrix of (f, g) -> real trace of fg acting on the realified spaces."""
    n = basis.dimension
    t = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            acc = Fraction(0)
            for fm, gm in zip(basis.tuples[i], basis.tuples[j]):
                for k in range(fm.rows):
                    for l in range(fm.cols):
                        acc += 2 * (fm.at(k, l) * gm.at(l, k)).re
            t[i][j] = t[j][i] = acc
    return t


def _radical_coords(basis: MorphismBasis) -> list[list[Fraction]]:
    """Coordinates (in the Hom basis) of a basis of the radical of End.

    In characteristic zero the radical of a unital algebra of operators is
    the kernel of the trace form of any faithful module: nilpotent ideals
    are trace-free, and conversely an element orthogonal to everything has
    all powers trace-free, hence is nilpotent.
    """
    return fraction_nullspace(_trace_form(basis), basis.dimension)


def _certify_local(basis: MorphismBasis) -> bool:
    """True when End is certifiably local, i.e. the representation is
    certifiably indecomposable.

    End is local iff End modulo its radical is a division algebra. The
    quotient is semisimple; we recognize the real and complex fields (a
    two-dimensional unital algebra is automatically commutative, and it is
    a field exactly when the non-identity generator has negative
    discriminant). Quotients of dimension >= 3 are never certified here.
    """
    rad = _radical_coords(basis)
    quotient_dim = basis.dimension - len(rad)
    if quotient_dim == 1:
        return True
    if quotient_dim != 2:
        return False
    flat_id = _flatten_tuple(basis, _identity_tuple(basis.source_dims))
    rad_flat = [_flatten_tuple(basis, _combine(basis, coords)) for coords in rad]
    span_cols = [flat_id] + rad_flat
    psi = None
    for tup in basis.tuples:
        if fraction_solve(span_cols, _flatten_tuple(basis, tup)) is None:
            psi = tup
            break
    assert psi is not None
    # psi^2 = alpha psi + beta id (mod radical)
    flat_sq = _flatten_tuple(basis, _tuple_compose(psi, psi))
    sol = fraction_solve([_flatten_tuple(basis, psi)] + span_cols, flat_sq)
    assert sol is not None
    alpha, beta = sol[0], sol[1]
    disc = alpha * alpha + 4 * beta
    assert disc != 0, "semisimple quotient cannot have a nilpotent generator"
    return disc < 0


def _image_kernel_change(e: MorphismTuple) -> tuple[list[CMatrix], DimensionVector]:
    """Per-vertex base change [im-basis | ker-basis] for an idempotent tuple."""
    ts = []
    ranks = []
    for ev in e:
        im = ev.column_space_basis()
        ker = ev.nullspace_basis()
        ts.append(hstack(im, ker))
        ranks.append(im.cols)
    return ts, tuple(ranks)


def _slice_block(a: MatrixRepresentation, starts: DimensionVector,
                 sizes: DimensionVector) -> MatrixRepresentation:
    mats = {}
    for arrow in a.biquiver.arrows:
        u, v = arrow.source - 1, arrow.target - 1
        m = a.matrices[arrow.id]
        mats[arrow.id] = submatrix(m, range(starts[v], starts[v] + sizes[v]),
                                   range(starts[u], starts[u] + sizes[u]))
    return MatrixRepresentation(a.biquiver, sizes, mats)


def _assert_block_diagonal(a: MatrixRepresentation, split: DimensionVector) -> None:
    for arrow in a.biquiver.arrows:
        u, v = arrow.source - 1, arrow.target - 1
        m = a.matrices[arrow.id]
        for i in range(split[v]):
            for j in range(split[u], a.dims[u]):
                assert m.at(i, j) == ZERO, "idempotent did not block-diagonalize"
        for i in range(split[v], a.dims[v]):
            for j in range(split[u]):
                assert m.at(i, j) == ZERO, "idempotent did not block-diagonalize"


def decompose(a: MatrixRepresentation, trials: int = DEFAULT_TRIALS, seed: int = 0,
              coeff_bound: int = DEFAULT_COEFF_BOUND) -> Decomposition:
    """Decompose into indecomposables by recursive Fitting-style splitting.

    Random rational endomorphisms are sampled; whenever the minimal
    polynomial of one factors into coprime rational pieces, the Bezout
    idempotent splits the representation exactly and the process recurses.
    Splittings that would need irrational idempotents are not found, so a
    leaf is CertifiedIndecomposable only when End modulo its radical is
    certifiably the real or complex field (End is then local), and
    ProbablyIndecomposable otherwise. The certificate satisfies: base
    change applied to `a` equals the direct sum of the summands, exactly.
    """
    rng = random.Random(seed)

    def rec(rep: MatrixRepresentation):
        if rep.total_dim() == 0:
            return [], [CMatrix.identity(d) for d in rep.dims], []
        basis = hom_basis(rep, rep)
        n = basis.dimension
        if _certify_local(basis):
            return [rep], [CMatrix.identity(d) for d in rep.dims], \
                [IndecomposabilityStatus.CERTIFIED]

        def attempt(phi: MorphismTuple):
            return _splitting_idempotent(_minimal_polynomial(basis, phi), phi, rep.dims)

        for _ in range(trials):
            coeffs = [Fraction(rng.randint(-coeff_bound, coeff_bound))
                      for _ in range(n)]
            e = attempt(_combine(basis, coeffs))
            if e is None:
                # singular-element search: endomorphisms killing a random
                # vector at some vertex have x | minimal polynomial, which
                # splits isotypic sums whose generic endomorphisms have
                # irreducible rational minimal polynomials
                vertices = [w for w in range(rep.biquiver.t) if rep.dims[w] > 0]
                rng.shuffle(vertices)
                for w in vertices:
                    vec = CMatrix.column([GaussianRational(
                        Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
                        for _ in range(rep.dims[w])])
                    if vec.is_zero():
                        continue
                    killers = _vertex_killers(basis, w, vec)
                    if not killers:
                        continue
                    candidates = []
                    for _ in range(2):
                        candidates.append([
                            sum((Fraction(rng.randint(-9, 9)) * k[i] for k in killers),
                                Fraction(0)) for i in range(n)])
                    candidates.extend(killers)
                    for coords in candidates:
                        if not any(coords):
                            continue
                        e = attempt(_combine(basis, coords))
                        if e is not None:
                            break
                    if e is not None:
                        break
            if e is None:
                continue
            ts, ranks = _image_kernel_change(e)
            if all(r == d for r, d in zip(ranks, rep.dims)) or not any(ranks):
                continue
            changed = apply_base_change(rep, ts)
            _assert_block_diagonal(changed, ranks)
            first = _slice_block(changed, (0,) * rep.biquiver.t, ranks)
            second = _slice_block(changed, ranks,
                                  tuple(d - r for d, r in zip(rep.dims, ranks)))
            s1, c1, st1 = rec(first)
            s2, c2, st2 = rec(second)
            total_change = [t @ block_diag(x, y) for t, x, y in zip(ts, c1, c2)]
            return s1 + s2, total_change, st1 + st2
        return [rep], [CMatrix.identity(d) for d in rep.dims], \
            [IndecomposabilityStatus.PROBABLE]

    summands, change, statuses = rec(a)
    result = Decomposition(tuple(summands), tuple(change), tuple(statuses),
                           trials, seed)
    recombined = direct_sum_list(a.biquiver, list(result.summands))
    assert apply_base_change(a, list(result.base_change)) == recombined
    return result


def krull_schmidt_compare(x: list[MatrixRepresentation], y: list[MatrixRepresentation],
                          trials: int = DEFAULT_TRIALS, seed: int = 0,
                          coeff_bound: int = DEFAULT_COEFF_BOUND
                          ) -> list[tuple[int, int, tuple[CMatrix, ...]]] | None:
    """Match two summand lists up to isomorphism; None when no bijection exists.

    Greedy matching by dimension vector followed by pairwise isomorphism
    tests, returning (index_in_x, index_in_y, certificate) triples.
    """
    if len(x) != len(y):
        return None
    unmatched = list(range(len(y)))
    matching = []
    for i, xi in enumerate(x):
        found = None
        for pos, j in enumerate(unmatched):
            if y[j].dims != xi.dims:
                continue
            res = are_isomorphic(xi, y[j], trials=trials, seed=seed + 7919 * (i + 1) + j,
                                 coeff_bound=coeff_bound)
            if res.verdict is Verdict.YES:
                found = (pos, j, res.certificate)
                break
        if found is None:
            return None
        pos, j, cert = found
        unmatched.pop(pos)
        matching.append((i, j, cert))
    return matching
