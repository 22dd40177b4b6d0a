"""Shared builders for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

from biquiver import (Arrow, ArrowKind, Biquiver, CMatrix,
                      MatrixRepresentation, apply_base_change, gaussian)


def biq(t: int, *specs: str) -> Biquiver:
    """Compact biquiver builder: "a:1>2" is a full arrow, "a:1~2" dashed."""
    arrows = []
    for spec in specs:
        name, rest = spec.split(":")
        if ">" in rest:
            u, v = rest.split(">")
            kind = ArrowKind.FULL
        else:
            u, v = rest.split("~")
            kind = ArrowKind.DASHED
        arrows.append(Arrow(name, int(u), int(v), kind))
    return Biquiver(t, tuple(arrows))


def path_biquiver(t: int, dashed: tuple[int, ...] = ()) -> Biquiver:
    """Path 1 -> 2 -> ... -> t; edge i (1-based) is dashed when listed."""
    arrows = []
    for i in range(1, t):
        kind = ArrowKind.DASHED if i in dashed else ArrowKind.FULL
        arrows.append(Arrow(f"e{i}", i, i + 1, kind))
    return Biquiver(t, tuple(arrows))


def cycle_biquiver(r: int, dashed: tuple[int, ...] = ()) -> Biquiver:
    """Cycle on r vertices; arrow i joins i to i+1, arrow r closes r -> 1."""
    arrows = []
    for i in range(1, r):
        kind = ArrowKind.DASHED if i in dashed else ArrowKind.FULL
        arrows.append(Arrow(f"e{i}", i, i + 1, kind))
    kind = ArrowKind.DASHED if r in dashed else ArrowKind.FULL
    arrows.append(Arrow(f"e{r}", r, 1, kind))
    return Biquiver(r, tuple(arrows))


def star_biquiver(branches: list[int], dashed: tuple[str, ...] = ()) -> Biquiver:
    """Star with center 1 and branch lengths as given; arrows point outward."""
    t = 1 + sum(branches)
    arrows = []
    nxt = 2
    for b, length in enumerate(branches):
        prev = 1
        for k in range(length):
            name = f"b{b}e{k}"
            kind = ArrowKind.DASHED if name in dashed else ArrowKind.FULL
            arrows.append(Arrow(name, prev, nxt, kind))
            prev = nxt
            nxt += 1
    return Biquiver(t, tuple(arrows))


def mat(*rows) -> CMatrix:
    """Matrix literal over ints/Fractions; mat([1, 2], [3, 4])."""
    return CMatrix.from_rows(list(rows))


def gmat(*rows) -> CMatrix:
    """Matrix literal of (re, im) pairs; gmat([(0, 1)]) is [i]."""
    return CMatrix.from_rows([[gaussian(re, im) for re, im in row] for row in rows])


def random_biquiver(rng: random.Random, max_t: int = 3, max_arrows: int = 3) -> Biquiver:
    t = rng.randint(1, max_t)
    n = rng.randint(1, max_arrows)
    arrows = []
    for k in range(n):
        u, v = rng.randint(1, t), rng.randint(1, t)
        kind = rng.choice((ArrowKind.FULL, ArrowKind.DASHED))
        arrows.append(Arrow(f"a{k}", u, v, kind))
    return Biquiver(t, tuple(arrows))


def random_invertible(rng: random.Random, n: int, bound: int = 3) -> CMatrix:
    """Random invertible matrix with small Gaussian-rational entries."""
    while True:
        m = CMatrix(n, n, tuple(
            gaussian(Fraction(rng.randint(-bound, bound)),
                     Fraction(rng.randint(-bound, bound)))
            for _ in range(n * n)))
        if m.is_invertible():
            return m


def random_base_change(rng: random.Random, rep: MatrixRepresentation,
                       bound: int = 3) -> MatrixRepresentation:
    s = [random_invertible(rng, d, bound) for d in rep.dims]
    return apply_base_change(rep, s)


def similar_small_oracle(m: CMatrix, n: CMatrix) -> bool:
    """Exact similarity test for sizes <= 2: equal characteristic polynomial
    and the same scalar-or-not Jordan structure."""
    assert m.rows <= 2 and m.is_square and n.is_square
    if m.rows != n.rows:
        return False
    if m.rows <= 1:
        return m == n
    tr_m, det_m = m.at(0, 0) + m.at(1, 1), m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)
    tr_n, det_n = n.at(0, 0) + n.at(1, 1), n.at(0, 0) * n.at(1, 1) - n.at(0, 1) * n.at(1, 0)
    if (tr_m, det_m) != (tr_n, det_n):
        return False

    def is_scalar(x: CMatrix) -> bool:
        return not x.at(0, 1) and not x.at(1, 0) and x.at(0, 0) == x.at(1, 1)

    return is_scalar(m) == is_scalar(n)


def consimilar_necessary_invariant(m: CMatrix, n: CMatrix) -> bool:
    """Necessary condition: m conj(m) similar to n conj(n) (sizes <= 2)."""
    return similar_small_oracle(m @ m.conj(), n @ n.conj())
