"""Conjugation at a vertex and dash-elimination planning.

Conjugating a biquiver at a vertex u toggles full <-> dashed on every
non-loop arrow incident to u; loops at u keep their kind. On a
representation it conjugates, entrywise, the matrix of every arrow that
starts at u (loops included). Conjugation preserves isomorphism classes,
and conjugations at distinct vertices commute, so a sequence of
conjugations is just a vertex set.

Whether some set of conjugations removes every dashed arrow is a parity
question over GF(2): c(u) + c(v) must equal the dashed flag of each
non-loop arrow. On a spanning tree the system always propagates; the
obstructions are dashed loops (conjugation never changes a loop's kind)
and cycles carrying an odd number of dashed arrows.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import PreconditionError
from .linalg import CMatrix
from .model import Arrow, ArrowKind, Biquiver
from .representation import MatrixRepresentation


def conjugate_biquiver(g: Biquiver, u: int) -> Biquiver:
    if not 1 <= u <= g.t:
        raise PreconditionError(f"vertex {u} outside 1..{g.t}")
    arrows = []
    for a in g.arrows:
        if not a.is_loop and u in (a.source, a.target):
            kind = ArrowKind.DASHED if a.kind is ArrowKind.FULL else ArrowKind.FULL
            arrows.append(Arrow(a.id, a.source, a.target, kind))
        else:
            arrows.append(a)
    return Biquiver(g.t, tuple(arrows))


def conjugate_representation(a: MatrixRepresentation, u: int) -> MatrixRepresentation:
    """Representation of the conjugated biquiver, per the conjugation functor."""
    g = conjugate_biquiver(a.biquiver, u)
    mats = {}
    for arrow in a.biquiver.arrows:
        m = a.matrices[arrow.id]
        mats[arrow.id] = m.conj() if arrow.source == u else m
    return MatrixRepresentation(g, a.dims, mats)


def transport_isomorphism(s: list[CMatrix], u: int) -> list[CMatrix]:
    """Carry an isomorphism certificate through conjugation at u.

    If S_1..S_t witnesses A = B up to base change, then the same list with
    S_u conjugated witnesses the conjugated pair.
    """
    return [m.conj() if v == u else m for v, m in enumerate(s, start=1)]


@dataclass(frozen=True)
class DashEliminationPlan:
    vertices: frozenset[int]


@dataclass(frozen=True)
class DashEliminationObstruction:
    reason: str


def dash_elimination_plan(g: Biquiver) -> DashEliminationPlan | DashEliminationObstruction:
    """Vertex set whose conjugations make every arrow full, or why none exists.

    Solves c(u) xor c(v) = dashed(e) over GF(2) by rooting a spanning tree
    at vertex 1 and checking consistency on the remaining arrows.
    """
    for a in g.arrows:
        if a.is_loop and a.is_dashed:
            return DashEliminationObstruction(f"dashed loop at vertex {a.source}")

    adj: list[list[tuple[int, Arrow]]] = [[] for _ in range(g.t + 1)]
    for a in g.arrows:
        if not a.is_loop:
            adj[a.source].append((a.target, a))
            adj[a.target].append((a.source, a))

    color = [None] * (g.t + 1)
    parent = [0] * (g.t + 1)
    color[1] = 0
    queue = deque([1])
    tree_arrows = set()
    order = [1]
    while queue:
        v = queue.popleft()
        for w, a in adj[v]:
            if color[w] is None:
                color[w] = color[v] ^ (1 if a.is_dashed else 0)
                parent[w] = v
                tree_arrows.add(a.id)
                order.append(w)
                queue.append(w)
    if any(color[v] is None for v in g.vertices()):
        raise PreconditionError("biquiver is not connected")

    for a in g.arrows:
        if a.is_loop or a.id in tree_arrows:
            continue
        want = 1 if a.is_dashed else 0
        if color[a.source] ^ color[a.target] != want:
            cycle = _tree_path(parent, a.source, a.target) + [a.source]
            return DashEliminationObstruction(
                "odd dashed parity on cycle <" + " ".join(str(v) for v in cycle) + ">")
    return DashEliminationPlan(frozenset(v for v in g.vertices() if color[v] == 1))


def _tree_path(parent: list[int], u: int, v: int) -> list[int]:
    """Vertices of the spanning-tree path u .. v, through their meeting point."""
    anc_u = [u]
    while anc_u[-1] != 1:
        anc_u.append(parent[anc_u[-1]])
    anc_index = {x: i for i, x in enumerate(anc_u)}
    down = []
    x = v
    while x not in anc_index:
        down.append(x)
        x = parent[x]
    return anc_u[:anc_index[x] + 1] + list(reversed(down))


def apply_conjugations(g: Biquiver, vertices) -> Biquiver:
    """Conjugate at each vertex of a set (order is immaterial)."""
    for u in sorted(vertices):
        g = conjugate_biquiver(g, u)
    return g


def apply_conjugations_representation(a: MatrixRepresentation, vertices) -> MatrixRepresentation:
    for u in sorted(vertices):
        a = conjugate_representation(a, u)
    return a
