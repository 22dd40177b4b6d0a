import random

import pytest

from biquiver import (Arrow, ArrowKind, Biquiver, Definiteness, PreconditionError,
                      RepKind, definiteness, diagram_shape, gram_matrix,
                      representation_type)
from conftest import biq, cycle_biquiver, path_biquiver, star_biquiver


def test_paths_are_a_series():
    for t in range(1, 9):
        assert diagram_shape(path_biquiver(t, dashed=(1,) if t > 1 else ())) == f"A{t}"
        assert representation_type(path_biquiver(t)).kind is RepKind.FINITE


def test_single_loop_is_extended_a0():
    g = biq(1, "a:1~1")
    assert diagram_shape(g) == "~A0"
    assert representation_type(g).kind is RepKind.TAME_INFINITE


def test_double_edge_is_extended_a1():
    g = biq(2, "a:1>2", "b:2~1")
    assert diagram_shape(g) == "~A1"
    assert representation_type(g).kind is RepKind.TAME_INFINITE


def test_cycles_are_extended_a():
    for r in range(3, 8):
        assert diagram_shape(cycle_biquiver(r, dashed=(1,))) == f"~A{r - 1}"


def test_d_series():
    for t in range(4, 9):
        g = star_biquiver([1, 1, t - 3])
        assert diagram_shape(g) == f"D{t}"


def test_e_series_and_extensions():
    assert diagram_shape(star_biquiver([1, 2, 2])) == "E6"
    assert diagram_shape(star_biquiver([1, 2, 3])) == "E7"
    assert diagram_shape(star_biquiver([1, 2, 4])) == "E8"
    assert diagram_shape(star_biquiver([2, 2, 2])) == "~E6"
    assert diagram_shape(star_biquiver([1, 3, 3])) == "~E7"
    assert diagram_shape(star_biquiver([1, 2, 5])) == "~E8"
    assert diagram_shape(star_biquiver([1, 2, 6])) is None
    assert diagram_shape(star_biquiver([2, 2, 3])) is None
    assert diagram_shape(star_biquiver([1, 3, 4])) is None


def test_extended_d_series():
    assert diagram_shape(star_biquiver([1, 1, 1, 1])) == "~D4"
    # dumbbells: forks of two leaves at both ends of a path
    for inner in range(0, 4):
        t = 6 + inner
        arrows = [("p0", 1, 2), ("p1", 1, 3)]
        chain = [1] + list(range(4, 4 + inner))
        for i in range(len(chain) - 1):
            arrows.append((f"c{i}", chain[i], chain[i + 1]))
        last = chain[-1]
        hub = t - 2
        arrows.append(("mid", last, hub))
        arrows.append(("q0", hub, t - 1))
        arrows.append(("q1", hub, t))
        g = Biquiver(t, tuple(Arrow(n, u, v, ArrowKind.FULL) for n, u, v in arrows))
        assert diagram_shape(g) == f"~D{t - 1}"


def test_wild_shapes():
    # one full and one dashed loop at a single vertex
    assert representation_type(biq(1, "a:1>1", "b:1~1")).kind is RepKind.WILD
    # dashed loop plus an arrow to a second vertex
    assert representation_type(biq(2, "l:1~1", "a:1>2")).kind is RepKind.WILD
    # triple edge
    assert representation_type(biq(2, "a:1>2", "b:1>2", "c:1>2")).kind is RepKind.WILD
    # cycle with a pendant vertex
    g = biq(4, "a:1>2", "b:2>3", "c:3>1", "d:3~4")
    assert representation_type(g).kind is RepKind.WILD
    # star with five branches
    assert representation_type(star_biquiver([1, 1, 1, 1, 1])).kind is RepKind.WILD
    # degree-4 vertex with a long branch
    assert representation_type(star_biquiver([1, 1, 1, 2])).kind is RepKind.WILD


def test_disconnected_rejected():
    g = Biquiver(3, path_biquiver(2).arrows)
    with pytest.raises(PreconditionError):
        representation_type(g)


def test_type_invariant_under_kinds_and_directions():
    rng = random.Random(2)
    shapes = [path_biquiver(4), cycle_biquiver(4), star_biquiver([1, 1, 2]),
              biq(2, "l:1~1", "a:1>2")]
    for g in shapes:
        base = representation_type(g)
        for _ in range(10):
            arrows = []
            for a in g.arrows:
                u, v = (a.source, a.target) if rng.random() < 0.5 else (a.target, a.source)
                kind = rng.choice((ArrowKind.FULL, ArrowKind.DASHED))
                arrows.append(Arrow(a.id, u, v, kind))
            # kinds and directions never change the verdict or the label
            assert representation_type(Biquiver(g.t, tuple(arrows))) == base


def test_agreement_with_definiteness_on_random_trees():
    # shape verdicts must match the Tits form verdict on larger trees too
    rng = random.Random(9)
    for _ in range(300):
        t = rng.randint(1, 10)
        arrows = tuple(Arrow(f"e{v}", rng.randint(1, v), v + 1,
                             rng.choice((ArrowKind.FULL, ArrowKind.DASHED)))
                       for v in range(1, t))
        g = Biquiver(t, arrows)
        rt = representation_type(g).kind
        d = definiteness(gram_matrix(g))
        assert (rt is RepKind.FINITE) == (d is Definiteness.POSITIVE_DEFINITE)
        assert (rt in (RepKind.FINITE, RepKind.TAME_INFINITE)) == \
            (d in (Definiteness.POSITIVE_DEFINITE, Definiteness.POSITIVE_SEMIDEFINITE))


def test_diagram_vertex_count_matches():
    cases = [(path_biquiver(5), "A5"), (cycle_biquiver(5), "~A4"),
             (star_biquiver([1, 1, 2]), "D5"), (star_biquiver([2, 2, 2]), "~E6")]
    for g, label in cases:
        assert diagram_shape(g) == label
        rt = representation_type(g)
        assert rt.diagram == label
        assert (rt.diagram is not None) == (rt.kind is not RepKind.WILD)
