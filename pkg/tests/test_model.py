import json

import pytest

from biquiver import (ArrowKind, Biquiver, FormatError, connected_components,
                      induced_subbiquiver, parse_biquiver, serialize_biquiver,
                      underlying_structure)
from conftest import biq, cycle_biquiver, path_biquiver


def test_parse_simple_document():
    g = parse_biquiver('{"vertices":2,"arrows":[{"id":"a","from":1,"to":2,"kind":"dashed"}]}')
    assert g.t == 2
    assert g.arrows[0].kind is ArrowKind.DASHED
    assert g.arrows[0].source == 1 and g.arrows[0].target == 2


def test_parse_empty_biquiver():
    g = parse_biquiver('{"vertices":1,"arrows":[]}')
    assert g.t == 1 and g.arrows == ()


def test_round_trips():
    g = biq(3, "a:1>2", "b:2~3", "c:3~3", "d:1>3")
    text = serialize_biquiver(g)
    assert parse_biquiver(text) == g
    doc = json.dumps(json.loads(text), sort_keys=True, separators=(",", ":"))
    assert serialize_biquiver(parse_biquiver(doc)) == doc


@pytest.mark.parametrize("doc,fragment", [
    ('{"vertices":2,"arrows":[{"id":"a","from":3,"to":2,"kind":"full"}]}', "outside"),
    ('{"vertices":2,"arrows":[{"id":"a","from":1,"to":2,"kind":"full"},'
     '{"id":"a","from":2,"to":1,"kind":"full"}]}', "duplicate"),
    ('{"vertices":0,"arrows":[]}', "positive"),
    ('{"arrows":[]}', "vertices"),
    ('{"vertices":2,"arrows":[{"id":"a","from":1,"to":2,"kind":"wavy"}]}', "kind"),
    ('{"vertices":2,"arrows":[{"id":"a","from":1,"kind":"full"}]}', "to"),
    ('not json', "JSON"),
])
def test_parse_errors(doc, fragment):
    with pytest.raises(FormatError) as exc:
        parse_biquiver(doc)
    assert fragment in str(exc.value)


def test_structure_of_path():
    s = underlying_structure(path_biquiver(3, dashed=(1, 2)))
    assert s.connected and s.is_tree
    assert s.pendant_vertices == (1, 3)
    assert s.loops == (0, 0, 0)
    assert s.cycle_basis_parities == ()


def test_structure_of_two_cycle():
    g = biq(2, "a:1~2", "b:2>1")
    s = underlying_structure(g)
    assert s.connected and not s.is_tree
    assert s.cycle_basis_parities == (1,)
    assert s.multiedges == {(1, 2): 2}


def test_structure_of_single_loop():
    g = biq(1, "a:1>1")
    s = underlying_structure(g)
    assert not s.is_tree
    assert s.loops == (1,)
    assert s.cycle_basis_parities == (0,)


def test_loop_is_a_cycle_for_tree_test():
    g = biq(2, "a:1>2", "l:2~2")
    s = underlying_structure(g)
    assert s.connected and not s.is_tree
    assert s.cycle_basis_parities == (1,)


def test_cycle_parities_count_dashed_arrows():
    for dashed in [(), (1,), (1, 2), (1, 2, 3)]:
        s = underlying_structure(cycle_biquiver(3, dashed=dashed))
        assert s.cycle_basis_parities == (len(dashed) % 2,)


def test_tree_iff_connected_and_edge_count():
    # connected with t-1 non-loop arrows and no loops
    assert underlying_structure(path_biquiver(5)).is_tree
    # disconnected
    g = Biquiver(3, path_biquiver(2).arrows)
    s = underlying_structure(g)
    assert not s.connected and not s.is_tree


def test_components_and_induced():
    g = biq(4, "a:1>2", "b:3~3")
    comps = connected_components(g)
    assert comps == [[1, 2], [3], [4]]
    sub = induced_subbiquiver(g, [3])
    assert sub.t == 1 and sub.arrows[0].is_loop
