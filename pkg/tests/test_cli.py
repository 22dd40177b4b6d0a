import json

import pytest

from biquiver import serialize_biquiver, serialize_representation, random_representation
from biquiver.cli import main
from conftest import cycle_biquiver, path_biquiver


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run


@pytest.fixture
def a3_file(tmp_path):
    p = tmp_path / "a3.json"
    p.write_text(serialize_biquiver(path_biquiver(3, dashed=(2,))))
    return str(p)


@pytest.fixture
def a2_file(tmp_path):
    p = tmp_path / "a2.json"
    p.write_text(serialize_biquiver(path_biquiver(2)))
    return str(p)


def test_classify(run, a3_file):
    code, out, _ = run("classify", a3_file)
    assert code == 0
    assert json.loads(out) == {"kind": "Finite", "diagram": "A3",
                               "definiteness": "PositiveDefinite"}


def test_classify_disconnected_exit_3(run, tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"vertices":3,"arrows":[{"id":"a","from":1,"to":2,"kind":"full"}]}')
    code, _, err = run("classify", str(p))
    assert code == 3
    assert "connected" in err


def test_classify_components(run, tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"vertices":3,"arrows":[{"id":"a","from":1,"to":2,"kind":"full"}]}')
    code, out, _ = run("classify", str(p), "--components")
    assert code == 0
    comps = json.loads(out)["components"]
    assert [c["vertices"] for c in comps] == [[1, 2], [3]]
    assert [c["diagram"] for c in comps] == ["A2", "A1"]


def test_roots_bare_array(run, a2_file):
    code, out, _ = run("roots", a2_file, "--value", "1")
    assert code == 0
    assert json.loads(out) == [[0, 1], [1, 0], [1, 1]]


def test_roots_needs_bound_exit_3(run, tmp_path):
    p = tmp_path / "c.json"
    p.write_text(serialize_biquiver(cycle_biquiver(3)))
    code, _, err = run("roots", str(p), "--value", "0")
    assert code == 3
    assert "bound" in err


def test_tits_output(run, a2_file):
    code, out, _ = run("tits", a2_file, "--evaluate", "1,1")
    assert code == 0
    obj = json.loads(out)
    assert obj["gram"] == [["1", "-1/2"], ["-1/2", "1"]]
    assert obj["definiteness"] == "PositiveDefinite"
    assert obj["radical"] is None
    assert obj["value"] == 1


def test_conjugate_and_eliminate(run, tmp_path, a3_file):
    code, out, _ = run("conjugate", a3_file, "--vertex", "3")
    assert code == 0
    kinds = [a["kind"] for a in json.loads(out)["arrows"]]
    assert kinds == ["full", "full"]

    code, out, _ = run("eliminate", a3_file)
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] == "plan"
    assert obj["vertices"] == [3]
    assert all(a["kind"] == "full" for a in obj["biquiver"]["arrows"])


def test_eliminate_impossible(run, tmp_path):
    p = tmp_path / "c.json"
    p.write_text(serialize_biquiver(cycle_biquiver(3, dashed=(1,))))
    code, out, _ = run("eliminate", str(p))
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] == "impossible"
    assert "parity" in obj["reason"]


def test_parse_error_exit_2(run, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    code, _, err = run("classify", str(p))
    assert code == 2
    assert "JSON" in err


def test_missing_file_exit_2(run):
    code, _, err = run("classify", "/nonexistent/file.json")
    assert code == 2


def test_usage_error_exit_1(run):
    code, _, err = run("frobnicate")
    assert code == 1


def test_rep_pipeline_random_validate_iso(run, tmp_path, a3_file):
    code, out, _ = run("rep", "random", a3_file, "--dims", "1,1,1", "--seed", "4")
    assert code == 0
    rep_file = tmp_path / "rep.json"
    rep_file.write_text(out)

    code, out2, _ = run("rep", "validate", str(rep_file))
    assert code == 0
    assert json.loads(out2) == {"valid": True, "dims": [1, 1, 1]}

    code, out3, _ = run("rep", "iso", str(rep_file), str(rep_file), "--seed", "7")
    assert code == 0
    obj = json.loads(out3)
    assert obj["verdict"] == "Yes"
    assert "S" in obj["certificate"]


def test_rep_sum_and_hom(run, tmp_path, a2_file):
    code, out, _ = run("rep", "random", a2_file, "--dims", "1,1", "--seed", "0")
    rep_file = tmp_path / "r.json"
    rep_file.write_text(out)
    code, out, _ = run("rep", "sum", str(rep_file), str(rep_file))
    assert code == 0
    assert json.loads(out)["dims"] == [2, 2]

    code, out, _ = run("rep", "hom", str(rep_file), str(rep_file))
    assert code == 0
    assert json.loads(out)["dimension"] >= 1


def test_rep_decompose(run, tmp_path, a2_file):
    code, out, _ = run("rep", "random", a2_file, "--dims", "1,1", "--seed", "1")
    rep_file = tmp_path / "r.json"
    rep_file.write_text(out)
    code, out, _ = run("rep", "decompose", str(rep_file), "--seed", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["seed"] == 5
    assert len(obj["summands"]) == len(obj["statuses"])


def test_gadget_subcommands(run, tmp_path):
    m = tmp_path / "m.json"
    m.write_text('[[["0","0"]]]')
    code, out, _ = run("gadget", "g1", str(m), str(m))
    assert code == 0
    obj = json.loads(out)
    assert obj["dims"] == [2, 1]
    assert obj["biquiver"]["vertices"] == 2

    cyc = tmp_path / "cyc.json"
    cyc.write_text(serialize_biquiver(cycle_biquiver(3)))
    mm = tmp_path / "mm.json"
    mm.write_text('[[["2","0"]]]')
    code, out, _ = run("gadget", "cycle", str(cyc), "--arrows", "e1,e2,e3",
                       "--matrix", str(mm))
    assert code == 0
    assert json.loads(out)["dims"] == [1, 1, 1]


def test_byte_identical_output(run, a3_file, tmp_path):
    outs = set()
    for _ in range(3):
        code, out, _ = run("classify", a3_file)
        outs.add(out)
    assert len(outs) == 1

    code, out1, _ = run("rep", "random", a3_file, "--dims", "2,1,2", "--seed", "3")
    code, out2, _ = run("rep", "random", a3_file, "--dims", "2,1,2", "--seed", "3")
    assert out1 == out2
    r = tmp_path / "r.json"
    r.write_text(out1)
    code, d1, _ = run("rep", "decompose", str(r), "--seed", "2")
    code, d2, _ = run("rep", "decompose", str(r), "--seed", "2")
    assert d1 == d2


def test_emitted_certificate_reverifies(run, tmp_path, a3_file):
    # certificates printed by `rep iso` satisfy the base-change equations
    from biquiver import parse_representation, parse_matrix_obj, apply_base_change
    code, out, _ = run("rep", "random", a3_file, "--dims", "1,2,1", "--seed", "8")
    a_file = tmp_path / "a.json"
    a_file.write_text(out)
    a = parse_representation(out)
    code, out, _ = run("rep", "iso", str(a_file), str(a_file), "--seed", "2")
    obj = json.loads(out)
    assert obj["verdict"] == "Yes"
    s = [parse_matrix_obj(m) for m in obj["certificate"]["S"]]
    assert apply_base_change(a, s) == a


def test_pretty_flag(run, a2_file):
    code, out, _ = run("classify", a2_file, "--pretty")
    assert code == 0
    assert "\n" in out.strip()
    assert json.loads(out)["diagram"] == "A2"


def test_rep_iso_with_external_biquiver(run, tmp_path, a2_file):
    rep = random_representation(path_biquiver(2), (1, 1), 2, 3)
    bare = tmp_path / "bare.json"
    bare.write_text(serialize_representation(rep, embed_biquiver=False))
    code, _, err = run("rep", "validate", str(bare))
    assert code == 2  # no biquiver anywhere
    code, out, _ = run("rep", "validate", str(bare), "--biquiver", a2_file)
    assert code == 0
