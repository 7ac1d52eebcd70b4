from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from genri.cli import main
from genri.genpoly import UnionSet, poly_to_json, union_to_json

from shapes import P, l_shape, open_square_with_corner, segment_x, unit_square


def _write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    return {
        "seg": _write(tmp_path, "seg.json", poly_to_json(segment_x())),
        "lshape": _write(tmp_path, "lshape.json", union_to_json(l_shape())),
        "square": _write(tmp_path, "square.json", poly_to_json(unit_square())),
        "nc": _write(tmp_path, "nc.json", union_to_json(open_square_with_corner())),
        "tri_map": _write(tmp_path, "tri.json", {"dim_x": 1, "dim_y": 1, "graph": union_to_json(UnionSet.single(
            P(2, ((0, 1), ">=", 0), ((1, -1), ">=", 0), ((1, 0), "<=", 1))))}),
        "absf": _write(tmp_path, "abs.json", {"pieces": [{"a": ["1"], "b": "0"}, {"a": ["-1"], "b": "0"}],
                                              "domain": {"dim": 1, "constraints": []}}),
        "bad": _write(tmp_path, "bad.json", {"dim": 2, "constraints": [{"a": ["1"], "rel": "<=", "b": "0"}]}),
    }


def test_interior_on_segment(capsys, files):
    code, out, _ = run(capsys, "interior", "--kind", "qri", "--point", "1/2,0", files["seg"])
    d = json.loads(out)
    assert code == 0 and d["member"] is True and d["kind"] == "qri" and "type" in d["evidence"]


def test_interior_expect_mismatch(capsys, files):
    code, _, err = run(capsys, "interior", "--kind", "qi", "--point", "1/2,0", "--expect", "true", files["seg"])
    assert code == 1 and "expected" in err


def test_classify_l_shape(capsys, files):
    code, out, _ = run(capsys, "classify", files["lshape"])
    d = json.loads(out)
    assert code == 0 and d["class"] == "neither" and d["witness"] == ["1/2", "1/2"]
    assert run(capsys, "classify", "--expect", "convex", files["lshape"])[0] == 1
    assert run(capsys, "classify", "--expect", "nearly_convex", files["nc"])[0] == 0


def test_ri_rep_and_canonicalize_round_trip(capsys, files, tmp_path):
    code, out, _ = run(capsys, "ri-rep", files["square"])
    assert code == 0 and all(c["rel"] == "<" for c in json.loads(out)["constraints"])
    code, out, _ = run(capsys, "canonicalize", files["lshape"])
    again = _write(tmp_path, "canon.json", json.loads(out))
    code2, out2, _ = run(capsys, "canonicalize", again)
    assert code == code2 == 0 and out == out2
    for key in ("tri_map", "absf", "seg"):
        c, o, _ = run(capsys, "canonicalize", files[key])
        c2, o2, _ = run(capsys, "canonicalize", _write(tmp_path, f"{key}2.json", json.loads(o)))
        assert c == c2 == 0 and o == o2


def test_normal_cone_and_separation(capsys, files):
    code, out, _ = run(capsys, "normal-cone", "--point", "1/2,0", files["seg"])
    assert code == 0 and json.loads(out)["subspace"] is True
    code, out, _ = run(capsys, "separate", "--proper", "--point", "0,0", files["seg"])
    d = json.loads(out)
    assert code == 0 and d["proper"] is True and d["xstar"] == ["-1", "0"]
    code, out, _ = run(capsys, "separate", "--proper", "--expect", "false", files["square"], files["square"])
    assert code == 0 and json.loads(out)["proper"] is False


def test_graph_and_epi_checks(capsys, files, tmp_path):
    code, out, _ = run(capsys, "graph-check", "--theorem", "iri_graph", files["tri_map"])
    d = json.loads(out)
    assert code == 0 and d["applicable"] and d["points_checked"] > 0 and d["violations"] == []
    pts = _write(tmp_path, "pts.json", [["0", "1"], ["0", "0"]])
    code, out, _ = run(capsys, "epi-check", "--points", pts, files["absf"])
    assert code == 0 and json.loads(out)["points_checked"] == 2


def test_input_errors_exit_2(capsys, files, tmp_path):
    assert run(capsys, "classify", files["bad"])[0] == 2
    assert run(capsys, "classify", str(tmp_path / "missing.json"))[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(capsys, "classify", str(broken))[0] == 2
    assert run(capsys, "interior", "--kind", "ri", "--point", "1", files["seg"])[0] == 2
    assert run(capsys, "--budget", "cells=x", "classify", files["seg"])[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["interior", "--kind", "nope", "--point", "0,0", files["seg"]])
    assert e.value.code == 2


def test_budget_exhaustion_exit_3(capsys, files):
    code, _, err = run(capsys, "--budget", "cells=1", "interior", "--kind", "iri", "--point", "0,0", files["lshape"])
    assert code == 3 and "budget" in err
    code, _, _ = run(capsys, "interior", "--budget", "cells=1", "--kind", "iri", "--point", "0,0", files["lshape"])
    assert code == 3


def test_fuzz_small(capsys):
    code, out, _ = run(capsys, "fuzz", "--checks", "chain_3_3,classify_equiv", "--count", "3", "--seed", "7")
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and [d["check"] for d in lines] == ["chain_3_3", "classify_equiv"]
    assert run(capsys, "fuzz", "--checks", "unknown_check", "--count", "1")[0] == 2


@pytest.mark.skipif(shutil.which("genri") is None, reason="console script not installed")
def test_console_script(files):
    r = subprocess.run(["genri", "classify", files["lshape"]], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["class"] == "neither"
    r = subprocess.run([sys.executable, "-m", "genri.cli", "classify", files["bad"]], capture_output=True, text=True)
    assert r.returncode == 2 and r.stdout == ""
