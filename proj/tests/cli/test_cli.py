import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

BIN = os.environ.get("BJORTHO_BIN", "build/tools/bjortho")
SCHEMA = json.loads((Path(__file__).resolve().parents[2] / "docs" / "report.schema.json").read_text())

PLANAR_POLY = ["linf2", "l1-2", "regular-polygon-6", "regular-polygon-8", "regular-polygon-12", "decagon",
               "fig9-hexagon"]


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr)
    return proc


def report(*args, expect=0):
    out = json.loads(run(*args, expect=expect).stdout)
    jsonschema.validate(out, SCHEMA)
    return out


def csv(v):
    return ",".join(v)


def test_decagon_has_property_p():
    r = report("props", "p", "--catalog", "decagon")
    assert r["result"]["holds"] is True


def test_linf2_not_c_symmetric():
    r = report("symmetry", "global-c", "--catalog", "linf2")["result"]
    assert r["symmetric"] is False
    assert r["x"] == ["1", "1"] and r["y"] == ["0", "1"]


def test_fig9_reversed_eps_b():
    r = report("ortho", "eps-b", "--catalog", "fig9-hexagon", "--x", "0,2", "--y", "-4/3,1")["result"]
    assert r["value"] == "0"
    assert r["reversed"]["value"] == "1"


@pytest.mark.parametrize(
    "args,fragment",
    [
        (["props", "p", "--catalog", "nosuch"], "unknown catalog name"),
        (["ortho", "check", "--catalog", "linf2", "--x", "1,2/0", "--y", "0,1"], "x"),
        (["ortho", "check", "--catalog", "linf2", "--x", "1,a", "--y", "0,1"], "malformed"),
        (["ortho", "check", "--catalog", "linf2", "--x", "1,0,0", "--y", "0,1"], "dimension mismatch in x"),
        (["ortho", "check", "--catalog", "linf2", "--x", "0,0", "--y", "0,1"], "x"),
        (["props", "p1", "--catalog", "l2linf"], "polyhedral"),
        (["ortho", "check", "--x", "1,0", "--y", "0,1"], "space"),
    ],
)
def test_precondition_errors_exit_2(args, fragment):
    proc = run(*args, expect=2)
    assert fragment in proc.stderr


def test_bad_flag_exits_2():
    run("props", "p", "--catalog", "linf2", "--nonsense", expect=2)


def test_reports_are_byte_stable():
    args = ["symmetry", "global-d", "--catalog", "regular-polygon-10", "--samples", "512", "--seed", "7"]
    assert run(*args).stdout == run(*args).stdout


def test_thread_count_does_not_change_results():
    base = ["symmetry", "global-d", "--catalog", "l2linf", "--samples", "512"]
    one = json.loads(run(*base, "--threads", "1").stdout)
    many = json.loads(run(*base, "--threads", "4").stdout)
    assert one["result"] == many["result"]


def test_seed_is_echoed():
    r = report("op", "eps", "--catalog", "linf3", "--t", "1,0,0;0,1/2,0;0,0,0", "--a", "0,0,0;0,0,1;1,0,0",
               "--seed", "42", "--samples", "256")
    assert r["seed"] == 42 and r["mode"]["resolution"]["samples"] == 256


@pytest.mark.parametrize("name", PLANAR_POLY + ["fig6-prism", "linf3"])
def test_witnesses_round_trip(name):
    p = report("props", "p", "--catalog", name)["result"]
    if not p["holds"]:
        chk = report("ortho", "check", "--catalog", name, "--x", csv(p["x"]), "--y", csv(p["y"]))["result"]
        assert chk["orthogonal"]
        local = report("props", "p", "--catalog", name, "--x", csv(p["x"]))["result"]
        assert local["holds"] is False
    p1 = report("props", "p1", "--catalog", name)["result"]
    if not p1["holds"]:
        chk = report("ortho", "check", "--catalog", name, "--x", csv(p1["x"]), "--y", csv(p1["y"]))["result"]
        assert chk["orthogonal"]
        kinds = [report("space", "info", "--catalog", name, "--x", csv(p1[k]))["result"]["point"]["classification"]
                 ["position"] for k in ("x", "y")]
        assert "extreme_vertex" in kinds and kinds != ["extreme_vertex", "extreme_vertex"]
    c = report("symmetry", "global-c", "--catalog", name)["result"]
    if not c["symmetric"]:
        chk = report("ortho", "check", "--catalog", name, "--x", csv(c["x"]), "--y", csv(c["y"]))["result"]
        assert chk["orthogonal"]
        rev = report("ortho", "eps-b", "--catalog", name, "--x", csv(c["y"]), "--y", csv(c["x"]))["result"]
        assert rev["value"] == "1"
    r = report("props", "r", "--catalog", name)["result"]
    for k in ("u", "v"):
        info = report("space", "info", "--catalog", name, "--x", csv(r[k]))["result"]["point"]
        assert info["classification"]["position"] == "extreme_vertex"


def test_rx_check_reports_converse_for_decagon():
    r = report("props", "rx-check", "--catalog", "decagon")["result"]
    assert r["r"]["value"] == "8/7"
    assert r["premise"] is False and r["p"]["holds"] is True and r["converse_counterexample"] is True


def test_space_and_operator_files(tmp_path):
    space = tmp_path / "hex.json"
    space.write_text(json.dumps({"kind": "polyhedral", "vertices": [["2", "1/2"], ["0", "2"], ["-2", "1/2"],
                                                                    ["-2", "-1/2"], ["0", "-2"], ["2", "-1/2"]]}))
    p1 = report("props", "p1", "--space", str(space))["result"]
    assert p1["holds"] is False
    op = tmp_path / "op.json"
    op.write_text(json.dumps({"kind": "operator", "matrix": [["1", "0"], ["0", "1/2"]],
                              "domain": {"kind": "catalog", "name": "linf2"},
                              "codomain": {"kind": "lp", "p": "inf", "dim": 2}}))
    n = report("op", "norm", "--t", str(op))["result"]
    assert n["value"] == "1" and len(n["m_t"]) == 4
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "polyhedral", "vertices": [["1", "0"], ["0", "x"]]}))
    proc = run("props", "p", "--space", str(bad), expect=2)
    assert "vertices[1][1]" in proc.stderr


ALL_COMMANDS = [
    ["space", "info", "--catalog", "decagon", "--x", "2,2"],
    ["space", "info", "--catalog", "l2linf"],
    ["catalog", "list"],
    ["ortho", "check", "--catalog", "linf3", "--x", "1,1/2,3/10", "--y", "0,1,-1"],
    ["ortho", "min", "--catalog", "linf2", "--x", "1,0", "--y", "1,1"],
    ["ortho", "eps-d", "--catalog", "l2-2", "--x", "1,0", "--y", "1,1"],
    ["ortho", "eps-b", "--catalog", "l2linf", "--x", "0,1", "--y", "1,1", "--segment"],
    ["props", "p", "--catalog", "regular-polygon-8"],
    ["props", "p1", "--catalog", "fig6-prism"],
    ["props", "r", "--catalog", "regular-polygon-6"],
    ["props", "rx-check", "--catalog", "linf2"],
    ["symmetry", "point", "--catalog", "decagon", "--x", "1,3", "--side", "left"],
    ["symmetry", "point", "--catalog", "l2-3", "--x", "1,0,0", "--samples", "256"],
    ["symmetry", "global-c", "--catalog", "fig9-hexagon"],
    ["symmetry", "global-d", "--catalog", "linf2", "--samples", "512"],
    ["op", "norm", "--catalog", "l2-2", "--t", "1,2;0,1"],
    ["op", "ortho", "--catalog", "linf2", "--a", "0,0;0,1", "--t", "1,0;0,0"],
    ["op", "make-pair", "--catalog", "linf3", "--a", "1,0,0;0,1,0;0,0,1", "--t", "0,1,0;0,0,1;1,0,0"],
    ["op", "eps", "--catalog", "l2-2", "--t", "1,0;0,0", "--a", "0,0;0,1", "--samples", "256"],
    ["op", "dragomir-check", "--catalog", "linf2", "--t", "1,0;0,0", "--a", "0,0;0,1", "--eps", "1/2"],
]


@pytest.mark.parametrize("args", ALL_COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_reports_match_schema(args):
    r = report(*args)
    assert r["command"] == " ".join(args[:2])


@pytest.mark.parametrize("args", ALL_COMMANDS[:6], ids=lambda a: " ".join(a[:2]))
def test_text_format(args):
    out = run(*args, "--format", "text").stdout
    assert out.startswith("arguments:") and "result:" in out
