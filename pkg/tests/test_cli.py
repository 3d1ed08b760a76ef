from __future__ import annotations

import json
import subprocess
import sys


from oracles import nx_planar
from planarlab.cli import main
from planarlab.graphs import (LabeledGraph, complete_graph, cycle_graph, from_graph6, multigraph_from_json,
                              octahedron, to_graph6)

K5E = to_graph6(LabeledGraph(5, complete_graph(5).edges - {(1, 2)}))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_planarity(capsys):
    code, out = run(capsys, "planarity", "--input", to_graph6(complete_graph(4)))
    d = json.loads(out)
    assert code == 0 and d["planar"] and d["face_count"] == 4
    code, out = run(capsys, "planarity", "--input", to_graph6(complete_graph(5)))
    d = json.loads(out)
    assert code == 0 and not d["planar"] and d["witness"]["kind"] == "K5"


def test_json_is_sorted(capsys):
    _, out = run(capsys, "census", "--n", "4")
    assert out.strip() == json.dumps(json.loads(out), sort_keys=True)
    assert json.loads(out)["total"] == 64


def test_addable_and_min_add(capsys):
    code, out = run(capsys, "addable", "--input", to_graph6(cycle_graph(4)))
    assert code == 0 and json.loads(out)["nonedges"] == [[1, 3], [2, 4]]
    code, out = run(capsys, "min-add", "--n", "6", "--m", "9")
    d = json.loads(out)
    assert code == 0 and d["value"] == 5 and d["lower_bound"] == 5
    assert from_graph6(d["witness_graph6"]).m == 9
    vals = []
    for s in range(3):
        _, out = run(capsys, "min-add", "--n", "6", "--m", "9", "--shards", "3", "--shard", str(s))
        vals.append(json.loads(out)["value"])
    assert min(v for v in vals if v is not None) == 5


def test_exit_codes(capsys):
    assert run(capsys, "fourreg", "--input", K5E)[0] == 3
    assert run(capsys, "fourreg", "--input", to_graph6(octahedron()))[0] == 0
    assert run(capsys, "census", "--n", "8")[0] == 4
    assert run(capsys, "min-add", "--n", "8", "--m", "10")[0] == 4
    assert run(capsys, "min-add", "--n", "6", "--m", "13")[0] == 2
    assert run(capsys, "census", "--bogus")[0] == 2
    assert run(capsys, "planarity", "--input", "not graph6 !!")[0] == 2
    assert run(capsys, "fourreg", "--input", to_graph6(complete_graph(5)))[0] == 2
    assert run(capsys, "census", "--n", "4", "--shards", "2", "--shard", "2")[0] == 2
    assert run(capsys, "census", "--n", "4", "--predicate", "bogus:1")[0] == 2


def test_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("PLANARLAB_MAX_N", "4")
    assert run(capsys, "census", "--n", "5")[0] == 4
    code, out = run(capsys, "census", "--n", "5", "--allow-large")
    assert code == 0 and json.loads(out)["total"] == 1023


def test_census_predicates(capsys):
    code, out = run(capsys, "census", "--n", "2", "--predicate", "connected")
    assert code == 0 and json.loads(out) == {"count": 1, "p": "1/2", "total": 2}
    _, out = run(capsys, "census", "--n", "5", "--predicate", "connected",
                 "--predicate", "has_subgraph_iso:Bw")
    d = json.loads(out)
    assert set(d["predicate_counts"]) == {"connected", "has_subgraph_iso:Bw"}
    code, out = run(capsys, "census", "--n", "5", "--dominance")
    assert code == 0 and json.loads(out)["ok"]
    code, out = run(capsys, "census", "--table", "kappa", "--n-max", "3")
    assert code == 0 and out.startswith("# EMPIRICAL PROBE")


def test_fourreg_witness_files(capsys, tmp_path):
    mw, sw = tmp_path / "m.json", tmp_path / "s.json"
    code, out = run(capsys, "fourreg", "--input", to_graph6(complete_graph(4)),
                    "--witness", str(mw), "--simple-witness", str(sw))
    assert code == 0 and json.loads(out)["embeddable"]
    m = multigraph_from_json(mw.read_text())
    assert m.n == 4 and set(m.degrees) == {4}
    s = multigraph_from_json(sw.read_text())
    assert s.is_simple() and set(s.degrees) == {4} and nx_planar(s.n, s.edges)


def test_input_formats_round_trip(capsys, tmp_path):
    g = octahedron()
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}))
    _, a = run(capsys, "planarity", "--input", str(f))
    _, b = run(capsys, "planarity", "--input", to_graph6(g))
    assert a == b
    _, out = run(capsys, "construct", "--family", "regular", "--input", to_graph6(cycle_graph(3)),
                 "--degree", "3")
    d = json.loads(out)
    assert from_graph6(d["graph6"]).m == len(d["edges"])


def test_construct(capsys):
    _, out = run(capsys, "construct", "--family", "spine", "--n", "9", "--m", "16")
    d = json.loads(out)
    assert d["n"] == 9 and d["m"] == 16 and d["addable"] == 8          # ceil(3/2 (3n - 6 - m))
    _, a = run(capsys, "construct", "--family", "random", "--n", "8", "--seed", "7")
    _, b = run(capsys, "--seed", "7", "construct", "--family", "random", "--n", "8")
    assert a == b
    assert run(capsys, "construct", "--family", "spine", "--n", "6", "--m", "8")[0] == 2


def test_reruns_byte_identical(tmp_path):
    outs = []
    for k in range(2):
        p = tmp_path / f"o{k}.json"
        r = subprocess.run([sys.executable, "-m", "planarlab", "census", "--n", "5",
                            "--predicate", "connected", "--output", str(p)], capture_output=True)
        assert r.returncode == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_detect(capsys):
    code, out = run(capsys, "detect", "--kind", "appear", "--pattern", to_graph6(complete_graph(2)),
                    "--host", to_graph6(LabeledGraph.from_edges(3, [(1, 2), (2, 3)])))
    assert code == 0 and [r["site"] for r in json.loads(out)] == [[2, 3]]
    code, out = run(capsys, "detect", "--kind", "census", "--host", to_graph6(complete_graph(4)))
    assert code == 0 and len(json.loads(out)["short_cycles"]) == 7
    assert run(capsys, "detect", "--kind", "appear", "--host", "Bw")[0] == 2
