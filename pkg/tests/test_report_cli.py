import copy
import json

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codis.cli import main
from codis.constructions import cycle, gn_family, orphan, path, whiskered_cycle
from codis.formats import emit_graph6, parse_graph6
from codis.graph import Graph
from codis.homology import Field
from codis.report import INVARIANTS, ResultCache, build_report, schema, verify_report


@pytest.fixture(scope="module")
def g1_report():
    return build_report(gn_family(1), fields=("gf2", "q"))


# --- reports ---------------------------------------------------------------------


def test_g1_report_values(g1_report):
    inv = g1_report["invariants"]
    assert (g1_report["n"], g1_report["m"], g1_report["girth"]) == (12, 13, 6)  # [PAPER]
    assert inv["induced_matching"] == 3 and inv["matching"] == 6 and inv["cochord"] == 4  # [PAPER]
    assert inv["regularity"] == {"gf2": 3, "q": 3}  # [PAPER]
    assert inv["vertex_decomposable"] is True and inv["codismantlable"] is True  # [PAPER]
    assert inv["domination"] == 4 and inv["alpha"] == 6  # [DERIVED] brute force, see matching tests
    assert g1_report["refused"] == {}


def test_reports_validate_against_the_schema(g1_report):
    S = schema()
    jsonschema.validate(g1_report, S)
    for G in (cycle(5), path(1), Graph.empty(0), whiskered_cycle(4)):
        jsonschema.validate(build_report(G), S)
    bad = copy.deepcopy(g1_report)
    del bad["input"]
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, S)


def test_infinite_girth_and_refusals():
    rep = build_report(path(3))
    assert rep["girth"] == "inf"
    big = build_report(cycle(20), only=["regularity", "cochord"])
    assert big["invariants"]["regularity"]["gf2"] is None and "regularity.gf2" in big["refused"]
    assert big["invariants"]["cochord"] == 7  # girth twenty uses the line-graph engine
    jsonschema.validate(big, schema())


def test_unknown_invariant_is_rejected():
    with pytest.raises(ValueError):
        build_report(cycle(4), only=["colour"])


def test_verify_report_is_clean_on_fresh_reports(g1_report):
    assert verify_report(g1_report) == []
    assert verify_report(json.loads(json.dumps(g1_report))) == []


@pytest.mark.parametrize(
    "path_,value,expected",
    [
        (("invariants", "matching"), 7, "matching"),
        (("invariants", "induced_matching"), 4, "induced matching"),
        (("invariants", "domination"), 3, "dominating set"),
        (("invariants", "cochord"), 3, "co-chordal cover"),
        (("invariants", "well_covered"), True, "well_covered"),
        (("input", "canonical_hash"), "0" * 16, "canonical hash"),
        (("n",), 13, "vertex or edge count"),
    ],
)
def test_tampered_reports_are_detected(g1_report, path_, value, expected):
    rep = copy.deepcopy(g1_report)
    node = rep
    for k in path_[:-1]:
        node = node[k]
    node[path_[-1]] = value
    problems = verify_report(rep)
    assert any(expected in p for p in problems), problems


def test_tampered_certificates_are_detected(g1_report):
    rep = copy.deepcopy(g1_report)
    rep["certificates"]["cd_set"]["steps"] = rep["certificates"]["cd_set"]["steps"][1:]
    assert any(p.startswith("cd_set") for p in verify_report(rep))
    rep = copy.deepcopy(g1_report)
    del rep["certificates"]["decomposition"]
    assert "vertex_decomposable is true without a certificate" in verify_report(rep)
    rep = copy.deepcopy(g1_report)
    rep["certificates"]["mystery"] = {}
    assert "unknown certificate 'mystery'" in verify_report(rep)
    rep = copy.deepcopy(g1_report)
    rep["invariants"]["regularity"]["gf2"] = 2
    assert any("im 3 exceeds reg" in p for p in verify_report(rep))
    assert verify_report({"input": {"graph6": "!!"}})


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_random_reports_verify(data):
    n, pairs = data
    G = Graph.from_edges(n, {tuple(sorted(p)) for p in pairs if p[0] != p[1]})
    rep = build_report(G, fields=("gf2", "q"))
    assert verify_report(rep) == []
    jsonschema.validate(rep, schema())


def test_cache_cold_and_warm_give_identical_reports(tmp_path):
    cache = ResultCache(tmp_path)
    G = orphan("P10")
    cold = build_report(G, fields=(Field.GF2, Field.Q), cache=cache)
    assert len(cache) == len(INVARIANTS) + 3
    warm = build_report(G, fields=(Field.GF2, Field.Q), cache=cache)
    strip = lambda r: {k: v for k, v in r.items() if k != "timings"}
    assert strip(cold) == strip(warm)
    # an isomorphic relabelling hits the same entries
    relabelled = parse_graph6(emit_graph6(Graph.from_edges(G.n, [(G.n - 1 - a, G.n - 1 - b) for a, b in G.edges])))
    again = build_report(relabelled, cache=cache, only=["alpha", "well_covered"])
    assert again["invariants"]["alpha"] == cold["invariants"]["alpha"]
    assert len(cache) == len(INVARIANTS) + 3


def test_paranoid_mode_recomputes_a_poisoned_entry(tmp_path):
    cache = ResultCache(tmp_path)
    G = cycle(7)
    good = build_report(G, only=["matching"], cache=cache)
    key = good["input"]["canonical_hash"]
    cache.put(key, "matching", "", {"value": 9, "certificate": [[0, 1]]})
    assert build_report(G, only=["matching"], cache=cache)["invariants"]["matching"] == 9
    fixed = build_report(G, only=["matching"], cache=cache, paranoid=True)
    assert fixed["invariants"]["matching"] == 3 and verify_report(fixed) == []


def test_cache_versions_do_not_mix(tmp_path):
    ResultCache(tmp_path, version="old").put("k", "alpha", "", {"value": 1, "certificate": None})
    assert ResultCache(tmp_path, version="new").get("k", "alpha") is None


# --- command line ------------------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_invariants_text_and_json(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text(f"{emit_graph6(cycle(5))}\n{emit_graph6(gn_family(1))}\n")
    code, out, _ = run(capsys, "invariants", str(f), "--field", "both")
    assert code == 0 and "cohen_macaulay[gf2]: true" in out and "regularity[q]: 3" in out
    code, out, _ = run(capsys, "invariants", str(f), "--json", "--only", "alpha,cochord")
    reps = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["invariants"]["alpha"] for r in reps] == [2, 6]


def test_cli_batch_continues_past_parse_errors(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text(f"{emit_graph6(cycle(4))}\n~~~broken\n{emit_graph6(path(3))}\n")
    code, out, err = run(capsys, "invariants", str(f), "--json", "--only", "alpha")
    assert code == 2 and "line 2" in err and len(out.splitlines()) == 2


def test_cli_edgelist_and_threads(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("3 3\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "invariants", str(f), "--format", "edgelist", "--only", "cochord")
    assert code == 0 and "cochord: 1" in out
    g = tmp_path / "many.g6"
    g.write_text("\n".join(emit_graph6(cycle(n)) for n in range(3, 8)) + "\n")
    code, out, _ = run(capsys, "invariants", str(g), "--json", "--only", "alpha", "--threads", "2")
    assert code == 0 and [json.loads(x)["invariants"]["alpha"] for x in out.splitlines()] == [1, 2, 2, 3, 3]


def test_cli_partial_result_exit_code(tmp_path, capsys):
    f = tmp_path / "big.g6"
    f.write_text(emit_graph6(cycle(20)) + "\n")
    code, out, _ = run(capsys, "invariants", str(f), "--only", "regularity")
    assert code == 3 and "refused" in out


def test_cli_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "check", "THM_9_9")[0] == 1
    assert run(capsys, "search", "NOPE", "--max-n", "3")[0] == 1
    assert run(capsys, "invariants", "-", "--only", "colour")[0] == 1
    assert run(capsys, "make", "cycle", "two")[0] == 1
    assert run(capsys, "invariants", "/no/such/file")[0] == 1
    assert run(capsys, "invariants", "-", "--threads", "0")[0] == 1


def test_cli_check_and_search(capsys):
    code, out, _ = run(capsys, "check", "LEM_2_5", "--max-n", "5")
    assert code == 0 and "verdict: consistent with paper" in out
    code, out, _ = run(capsys, "check", "lem_2_5", "--max-graphs", "3", "--json")
    assert code == 3 and json.loads(out)["verdict"] == "consistent so far (partial)"
    code, out, _ = run(capsys, "check", "PROP_REG_CD")
    assert code == 5 and "cochord=7, expected 8" in out
    code, out, _ = run(capsys, "search", "CNS_CM", "--max-n", "6")
    assert code == 0 and "frontier: every candidate up to n=6 examined" in out
    code, out, _ = run(capsys, "search", "WCCODIS_VD", "--max-n", "7", "--json")
    assert code == 0 and json.loads(out)["witness"] is not None


def test_cli_search_over_an_input_stream(tmp_path, capsys):
    f = tmp_path / "cycles.g6"
    f.write_text("\n".join(emit_graph6(cycle(n)) for n in range(3, 10)) + "\nnot-a-graph\n")
    code, out, err = run(capsys, "search", "CNS_CM", "--max-n", "0", "--input", str(f))
    assert code == 2 and "verdict: consistent with paper" in out and "line 8" in err


def test_cli_make_families(capsys, tmp_path):
    for argv, n in [
        (("cycle", "6"), 6),
        (("doublestar", "2", "3"), 7),
        (("gn", "2"), 24),
        (("orphan", "P13"), 13),
        (("whisker", "cycle", "5"), 10),
    ]:
        code, out, _ = run(capsys, "make", *argv)
        assert code == 0 and parse_graph6(out.strip()).n == n
    code, out, _ = run(capsys, "make", "whisker", emit_graph6(cycle(4)), "--partition", "0,1;1,2;2,3;3,0")
    assert code == 0 and parse_graph6(out.strip()).m == 12
    assert run(capsys, "make", "whisker", "cycle", "4", "--partition", "0,1;1,2")[0] == 1
    d = tmp_path / "d.txt"
    d.write_text("3 2\n0 1\n0 2\n")
    code, out, _ = run(capsys, "make", "common-enemy", str(d))
    assert code == 0 and parse_graph6(out.strip()).m == 3
    p = tmp_path / "p.txt"
    p.write_text("3 2\n0 2\n1 2\n")
    code, out, _ = run(capsys, "make", "upper-bound", str(p))
    assert code == 0 and parse_graph6(out.strip()).m == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n0 1\n1 0\n")
    assert run(capsys, "make", "upper-bound", str(bad))[0] == 2


def test_cli_cert_verify(tmp_path, capsys, g1_report):
    good = tmp_path / "good.json"
    good.write_text(json.dumps(g1_report))
    code, out, _ = run(capsys, "cert", "verify", str(good))
    assert code == 0 and out.strip().endswith("ok")
    rep = copy.deepcopy(g1_report)
    rep["invariants"]["matching"] = 5
    lines = tmp_path / "lines.jsonl"
    lines.write_text(json.dumps(g1_report) + "\n" + json.dumps(rep) + "\n")
    code, out, _ = run(capsys, "cert", "verify", str(lines))
    assert code == 4 and "report 1" in out and "report 2" in out and "matching certificate invalid" in out
    arr = tmp_path / "arr.json"
    arr.write_text(json.dumps([g1_report, g1_report]))
    assert run(capsys, "cert", "verify", str(arr))[0] == 0
    junk = tmp_path / "junk.json"
    junk.write_text("{nope")
    assert run(capsys, "cert", "verify", str(junk))[0] == 2
