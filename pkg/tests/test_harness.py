import json

import pytest

from graphcert.cli import main
from graphcert.errors import InternalConsistencyError, InvalidArgument
from graphcert.g6 import encode_graph6
from graphcert.graph import Graph
from graphcert.harness.corpus import (FAMILIES, add_apex, apex_gadget, complete, complete_minus_matching,
                                      corpus_generate, five_connected_nonplanar, ingest, random_filtered,
                                      sweep_corpus)
from graphcert.harness.report import TSV_COLUMNS, emit_report, natural_key
from graphcert.harness.roles import RoleAssignment, find_roles
from graphcert.harness.run import plan, run_tasks, sweep, thread_count
from graphcert.harness.verify import (COUNTEREXAMPLE, STATEMENTS, Verdict, check_hypothesis, hypothesis_failure,
                                      instances, recheck, verify_lemma, verify_theorem_1_1)

K7E = complete_minus_matching(7, 1)


def c5():
    return Graph(range(5), [(i, (i + 1) % 5) for i in range(5)])


# corpus ------------------------------------------------------------------------


def test_ingest_reports_bad_lines_and_continues():
    res = ingest(["D~{\n", "\n", "D~\n", ":Fa@x^\n"])
    assert [e.graph_id for e in res.entries] == ["line1", "line4"]
    assert res.graphs[0] == complete(5)
    assert [d.line for d in res.diagnostics] == [3]


def test_ingest_from_path(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(encode_graph6(K7E) + "\n")
    assert ingest(str(p)).graphs == [K7E]


def test_generators():
    assert complete_minus_matching(8, 2).m == 28 - 2
    assert not complete_minus_matching(8, 2).has_edge(6, 7)
    assert add_apex(c5()).degree(5) == 5
    assert apex_gadget().n == 9
    for g in random_filtered(10, 0.7, 3, seed=1):
        assert five_connected_nonplanar(g)
    with pytest.raises(InvalidArgument):
        corpus_generate("apex-over-planar", base="cube")
    with pytest.raises(InvalidArgument):
        complete_minus_matching(7, 4)


def test_sweep_corpus_is_large_and_filtered():
    es = sweep_corpus()
    assert len(es) >= 50
    assert len({e.graph_id for e in es}) == len(es)
    assert all(e.graph.n <= 13 and five_connected_nonplanar(e.graph) for e in es)
    assert "sweep" in FAMILIES


# roles -------------------------------------------------------------------------


def test_roles_in_k7_minus_edge():
    roles = find_roles(K7E, limit=None)
    assert roles and all({r.y1, r.y2} == {5, 6} for r in roles)
    assert all(not r.violations(K7E) for r in roles)
    assert RoleAssignment.from_json(roles[0].to_json()) == roles[0]


def test_no_roles_in_c5_or_k6():
    assert find_roles(c5()) == [] and find_roles(complete(6)) == []


def test_role_violations():
    assert RoleAssignment(0, 1, 2, 3).violations(complete(6))
    assert RoleAssignment(0, 1, 5, 6, 2, 2).violations(K7E)


# verification ------------------------------------------------------------------


def test_theorem_on_k7_minus_edge_takes_k4_minus_first():
    v = verify_theorem_1_1(K7E, RoleAssignment(0, 1, 5, 6), graph_id="k7e")
    assert v.satisfied_disjunct == "ii" and not recheck(v)
    assert v.certificate["kind"] == "k4-minus"
    assert v.mode_flags["k4_minus_mode"] == "subgraph"
    assert Verdict.from_json(json.loads(json.dumps(v.to_json()))) == v


@pytest.mark.parametrize("order", [("i",), ("iii",), ("i", "ii", "iii")])
def test_theorem_alternative_orders_also_certify(order):
    v = verify_theorem_1_1(K7E, RoleAssignment(0, 1, 5, 6), order=order)
    assert v.satisfied_disjunct == order[0] and not recheck(v)


def test_hypothesis_violations_raise():
    with pytest.raises(InvalidArgument):
        verify_theorem_1_1(complete(6), RoleAssignment(0, 1, 2, 3))
    with pytest.raises(InvalidArgument):
        check_hypothesis(add_apex(c5()), "theorem-1.1", RoleAssignment(0, 1, 2, 3).to_json())
    assert hypothesis_failure(c5(), "theorem-1.1")


def test_unknown_statement():
    with pytest.raises(InvalidArgument):
        verify_lemma(K7E, "lemma-9.9", {})


@pytest.mark.parametrize("statement, graph_id", [
    ("lemma-2.5", "complete-minus-edge-n7-k1"),
    ("lemma-2.7", "apex-over-antiprism4"),
    ("lemma-2.8", "apex-over-antiprism4"),
    ("lemma-2.9", "apex-over-antiprism5"),
    ("lemma-2.10", "complete-minus-edge-n7-k3"),
    ("lemma-3.1", "complete-minus-edge-n7-k1"),
])
def test_lemma_instances_certify(statement, graph_id):
    g = next(e.graph for e in sweep_corpus() if e.graph_id == graph_id)
    found = instances(g, statement, limit=3)
    assert found
    for params in found:
        v = verify_lemma(g, statement, params, graph_id=graph_id)
        assert v.satisfied_disjunct not in (COUNTEREXAMPLE,)
        assert not recheck(v)


def test_tampered_certificate_is_caught():
    v = verify_theorem_1_1(K7E, RoleAssignment(0, 1, 5, 6))
    cert = json.loads(json.dumps(v.certificate))
    cert["witness"]["vertices"][0] = cert["witness"]["vertices"][1]
    bad = Verdict(**{**v.to_json(), "certificate": cert})
    assert recheck(bad)
    with pytest.raises(InternalConsistencyError):
        emit_report([bad])
    wrong_graph = Verdict(**{**v.to_json(), "graph6": encode_graph6(c5())})
    assert recheck(wrong_graph)


def test_tk5_certificate_mutation_caught():
    v = verify_theorem_1_1(K7E, RoleAssignment(0, 1, 5, 6), order=("i",))
    cert = json.loads(json.dumps(v.certificate))
    key = next(iter(cert["witness"]["paths"]))
    cert["witness"]["paths"][key] = cert["witness"]["paths"][key][:1]
    assert recheck(Verdict(**{**v.to_json(), "certificate": cert}))


# runs and reports --------------------------------------------------------------


def small_entries():
    return corpus_generate("complete-minus-edge", n=7, k=1) + corpus_generate("complete-minus-edge", n=8, k=2)


def test_plan_skips_graphs_without_instances():
    entries = small_entries() + corpus_generate("complete", n=6)
    tasks, skipped = plan(entries, "theorem-1.1", limit=4)
    assert len(tasks) == 8
    assert [s["graph_id"] for s in skipped] == ["complete-n6"]


def test_threads_do_not_change_results():
    tasks, _ = plan(small_entries(), "theorem-1.1", limit=4)
    assert run_tasks(tasks, 1) == run_tasks(tasks, 2)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("GRAPHCERT_THREADS", "3")
    assert thread_count() == 3 and thread_count(2) == 2


def test_reports_are_deterministic():
    a, _ = sweep(small_entries(), limit=4, threads=1)
    b, _ = sweep(small_entries()[::-1], limit=4, threads=1)
    meta = {"seed": 0}
    assert emit_report(a, "json", meta) == emit_report(b[::-1], "json", meta)
    tsv = emit_report(a, "tsv", meta).splitlines()
    assert tsv[0].startswith("# ") and tsv[1].split("\t") == list(TSV_COLUMNS)
    assert len(tsv) == 2 + len(a)
    doc = json.loads(emit_report(a, "json", meta))
    assert doc["meta"]["summary"]["total"] == len(a)


def test_natural_order_of_ids():
    ids = ["line10", "line2", "line1"]
    assert sorted(ids, key=natural_key) == ["line1", "line2", "line10"]


# command line ------------------------------------------------------------------


def test_cli_verify_with_figures(tmp_path, capsys):
    report = tmp_path / "r.json"
    figs = tmp_path / "figs"
    code = main(["verify", "--family", "complete-minus-edge", "--n", "7", "--roles-limit", "4", "--threads", "1",
                 "--report", str(report), "--figures", str(figs)])
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["meta"]["statement"] == "theorem-1.1" and doc["meta"]["summary"]["total"] == 4
    assert (figs / "outcomes.png").stat().st_size > 0 and (figs / "nodes.png").exists()


def test_cli_tsv_and_generate(tmp_path, capsys):
    out = tmp_path / "k.g6"
    assert main(["generate", "--family", "complete-minus-edge", "--n", "8", "--k", "2", "--output", str(out)]) == 0
    assert ingest(str(out)).graphs == [complete_minus_matching(8, 2)]
    assert main(["verify", "--input", str(out), "--statement", "lemma-3.1", "--roles-limit", "2",
                 "--threads", "1", "--format", "tsv"]) == 0
    assert "satisfied_disjunct" in capsys.readouterr().out


def test_cli_witness_commands(tmp_path, capsys):
    src = tmp_path / "in.g6"
    src.write_text(encode_graph6(complete(6)) + "\n" + encode_graph6(c5()) + "\n")
    assert main(["find-tk5", "--input", str(src), "--forbid-branch", "0"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert 0 not in res[0]["tk5"]["branch"] and res[1]["tk5"] is None
    assert main(["two-paths", "--input", str(src), "--terminals", "0,1,2,3"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert "linkage" in res[0] and "three_planar" in res[1]
    assert main(["cycle3", "--input", str(src), "--vertices", "0,2,4"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert all("cycle" in r for r in res)


def test_cli_errors_exit_2(tmp_path, capsys):
    assert main(["verify", "--input", str(tmp_path / "missing.g6")]) == 2
    assert main(["verify"]) == 2
    src = tmp_path / "p.g6"
    src.write_text(encode_graph6(Graph(range(3), [(0, 1), (1, 2)])) + "\n")
    assert main(["cycle3", "--input", str(src), "--vertices", "0,1,2"]) == 2


def test_statements_listed():
    assert STATEMENTS[0] == "theorem-1.1" and len(STATEMENTS) == 7
