from __future__ import annotations

import json

import pytest

from treefree.cli import (
    check_diam_theorem,
    check_maxdeg_theorem,
    main,
    scan_corpus,
    verify_lemma,
)
from treefree.core import build
from treefree.errors import UsageError
from treefree.families import gp, h1
from treefree.graphio import emit_graph6, parse_graph6
from treefree.patterns import contracted_heawood, cycle, heawood, petersen


def _named_graph_corpus():
    k4 = build(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    graphs = [petersen().graph, heawood().graph, contracted_heawood().graph,
              cycle(5).graph, k4]
    return [emit_graph6(g) for g in graphs]


def test_verify_lemma_quick_slices():
    assert verify_lemma("2.2i", s_range=(5, 5)).passed
    assert verify_lemma("2.3", s_range=(3, 3)).passed
    assert verify_lemma("2.4", s_range=(4, 4)).passed
    assert verify_lemma("2.5", s_range=(3, 3)).passed
    assert verify_lemma("2.5p", s_range=(3, 3)).passed
    assert verify_lemma("2.2w").passed
    with pytest.raises(UsageError):
        verify_lemma("9.9")


def test_verify_lemma_property_suites():
    assert verify_lemma("4.1", seed=1).passed
    assert verify_lemma("5.1", samples=10).passed
    assert verify_lemma("5.3", samples=10).passed


def test_diam_theorem_reports():
    rep = check_diam_theorem(gp(49).graph)
    assert rep.status == "checked" and rep.passed
    assert rep.witness["T9"]["found"]
    rep = check_diam_theorem(petersen().graph)
    assert rep.status == "vacuous" and not rep.passed and rep.counterexample is None
    rep = check_diam_theorem(cycle(9).graph)  # min degree 2: gate fails
    assert rep.status == "vacuous" and "gate" in rep.params["reason"]


def test_maxdeg_theorem_reports():
    rep = check_maxdeg_theorem(h1(8).graph)
    assert rep.status == "vacuous"
    assert rep.params["thresholds"] == {"T8_1": 943218, "T8_2": 190375, "T9": 197433}
    forced = check_maxdeg_theorem(h1(8).graph, assume_met=True)
    assert forced.status == "checked"  # search path exercised


def test_scan_corpus_returns_the_three_named_graphs():
    rep = scan_corpus(_named_graph_corpus(), "P8")
    assert [m["index"] for m in rep.params["members"]] == [1, 2, 3]
    assert rep.params["rejections"] == {
        "disconnected": 0, "min_degree": 1, "c3_c4": 1, "tree_present": 0,
    }


def test_scan_corpus_jobs_invariance():
    corpus = _named_graph_corpus()
    seq = scan_corpus(corpus, "P8")
    par = scan_corpus(corpus, "P8", jobs=4)
    assert seq.params["members"] == par.params["members"]
    assert seq.params["rejections"] == par.params["rejections"]


def test_scan_corpus_rejects_non_tree_pattern():
    with pytest.raises(UsageError):
        scan_corpus(_named_graph_corpus(), "C6")


def test_scan_rejects_tree_containing_hosts():
    rep = scan_corpus([emit_graph6(h1(5).graph)], "T9")
    assert rep.params["members"] == []
    assert rep.params["rejections"]["tree_present"] == 1


def test_cli_gen_and_chi(capsys, tmp_path):
    assert main(["gen", "--family", "petersen", "--format", "g6"]) == 0
    record = capsys.readouterr().out.strip()
    assert parse_graph6(record).n == 10
    target = tmp_path / "petersen.g6"
    target.write_text(record + "\n")
    assert main(["chi", "--input", str(target)]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_cli_gen_dot(capsys):
    assert main(["gen", "--family", "C3", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert "graph {" in out and "--" in out


def test_cli_check_free(capsys, tmp_path):
    host = tmp_path / "h1_5.g6"
    host.write_text(emit_graph6(h1(5).graph) + "\n")
    assert main(["check", "--host", str(host), "--pattern", "P10"]) == 0
    assert "free" in capsys.readouterr().out


def test_cli_verify_exit_codes_and_report(capsys, tmp_path):
    out = tmp_path / "rep.json"
    code = main(["verify", "--lemma", "2.4", "--s", "4..4", "--report", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["pass"] is True and payload["status"] == "checked"
    assert set(payload) == {
        "check_id", "params", "pass", "status", "witness", "counterexample", "runtime_ms",
    }
    capsys.readouterr()


def test_cli_scan_and_theorem(capsys, tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("\n".join(_named_graph_corpus()) + "\n")
    assert main(["scan", "--corpus", str(corpus), "--tree", "P8", "--jobs", "2"]) == 0
    capsys.readouterr()
    single = tmp_path / "gp49.g6"
    single.write_text(emit_graph6(gp(49).graph) + "\n")
    assert main(["theorem", "--input", str(single), "--which", "diam"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["pass"] is True


def test_cli_usage_and_format_errors(capsys, tmp_path):
    assert main(["verify", "--lemma", "nope"]) == 2
    assert main(["nosuchcommand"]) == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("B`\n")
    assert main(["chi", "--input", str(bad)]) == 2
    capsys.readouterr()


def test_cli_vacuous_is_not_failure(capsys, tmp_path):
    single = tmp_path / "pet.g6"
    single.write_text(emit_graph6(petersen().graph) + "\n")
    assert main(["theorem", "--input", str(single), "--which", "maxdeg"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["status"] == "vacuous"


def test_checked_failure_maps_to_exit_one():
    # no honest input produces a checked failure, so aggregate synthetically
    from treefree.cli import _exit_code
    from treefree.graphio import Report

    good = Report(check_id="x", passed=True, status="checked")
    vac = Report(check_id="x", passed=False, status="vacuous")
    bad = Report(check_id="x", passed=False, status="checked", counterexample="Bw")
    assert _exit_code([good, vac]) == 0
    assert _exit_code([good, bad]) == 1
