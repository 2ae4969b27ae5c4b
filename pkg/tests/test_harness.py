import numpy as np
import pytest

from brouwer_excess.excess import evaluate_bounds
from brouwer_excess.graphs import (
    Graph, complete, cycle, decode_graph6, encode_graph6, format_edge_list, star,
)
from brouwer_excess.harness import SearchConfig, read_graph_file, rows_to_csv, run_search


def test_exhaustive_n4():
    summary, _ = run_search(SearchConfig(mode="exhaustive", n=[4]))
    assert summary.graphs_processed == 64
    assert summary.pairs_evaluated == 64 * 4
    assert summary.theorem_violations() == []
    assert summary.bound("brouwer").violations == 0
    assert summary.bound("brouwer").tight > 0


def test_exhaustive_n5_token_conjecture():
    summary, _ = run_search(SearchConfig(mode="exhaustive", n=[5]))
    tok = summary.bound("token")
    assert tok.violations == 0 and tok.worst_slack is not None
    assert summary.theorem_violations() == []


def test_worst_slack_graph_reproduces():
    summary, _ = run_search(SearchConfig(mode="exhaustive", n=[5], family="both"))
    for b in summary.bounds:
        if b.worst_graph is None:
            continue
        rec = evaluate_bounds(decode_graph6(b.worst_graph), b.worst_k, "both", strict=False).record(b.name)
        assert rec.slack == pytest.approx(b.worst_slack, abs=1e-9), b.name


def test_sample_mode_is_deterministic():
    cfg = dict(mode="sample", n=[6, 7], count=25, p=0.4, seed=11)
    s1, r1 = run_search(SearchConfig(**cfg), want_rows=True)
    s2, r2 = run_search(SearchConfig(**cfg), want_rows=True)
    assert s1.to_json() == s2.to_json()
    assert rows_to_csv(r1).encode() == rows_to_csv(r2).encode()
    s3, _ = run_search(SearchConfig(**{**cfg, "seed": 12}))
    assert s3.to_json() != s1.to_json()


def test_csv_layout():
    _, rows = run_search(SearchConfig(mode="exhaustive", n=[3], k=[2]), want_rows=True)
    header = rows[0]
    assert header[:7] == ["graph6", "n", "m", "k", "eps_k", "teps_k", "epsT_k"]
    assert header[7:10] == ["density_lhs", "density_bound", "density_slack"]
    assert len(rows) == 1 + 8
    k3 = next(r for r in rows[1:] if r[0] == encode_graph6(complete(3)))
    b = header.index("brouwer_slack")
    assert float(k3[b]) == pytest.approx(0.0, abs=1e-9)
    # triangle: the bipartite columns stay empty
    assert k3[header.index("teps_bipartite_lhs")] == ""


def test_file_mode_graph6_and_edge_list(tmp_path):
    g6 = tmp_path / "g.g6"
    g6.write_text(">>graph6<<" + encode_graph6(cycle(5)) + "\n" + encode_graph6(star(4)) + "\n\n")
    assert read_graph_file(g6) == [cycle(5), star(4)]
    s, _ = run_search(SearchConfig(mode="file", input_path=str(g6)))
    assert s.graphs_processed == 2 and s.pairs_evaluated == 5 + 4

    el = tmp_path / "g.txt"
    el.write_text("# a path\n" + format_edge_list(Graph(3, ((0, 1), (1, 2)))))
    assert read_graph_file(el) == [Graph(3, ((0, 1), (1, 2)))]
    s, _ = run_search(SearchConfig(mode="file", input_path=str(el)))
    assert s.graphs_processed == 1


def test_file_mode_large_graph_uses_per_graph_route(tmp_path):
    f = tmp_path / "big.g6"
    f.write_text(encode_graph6(cycle(13)) + "\n")
    s, _ = run_search(SearchConfig(mode="file", input_path=str(f), k=[1, 2]))
    assert s.pairs_evaluated == 2 and s.theorem_violations() == []


def test_conjecture_violations_are_recorded_and_confirmed():
    s, _ = run_search(SearchConfig(mode="exhaustive", n=[4], k=[2]))
    bad = s.conjecture_violations()
    assert bad and {v["name"] for v in bad} == {"clique_turan_r2"}
    assert all(v["recheck_slack"] < -1e-6 for v in bad)


def test_cap_is_recorded_as_skipped():
    s, _ = run_search(SearchConfig(mode="exhaustive", n=[5], k=[2], cap=5))
    assert s.bound("teps_general").skipped == 1024
    assert s.bound("brouwer").evaluated == 1024


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("BROUWER_EXCESS_TOL", "10")
    s, _ = run_search(SearchConfig(mode="exhaustive", n=[4], k=[2]))
    # every clique-Turán gap is under 1, so a huge tolerance hides them
    assert s.conjecture_violations() == []
    monkeypatch.setenv("BROUWER_EXCESS_CAP", "3")
    s, _ = run_search(SearchConfig(mode="exhaustive", n=[4], k=[2]))
    assert s.bound("teps_general").skipped == 64


@pytest.mark.parametrize("kwargs", [
    dict(mode="exhaustive", n=[8]),
    dict(mode="bogus"),
    dict(mode="file"),
    dict(mode="sample", n=[4], p=1.5),
    dict(mode="exhaustive", n=[4], k=[0]),
    dict(mode="exhaustive", n=[4], family="adjacency"),
])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SearchConfig(**kwargs).validate()


def test_allow_large_lifts_limit():
    SearchConfig(mode="exhaustive", n=[8], allow_large=True).validate()
