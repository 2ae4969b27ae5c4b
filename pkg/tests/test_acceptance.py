"""Acceptance suite: one PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or ``python tests/test_acceptance.py``.
The lines are also repeated in pytest's terminal summary.
"""
import math
import sys
import time

import numpy as np
import pytest

from brouwer_excess import batch
from brouwer_excess.compound import additive_compound, m_k_direct, m_k_via_compound
from brouwer_excess.excess import (
    eps_k, eps_token_k, evaluate_bounds, teps_k, teps_star_closed_form, verify_disjoint_union_formula,
)
from brouwer_excess.graphs import (
    SplitMix64, complete, disjoint_union, empty, erdos_renyi, matching_graph, star,
)
from brouwer_excess.harness import SearchConfig, run_search
from brouwer_excess.spectral import eigenvalues_sym, lambda_max
from brouwer_excess.token import token_laplacian

from conftest import ACCEPTANCE_LINES, all_graphs
from oracles import ksum_spectrum

VIOLATION_TOL = 1e-6

THEOREMS = ["density", "binomial", "clique_free_r2", "clique_free_r3", "teps_general",
            "token_general", "mk_chain", "degree_lower", "conjugate_upper"]
SIGNLESS_THEOREMS = ["signless_" + n for n in
                     ("density", "binomial", "clique_free_r2", "clique_free_r3", "teps_general",
                      "teps_bipartite", "token_general", "token_bipartite", "mk_chain")]


def verdict(label, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def seeded_symmetric(rng, dim):
    a = rng.uniform(-5, 5, (dim, dim))
    return a + a.T


@pytest.fixture(scope="module")
def corpus_search():
    """Every labeled graph with n <= 6, k = 1..n, Laplacian family."""
    t0 = time.perf_counter()
    summary, _ = run_search(SearchConfig(mode="exhaustive", n=[1, 2, 3, 4, 5, 6], tol=VIOLATION_TOL))
    return summary, time.perf_counter() - t0


def test_c01_compound_spectrum():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(200):
        dim = int(rng.integers(2, 8))
        m = seeded_symmetric(rng, dim)
        base = eigenvalues_sym(m)
        for k in range(1, dim + 1):
            got = np.sort(eigenvalues_sym(additive_compound(m, k).matrix))
            worst = max(worst, float(np.max(np.abs(got - ksum_spectrum(base, k)))))
    dt = time.perf_counter() - t0
    ok = worst < 1e-7 and dt < 30
    assert verdict("1 compound spectrum", ok, f"max deviation {worst:.2e} (< 1e-7), {dt:.1f}s (< 30s)")


def test_c02_mk_identity():
    t0 = time.perf_counter()
    graphs = list(all_graphs(4))
    rng = SplitMix64(7)
    for _ in range(500):
        n = 1 + rng.next_u64() % 9
        graphs.append(erdos_renyi(n, rng.random(), rng.next_u64()))
    mismatches = 0
    for g in graphs:
        for k in range(1, g.n + 1):
            a, b = m_k_direct(g, k).matrix, m_k_via_compound(g, k).matrix
            if not (np.array_equal(a, b) and np.array_equal(a, np.round(a))):
                mismatches += 1
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and dt < 60
    assert verdict("2 M_k identity", ok, f"{len(graphs)} graphs, {mismatches} mismatches, {dt:.1f}s (< 60s)")


def test_c03_star_closed_form():
    worst = 0.0
    for n in range(2, 13):
        for k in range(1, n + 1):
            worst = max(worst, abs(teps_k(star(n), k) - teps_star_closed_form(n, k)))
    worst_sqrt = max(abs(teps_k(star(k + 1), k) - math.sqrt(k)) for k in range(1, 12))
    ok = worst < 1e-8 and worst_sqrt < 1e-8
    assert verdict("3 star closed form", ok,
                   f"closed-form deviation {worst:.2e}, sqrt(k) deviation {worst_sqrt:.2e} (< 1e-8)")


def test_c04_matching_exactness():
    worst = 0.0
    for t in range(1, 7):
        for iso in range(4):
            g = matching_graph(t, iso)
            for k in range(1, t + 1):
                target = 2 * k - t
                worst = max(worst, abs(teps_k(g, k) - target), abs(eps_token_k(g, k) - target))
    assert verdict("4 matching exactness", worst < 1e-8, f"max deviation from 2k-t {worst:.2e} (< 1e-8)")


def test_c05_token_star():
    worst = 0.0
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            worst = max(worst, abs(lambda_max(token_laplacian(star(n), k)) - n))
    assert verdict("5 token star", worst < 1e-8, f"max |lambda_1 - n| {worst:.2e} (< 1e-8)")


def test_c06_disjoint_union():
    rng = np.random.default_rng(99)
    failures, checked = 0, 0
    for _ in range(100):
        n1 = int(rng.integers(1, 10))
        n2 = int(rng.integers(1, 11 - n1))
        g1 = erdos_renyi(n1, float(rng.uniform(0.2, 0.9)), int(rng.integers(2**32)))
        g2 = erdos_renyi(n2, float(rng.uniform(0.2, 0.9)), int(rng.integers(2**32)))
        for k in range(0, n1 + n2 + 1):
            checked += 1
            failures += not verify_disjoint_union_formula(g1, g2, k, tol=1e-7)
    assert verdict("6 disjoint-union formula", failures == 0,
                   f"{checked} (pair, k) cases, {failures} failures at 1e-7")


def test_c07_theorem_suite(corpus_search):
    summary, dt = corpus_search
    viol = {name: summary.bound(name).violations for name in THEOREMS}
    tri_free = summary.bound("clique_free_r2").evaluated
    total = sum(viol.values()) + len(summary.theorem_violations())
    ok = total == 0 and tri_free > 0 and dt < 480
    assert verdict("7 theorem suite", ok,
                   f"{summary.graphs_processed} graphs n<=6, {total} theorem violations, "
                   f"{tri_free} triangle-free (graph, k) checks, {dt:.1f}s (< 480s)")


def test_c08a_conjectures_brouwer_token_matching(corpus_search):
    summary, _ = corpus_search
    viol = {name: summary.bound(name).violations for name in ("brouwer", "token", "token_matching")}
    tight = [evaluate_bounds(complete(3), 2, strict=False).record("brouwer").status == "tight"]
    for k in range(1, 6):
        g = disjoint_union(complete(k + 1), empty(6 - (k + 1))) if k < 5 else complete(6)
        rec = evaluate_bounds(g, k, strict=False).record("brouwer")
        tight.append(rec.status == "tight")
    ok = sum(viol.values()) == 0 and all(tight)
    assert verdict("8a Brouwer / token / epsT<=nu conjectures", ok,
                   f"violations {viol}, tightness witnesses {sum(tight)}/{len(tight)} tight")


def test_c08b_clique_turan_conjecture(corpus_search):
    # Known red: P_4 is triangle-free with eps_2 = 1 + sqrt(2) > ex(3; K_3) = 2.
    summary, _ = corpus_search
    viol = {r: summary.bound(f"clique_turan_r{r}").violations for r in (2, 3)}
    worst = {r: summary.bound(f"clique_turan_r{r}").worst_slack for r in (2, 3)}
    witness = summary.bound("clique_turan_r2")
    ok = sum(viol.values()) == 0
    assert verdict("8b clique-Turan conjecture r=2,3", ok,
                   f"violations {viol}, worst slack {worst[2]:.3f} / {worst[3]:.3f}, "
                   f"worst r=2 witness {witness.worst_graph} at k={witness.worst_k}")


def test_c09_bipartite(corpus_search):
    summary, _ = corpus_search
    viol = summary.bound("teps_bipartite").violations + summary.bound("token_bipartite").violations
    evaluated = summary.bound("teps_bipartite").evaluated
    konig_bad, bip = 0, 0
    for n in range(1, 7):
        inv = batch.batch_invariants(n, np.arange(1 << (n * (n - 1) // 2), dtype=np.int64))
        bip += int(inv["bipartite"].sum())
        konig_bad += int((inv["bipartite"] & (inv["nu"] != inv["tau"])).sum())
    ok = viol == 0 and konig_bad == 0 and evaluated > 0
    assert verdict("9 bipartite strengthenings", ok,
                   f"{evaluated} bipartite (graph, k) checks, {viol} violations; "
                   f"Konig tau=nu failures {konig_bad} over {bip} bipartite graphs")


def test_c10_signless():
    summary, _ = run_search(SearchConfig(mode="exhaustive", n=[5], family="signless", tol=VIOLATION_TOL))
    theorem = sum(summary.bound(n).violations for n in SIGNLESS_THEOREMS) + len(summary.theorem_violations())
    conj = {n: summary.bound(n).violations for n in ("signless_brouwer", "signless_token")}
    assert verdict("10 signless suite", theorem == 0,
                   f"{summary.graphs_processed} graphs n=5, {theorem} theorem-analogue violations "
                   f"(conjecture analogues: {conj})")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
