"""
Searching every small graph
===========================

An exhaustive pass over all labeled graphs on five vertices.  The proved
bounds hold with room to spare; Brouwer's bound is met with equality; the
clique-Turán form breaks already on a path.
"""

from brouwer_excess import SearchConfig, evaluate_bounds, path, run_search

summary, _ = run_search(SearchConfig(mode="exhaustive", n=[5]))
print(summary.graphs_processed, "graphs,", summary.pairs_evaluated, "(graph, k) pairs")

for b in summary.bounds:
    print(f"{b.kind:10s} {b.name:16s} worst slack {b.worst_slack:9.4f}  "
          f"tight {b.tight:5d}  violations {b.violations}")

print("largest teps_k / sqrt(k):", round(summary.teps_ratio_max, 4),
      "on", summary.teps_ratio_graph, "k =", summary.teps_ratio_k)

# The smallest offender: a triangle-free path with eps_2 = 1 + sqrt(2) > 2
rec = evaluate_bounds(path(4), 2).record("clique_turan_r2")
print(rec)
