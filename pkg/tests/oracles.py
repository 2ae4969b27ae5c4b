"""Brute-force reference computations, independent of the package internals."""
from itertools import combinations, product

import numpy as np


def edge_sets(g):
    return [frozenset(e) for e in g.edges]


def brute_matching_number(g):
    edges = edge_sets(g)
    for size in range(len(edges), 0, -1):
        for chosen in combinations(edges, size):
            if len(frozenset().union(*chosen)) == 2 * size:
                return size
    return 0


def brute_cover_number(g):
    edges = edge_sets(g)
    for size in range(g.n + 1):
        for cover in combinations(range(g.n), size):
            c = set(cover)
            if all(e & c for e in edges):
                return size
    raise AssertionError("unreachable")


def brute_is_bipartite(g):
    if g.n == 0:
        return True
    for colors in product((0, 1), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in g.edges):
            return True
    return False


def brute_has_clique(g, size):
    edges = set(g.edges)
    return any(all(p in edges for p in combinations(c, 2)) for c in combinations(range(g.n), size))


def brute_max_induced(g, k):
    edges = edge_sets(g)
    return max((sum(1 for e in edges if e <= set(u)) for u in combinations(range(g.n), k)), default=0)


def brute_ex(n, clique_size):
    """max edges of an n-vertex graph with no clique on ``clique_size`` vertices."""
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        edges = {p for i, p in enumerate(pairs) if (mask >> i) & 1}
        if len(edges) <= best:
            continue
        if not any(all(q in edges for q in combinations(c, 2)) for c in combinations(range(n), clique_size)):
            best = len(edges)
    return best


def ksum_spectrum(eigs, k):
    """Sorted multiset of all sums of k distinct eigenvalues."""
    eigs = np.asarray(eigs)
    return np.sort([eigs[list(c)].sum() for c in combinations(range(len(eigs)), k)])


def jacobi_eigenvalues(a, tol=1e-13, sweeps=100):
    """Cyclic Jacobi rotations; a solver independent of LAPACK."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < tol * max(1.0, np.abs(a).max()):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1)) if theta != 0 else 1.0
                c = 1 / np.sqrt(t * t + 1)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))[::-1]


def brute_token_edges(g, k):
    """Token graph edges on lexicographic ranks, from the symmetric-difference rule."""
    subsets = list(combinations(range(g.n), k))
    edges = set(edge_sets(g))
    out = []
    for a, b in combinations(range(len(subsets)), 2):
        diff = frozenset(subsets[a]) ^ frozenset(subsets[b])
        if diff in edges:
            out.append((a, b))
    return out
