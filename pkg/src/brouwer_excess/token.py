"""Token graphs F_k(G) and their Laplacians.

Vertex r of F_k(G) is the k-subset ``SubsetIndexer(n, k).unrank(r)``; two
subsets are adjacent when their symmetric difference is an edge of G.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .compound import SubsetIndexer, _rank_table, _subsets
from .config import check_cap
from .graphs import Graph
from .spectral import FAMILIES


@dataclass(frozen=True)
class TokenGraph:
    base: Graph
    k: int
    graph: Graph
    indexer: SubsetIndexer


def _swaps(g: Graph, k: int):
    """(rank_sigma, rank_tau) for every ordered pair with sigma (+) tau in E."""
    table = _rank_table(g.n, k)
    for a, sigma in enumerate(_subsets(g.n, k)):
        members = set(sigma)
        for u, v in g.edges:
            if (u in members) == (v in members):
                continue
            i, j = (u, v) if u in members else (v, u)
            tau = tuple(sorted([x for x in sigma if x != i] + [j]))
            yield a, table[tau]


def _check(g: Graph, k: int, cap):
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    return check_cap(g.n, k, cap)


def token_graph(g: Graph, k: int, cap: int | None = None) -> TokenGraph:
    size = _check(g, k, cap)
    edges = sorted((a, b) for a, b in _swaps(g, k) if a < b)
    return TokenGraph(g, k, Graph(size, tuple(edges)), SubsetIndexer(g.n, k))


def token_degrees(g: Graph, k: int, cap: int | None = None) -> np.ndarray:
    """Degree of each sigma in F_k(G): the number of edges with exactly one end in sigma."""
    size = _check(g, k, cap)
    out = np.zeros(size)
    for a, sigma in enumerate(_subsets(g.n, k)):
        members = set(sigma)
        out[a] = sum(1 for u, v in g.edges if (u in members) != (v in members))
    return out


def token_matrix(g: Graph, k: int, family: str = "laplacian", cap: int | None = None) -> np.ndarray:
    """L(F_k(G)) or Q(F_k(G)) straight from the entry formula, without building F_k(G)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown matrix family {family!r}")
    out = np.diag(token_degrees(g, k, cap))
    off = -1.0 if family == "laplacian" else 1.0
    for a, b in _swaps(g, k):
        out[a, b] = off
    return out


def token_laplacian(g: Graph, k: int, cap: int | None = None) -> np.ndarray:
    return token_matrix(g, k, "laplacian", cap)


def token_signless_laplacian(g: Graph, k: int, cap: int | None = None) -> np.ndarray:
    return token_matrix(g, k, "signless", cap)
