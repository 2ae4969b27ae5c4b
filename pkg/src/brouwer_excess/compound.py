"""k-subset indexing, additive compound matrices and the perturbed compound M_k(G).

Rows and columns of every C(n, k)-dimensional matrix here are indexed by the
k-subsets of {0..n-1} in lexicographic order of their sorted tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .config import check_cap
from .graphs import Graph
from .spectral import FAMILIES, graph_matrix, kronecker_sum

Subset = tuple[int, ...]


class SubsetIndexer:
    """Bijection between ranks 0..C(n,k)-1 and k-subsets, lexicographic order.

    ``rank`` and ``unrank`` use the combinatorial number system directly, so
    they agree with the ``subsets`` table without looking it up.
    """

    def __init__(self, n: int, k: int):
        if not 0 <= k <= n:
            raise ValueError(f"k={k} out of range for n={n}")
        self.n = n
        self.k = k
        self.size = comb(n, k)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"SubsetIndexer(n={self.n}, k={self.k})"

    @property
    def subsets(self) -> list[Subset]:
        return _subsets(self.n, self.k)

    def rank(self, subset: Sequence[int]) -> int:
        s = sorted(subset)
        if len(s) != self.k or len(set(s)) != self.k or (s and not 0 <= s[0] <= s[-1] < self.n):
            raise ValueError(f"{subset} is not a {self.k}-subset of range({self.n})")
        r = 0
        prev = -1
        for pos, x in enumerate(s):
            left = self.k - pos - 1
            # skip every subset whose element at ``pos`` is smaller than x
            for y in range(prev + 1, x):
                r += comb(self.n - 1 - y, left)
            prev = x
        return r

    def unrank(self, r: int) -> Subset:
        if not 0 <= r < self.size:
            raise ValueError(f"rank {r} out of range 0..{self.size - 1}")
        out = []
        y = 0
        for pos in range(self.k):
            left = self.k - pos - 1
            while True:
                block = comb(self.n - 1 - y, left)
                if r < block:
                    break
                r -= block
                y += 1
            out.append(y)
            y += 1
        return tuple(out)


@lru_cache(maxsize=64)
def _subsets(n: int, k: int) -> list[Subset]:
    return list(combinations(range(n), k))


@lru_cache(maxsize=64)
def _rank_table(n: int, k: int) -> dict[Subset, int]:
    return {s: i for i, s in enumerate(_subsets(n, k))}


def sign_pair(sigma: Sequence[int], tau: Sequence[int]) -> int:
    """(-1)^c, c = number of common elements strictly between the two swapped ones."""
    s, t = set(sigma), set(tau)
    if len(s) != len(t) or len(s & t) != len(s) - 1:
        raise ValueError(f"{sorted(s)} and {sorted(t)} do not differ in exactly one element")
    i, j = sorted(s ^ t)
    c = sum(1 for r in s & t if i < r < j)
    return -1 if c & 1 else 1


def _swap_sign(sigma: Subset, i: int, j: int) -> int:
    lo, hi = (i, j) if i < j else (j, i)
    c = sum(1 for r in sigma if lo < r < hi)
    return -1 if c & 1 else 1


def neighbors_by_swap(n: int, k: int):
    """Yield (rank_sigma, rank_tau, i, j, sign) for every sigma and every swap i -> j.

    ``tau = sigma - {i} + {j}``; both orientations of each pair are produced.
    """
    table = _rank_table(n, k)
    for a, sigma in enumerate(_subsets(n, k)):
        members = set(sigma)
        for i in sigma:
            rest = tuple(x for x in sigma if x != i)
            for j in range(n):
                if j in members:
                    continue
                tau = tuple(sorted(rest + (j,)))
                yield a, table[tau], i, j, _swap_sign(sigma, i, j)


@dataclass(frozen=True)
class CompoundMatrix:
    base_dim: int
    k: int
    matrix: np.ndarray
    indexer: SubsetIndexer

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def additive_compound(m: np.ndarray, k: int, cap: int | None = None) -> CompoundMatrix:
    """k-th additive compound: diagonal sums over sigma, signed entries for single swaps."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n:
        raise ValueError("expected a square matrix")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for dimension {n}")
    size = check_cap(n, k, cap)
    out = np.zeros((size, size))
    diag = np.diag(m)
    for a, sigma in enumerate(_subsets(n, k)):
        out[a, a] = diag[list(sigma)].sum()
    for a, b, i, j, sgn in neighbors_by_swap(n, k):
        out[a, b] = sgn * m[i, j]
    return CompoundMatrix(n, k, out, SubsetIndexer(n, k))


def diag_perturbation(g: Graph, k: int, cap: int | None = None) -> CompoundMatrix:
    """D_k(G): diagonal matrix of induced edge counts |E_G(sigma)|."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    size = check_cap(g.n, k, cap)
    vals = np.zeros(size)
    for a, sigma in enumerate(_subsets(g.n, k)):
        bits = sum(1 << v for v in sigma)
        vals[a] = sum((g.neighbor_bits[v] & bits).bit_count() for v in sigma) // 2
    return CompoundMatrix(g.n, k, np.diag(vals), SubsetIndexer(g.n, k))


def m_k_direct(g: Graph, k: int, family: str = "laplacian", cap: int | None = None) -> CompoundMatrix:
    """M_k(G) entrywise: diagonal counts edges meeting sigma, off-diagonal -sign (+sign signless)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown matrix family {family!r}")
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    size = check_cap(g.n, k, cap)
    out = np.zeros((size, size))
    table = _rank_table(g.n, k)
    flip = -1.0 if family == "laplacian" else 1.0
    for a, sigma in enumerate(_subsets(g.n, k)):
        members = set(sigma)
        out[a, a] = sum(1 for u, v in g.edges if u in members or v in members)
        for u, v in g.edges:
            # sigma (+) tau = {u, v}: exactly one endpoint lies in sigma
            if (u in members) == (v in members):
                continue
            i, j = (u, v) if u in members else (v, u)
            tau = tuple(sorted([x for x in sigma if x != i] + [j]))
            out[a, table[tau]] = flip * _swap_sign(sigma, i, j)
    return CompoundMatrix(g.n, k, out, SubsetIndexer(g.n, k))


def m_k_via_compound(g: Graph, k: int, family: str = "laplacian", cap: int | None = None) -> CompoundMatrix:
    """M_k(G) as compound of L(G) (or Q(G)) minus D_k(G)."""
    comp = additive_compound(graph_matrix(g, family), k, cap)
    d = diag_perturbation(g, k, cap)
    return CompoundMatrix(g.n, k, comp.matrix - d.matrix, comp.indexer)


def m_k_or_zero(g: Graph, k: int, family: str = "laplacian", cap: int | None = None) -> np.ndarray:
    """M_k(G) as an array, with M_0 the 1x1 zero matrix."""
    if k == 0:
        return np.zeros((1, 1))
    return m_k_direct(g, k, family, cap).matrix


def m_k_block_union(g1: Graph, g2: Graph, k: int, family: str = "laplacian",
                    cap: int | None = None) -> list[tuple[int, int, np.ndarray]]:
    """Blocks M_i(G1) (+) M_j(G2) for i + j = k of M_k on the disjoint union."""
    if not 0 <= k <= g1.n + g2.n:
        raise ValueError(f"k={k} out of range for n={g1.n + g2.n}")
    blocks = []
    for i in range(max(0, k - g2.n), min(k, g1.n) + 1):
        j = k - i
        blocks.append((i, j, kronecker_sum(m_k_or_zero(g1, i, family, cap), m_k_or_zero(g2, j, family, cap))))
    return blocks
