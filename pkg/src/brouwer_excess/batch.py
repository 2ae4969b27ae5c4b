"""Vectorized evaluation of the excess values over many graphs on the same n.

Graphs are given as integer edge masks (bit i = i-th pair of ``pair_list(n)``).
Every matrix here is a sum of per-edge contributions, so each is assembled
as ``bits @ basis`` where ``basis[p]`` is the matrix of the single-edge graph
on pair p.  The combinatorial invariants (nu, tau, bipartiteness,
clique-freeness) are read off enumerated pattern tables (all matchings, all
vertex subsets, all 2-colorings, all cliques of K_n) rather than searched
per graph.

The per-graph constructions in :mod:`brouwer_excess.compound` and
:mod:`brouwer_excess.token` are independent of this module; the test suite
checks that both routes agree.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .compound import _subsets, neighbors_by_swap
from .config import within_cap
from .excess import DEFAULT_CLIQUE_ORDERS, required_clique_sizes
from .graphs import pair_index, pair_list
from .spectral import batch_eigenvalues

# past this many basis entries per order k, use the per-graph route instead
MAX_BASIS_ENTRIES = 4_000_000
# floats per chunk of stacked matrices
CHUNK_ENTRIES = 4_000_000


def mask_bits(masks: np.ndarray, n: int) -> np.ndarray:
    """(B, P) 0/1 float matrix of edge indicators."""
    p = comb(n, 2)
    masks = np.asarray(masks, dtype=np.int64)
    return ((masks[:, None] >> np.arange(p, dtype=np.int64)) & 1).astype(float)


@lru_cache(maxsize=16)
def _graph_basis(n: int):
    p = comb(n, 2)
    lap = np.zeros((p, n, n))
    sig = np.zeros((p, n, n))
    inc = np.zeros((p, n))
    for idx, (u, v) in enumerate(pair_list(n)):
        lap[idx, u, u] = lap[idx, v, v] = 1.0
        sig[idx, u, u] = sig[idx, v, v] = 1.0
        lap[idx, u, v] = lap[idx, v, u] = -1.0
        sig[idx, u, v] = sig[idx, v, u] = 1.0
        inc[idx, u] = inc[idx, v] = 1.0
    return lap.reshape(p, n * n), sig.reshape(p, n * n), inc


@lru_cache(maxsize=64)
def _order_basis(n: int, k: int):
    """Per-edge pieces of M_k and L(F_k) for subsets of size k."""
    p = comb(n, 2)
    size = comb(n, k)
    index = pair_index(n)
    meets = np.zeros((p, size))
    cuts = np.zeros((p, size))
    inside = np.zeros((p, size))
    for a, sigma in enumerate(_subsets(n, k)):
        s = set(sigma)
        for (u, v), idx in index.items():
            hit = (u in s) + (v in s)
            meets[idx, a] = hit > 0
            cuts[idx, a] = hit == 1
            inside[idx, a] = hit == 2
    signed = np.zeros((p, size, size))
    pattern = np.zeros((p, size, size))
    for a, b, i, j, sgn in neighbors_by_swap(n, k):
        idx = index[(i, j) if i < j else (j, i)]
        signed[idx, a, b] = sgn
        pattern[idx, a, b] = 1.0
    return meets, cuts, inside, signed.reshape(p, size * size), pattern.reshape(p, size * size)


def basis_fits(n: int, k: int) -> bool:
    return comb(n, 2) * comb(n, k) ** 2 <= MAX_BASIS_ENTRIES


def _assemble(bits, diag_basis, off_basis, off_sign, size):
    stack = (bits @ off_basis).reshape(-1, size, size) * off_sign
    idx = np.arange(size)
    stack[:, idx, idx] += bits @ diag_basis
    return stack


def m_k_stack(n: int, k: int, bits: np.ndarray, family: str = "laplacian") -> np.ndarray:
    meets, _, _, signed, _ = _order_basis(n, k)
    return _assemble(bits, meets, signed, -1.0 if family == "laplacian" else 1.0, comb(n, k))


def token_stack(n: int, k: int, bits: np.ndarray, family: str = "laplacian") -> np.ndarray:
    _, cuts, _, _, pattern = _order_basis(n, k)
    return _assemble(bits, cuts, pattern, -1.0 if family == "laplacian" else 1.0, comb(n, k))


def graph_stack(n: int, bits: np.ndarray, family: str = "laplacian") -> np.ndarray:
    lap, sig, _ = _graph_basis(n)
    return (bits @ (lap if family == "laplacian" else sig)).reshape(-1, n, n)


# ---------------------------------------------------------------------------
# combinatorial invariants by table lookup
# ---------------------------------------------------------------------------

@lru_cache(maxsize=16)
def _matching_table(n: int):
    index = pair_index(n)
    masks, sizes = [], []

    def grow(free, mask, size):
        masks.append(mask)
        sizes.append(size)
        if len(free) < 2:
            return
        # matchings whose smallest covered vertex is >= free[0], built in order
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                rest = free[a + 1:b] + free[b + 1:]
                grow(rest, mask | (1 << index[(free[a], free[b])]), size + 1)

    grow(tuple(range(n)), 0, 0)
    return np.array(masks, dtype=np.int64), np.array(sizes)


@lru_cache(maxsize=16)
def _cover_table(n: int):
    """For every vertex subset U, the edges of K_n that U misses, and |U|."""
    pairs = pair_list(n)
    missed = np.zeros(1 << n, dtype=np.int64)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for u_mask in range(1 << n):
        bits = 0
        for idx, (u, v) in enumerate(pairs):
            if not ((u_mask >> u) & 1 or (u_mask >> v) & 1):
                bits |= 1 << idx
        missed[u_mask] = bits
        sizes[u_mask] = bin(u_mask).count("1")
    return missed, sizes


@lru_cache(maxsize=16)
def _monochromatic_table(n: int):
    """Edges of K_n inside a color class, for 2-colorings with vertex 0 colored 0."""
    pairs = pair_list(n)
    out = []
    for coloring in range(1 << max(n - 1, 0)):
        color = [0] + [(coloring >> i) & 1 for i in range(n - 1)]
        bits = 0
        for idx, (u, v) in enumerate(pairs):
            if color[u] == color[v]:
                bits |= 1 << idx
        out.append(bits)
    return np.array(out, dtype=np.int64)


@lru_cache(maxsize=32)
def _clique_table(n: int, size: int):
    index = pair_index(n)
    out = []
    for verts in combinations(range(n), size):
        bits = 0
        for e in combinations(verts, 2):
            bits |= 1 << index[e]
        out.append(bits)
    return np.array(out, dtype=np.int64)


def _contains(masks, patterns):
    # (B, T): pattern t is a subset of graph b
    return (masks[:, None] & patterns[None, :]) == patterns[None, :]


def batch_invariants(n: int, masks: np.ndarray,
                     clique_orders: Sequence[int] = DEFAULT_CLIQUE_ORDERS) -> dict:
    masks = np.asarray(masks, dtype=np.int64)
    out = {}
    if n == 0:
        b = len(masks)
        out.update(nu=np.zeros(b, int), tau=np.zeros(b, int), bipartite=np.ones(b, bool))
        for s in required_clique_sizes(clique_orders):
            out[f"clique_free_{s}"] = np.ones(b, bool)
        return out
    mt, ms = _matching_table(n)
    out["nu"] = np.where(_contains(masks, mt), ms[None, :], 0).max(axis=1)
    missed, sizes = _cover_table(n)
    covers = (masks[:, None] & missed[None, :]) == 0
    out["tau"] = np.where(covers, sizes[None, :], n).min(axis=1)
    mono = _monochromatic_table(n)
    out["bipartite"] = ((masks[:, None] & mono[None, :]) == 0).any(axis=1)
    for s in required_clique_sizes(clique_orders):
        if s > n:
            out[f"clique_free_{s}"] = np.ones(len(masks), bool)
        else:
            out[f"clique_free_{s}"] = ~_contains(masks, _clique_table(n, s)).any(axis=1)
    return out


def batch_graph_values(n: int, masks: np.ndarray, family: str = "laplacian",
                       clique_orders: Sequence[int] = DEFAULT_CLIQUE_ORDERS) -> dict:
    """k-independent arrays: invariants, degrees and the L/Q spectra."""
    masks = np.asarray(masks, dtype=np.int64)
    bits = mask_bits(masks, n)
    out = batch_invariants(n, masks, clique_orders)
    out["bits"] = bits
    out["m"] = bits.sum(axis=1)
    _, _, inc = _graph_basis(n)
    deg = bits @ inc
    out["degree_cumsum"] = np.cumsum(-np.sort(-deg, axis=1), axis=1)
    conj = np.stack([(deg >= i).sum(axis=1) for i in range(1, n + 1)], axis=1) if n else deg
    out["conjugate_cumsum"] = np.cumsum(conj, axis=1)
    if family in ("laplacian", "both"):
        out["lap_spectrum"] = batch_eigenvalues(graph_stack(n, bits, "laplacian"))
    if family in ("signless", "both"):
        out["q_spectrum"] = batch_eigenvalues(graph_stack(n, bits, "signless"))
    return out


def batch_order_values(n: int, k: int, graph_values: dict, family: str = "laplacian",
                       cap: int | None = None) -> dict:
    """Arrays of every value the bound catalogue reads, for one k."""
    gv = graph_values
    bits = gv["bits"]
    v = {key: gv[key] for key in gv if key in ("nu", "tau", "bipartite", "m") or key.startswith("clique_free_")}
    v.update(n=n, k=k)
    v["degree_top"] = gv["degree_cumsum"][:, k - 1]
    v["conjugate_sum"] = gv["conjugate_cumsum"][:, k - 1]
    fits = within_cap(n, k, cap)
    if fits:
        _, _, inside, _, _ = _order_basis(n, k)
        v["max_induced"] = (bits @ inside).max(axis=1)
    else:
        v["max_induced"] = None
    sfxs = {"laplacian": ("",), "signless": ("_q",), "both": ("", "_q")}[family]
    for sfx in sfxs:
        fam = "laplacian" if sfx == "" else "signless"
        spectrum = gv["lap_spectrum" if sfx == "" else "q_spectrum"]
        top = spectrum[:, :k].sum(axis=1)
        v["lap_sum" if sfx == "" else "q_sum"] = top
        v["eps" + sfx] = top - v["m"]
        if fits:
            teps = batch_eigenvalues(m_k_stack(n, k, bits, fam))[:, 0] - v["m"]
            tmax = batch_eigenvalues(token_stack(n, k, bits, fam))[:, 0]
            v["teps" + sfx] = teps
            v["token_max" + sfx] = tmax
            v["eps_token" + sfx] = tmax - v["m"]
        else:
            v["teps" + sfx] = v["token_max" + sfx] = v["eps_token" + sfx] = None
    return v


def chunk_size(n: int, ks: Sequence[int]) -> int:
    largest = max([comb(n, k) for k in ks] + [n, 1])
    return max(1, CHUNK_ENTRIES // (largest * largest))


def batch_supported(n: int, ks: Sequence[int], cap: int | None = None) -> bool:
    """Whether the vectorized route handles this n (masks must fit in int64)."""
    if comb(n, 2) > 62 or n > 12:
        return False
    return all(basis_fits(n, k) or not within_cap(n, k, cap) for k in ks)
