"""Simple labeled graphs on vertices 0..n-1: parsing, generators, invariants.

Graphs are immutable.  The edge list is always kept as strictly increasing
``(u, v)`` pairs with ``u < v``, so two graphs with the same edges compare
equal and hash the same.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .config import check_cap
from .errors import GraphFormatError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        prev = None
        for u, v in edges:
            if not 0 <= u < v < self.n:
                raise GraphFormatError(f"edge ({u}, {v}) is not a pair u < v < n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise GraphFormatError("edge list must be strictly increasing")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from unordered pairs.  Loops and repeated edges are errors."""
        normalized = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise GraphFormatError(f"duplicate edge {a}")
        return cls(n, tuple(normalized))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Inverse of :meth:`mask`: bit i selects the i-th pair of ``pair_list(n)``."""
        edges = tuple(p for i, p in enumerate(pair_list(n)) if (mask >> i) & 1)
        return cls(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def mask(self) -> int:
        index = pair_index(self.n)
        out = 0
        for e in self.edges:
            out |= 1 << index[e]
        return out

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            a[u, v] = a[v, u] = True
        a.flags.writeable = False
        return a

    @cached_property
    def neighbor_bits(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an integer bitmask."""
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(b.bit_count() for b in self.neighbor_bits)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


def pair_list(n: int) -> list[Edge]:
    """All pairs u < v in lexicographic order; the bit order used by ``Graph.mask``."""
    return list(combinations(range(n), 2))


def pair_index(n: int) -> dict[Edge, int]:
    return {p: i for i, p in enumerate(pair_list(n))}


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v``.

    Text after ``#`` is a comment and blank lines are ignored.
    """
    lines = [s for s in (_strip_comment(raw) for raw in text.splitlines()) if s]
    if not lines:
        raise GraphFormatError("missing header line 'n m'")
    header = lines[0].split()
    try:
        if len(header) != 2:
            raise ValueError
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"malformed header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"malformed header {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        try:
            if len(parts) != 2:
                raise ValueError
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge line {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in {line!r} (n={n})")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _graph6_size(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def encode_graph6(g: Graph) -> str:
    """McKay's graph6 encoding (upper triangle, column by column, 6 bits per byte)."""
    adj = g.neighbor_bits
    bits = [(adj[i] >> j) & 1 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    chunks = _graph6_size(g.n)
    for s in range(0, len(bits), 6):
        value = 0
        for b in bits[s:s + 6]:
            value = (value << 1) | b
        chunks.append(value)
    return "".join(chr(c + 63) for c in chunks)


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = []
    for ch in s:
        c = ord(ch)
        if c < 63 or c > 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
        data.append(c - 63)

    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | c
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | c

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphFormatError(f"truncated graph6 string: need {need} data bytes, got {len(body)}")
    if len(body) > need:
        raise GraphFormatError("trailing bytes after graph6 data")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (body[idx // 6] >> (5 - idx % 6)) & 1:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph(n)


def star(n: int) -> Graph:
    """Star on n vertices centered at vertex 0."""
    if n < 2:
        raise ValueError("a star needs n >= 2")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def matching_graph(t: int, isolated: int = 0) -> Graph:
    """t disjoint edges (2i, 2i+1) followed by ``isolated`` isolated vertices."""
    if t < 0 or isolated < 0:
        raise ValueError("t and isolated must be non-negative")
    return Graph(2 * t + isolated, tuple((2 * i, 2 * i + 1) for i in range(t)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, tuple(pair_list(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def turan_parts(n: int, r: int) -> list[int]:
    """Part index of every vertex in the Turán graph T(n, r); larger parts first."""
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return [i for i, size in enumerate(sizes) for _ in range(size)]


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with balanced consecutive parts."""
    if n < 1 or not 1 <= r <= n:
        raise ValueError(f"turan(n, r) needs 1 <= r <= n, got n={n}, r={r}")
    part = turan_parts(n, r)
    return Graph(n, tuple((u, v) for u, v in pair_list(n) if part[u] != part[v]))


def turan_number(n: int, r: int) -> int:
    """ex(n; K_{r+1}), i.e. the edge count of T(n, min(r, n))."""
    if n <= 0:
        return 0
    r = min(r, n)
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return (n * n - sum(s * s for s in sizes)) // 2


class SplitMix64:
    """Steele, Lea and Flood's SplitMix64 generator.

    Used wherever samples must be reproducible from a seed alone, independent
    of numpy's bit-generator internals.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pairs visited in lex order, kept when a SplitMix64 draw is < p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    return Graph(n, tuple(e for e in pair_list(n) if rng.random() < p))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.edges + tuple((u + shift, v + shift) for u, v in g2.edges))


def spanning_subgraph(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Graph on g's vertex set with the given subset of g's edges."""
    chosen = set(edges)
    if not chosen <= set(g.edges):
        raise ValueError("edges are not a subset of g's edges")
    return Graph(g.n, tuple(e for e in g.edges if e in chosen))


def edge_union(g1: Graph, g2: Graph) -> Graph:
    """Union of two edge-disjoint graphs on the same vertex set."""
    if g1.n != g2.n:
        raise ValueError("graphs must share the vertex set")
    if set(g1.edges) & set(g2.edges):
        raise ValueError("graphs are not edge-disjoint")
    return Graph(g1.n, tuple(sorted(g1.edges + g2.edges)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex map v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def is_bipartite(g: Graph) -> Bipartition | None:
    """BFS 2-coloring; returns None when g has an odd cycle."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            nb = g.neighbor_bits[u]
            while nb:
                low = nb & -nb
                v = low.bit_length() - 1
                nb ^= low
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(left, frozenset(range(g.n)) - left)


def matching_number(g: Graph) -> int:
    """Exact maximum matching size by branch and bound over vertices."""
    best = 0

    def live_vertices(adj, alive):
        # vertices of ``alive`` that still have a neighbor in ``alive``
        out = 0
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if adj[v] & alive:
                out |= low
        return out

    def search(alive, size):
        nonlocal best
        live = live_vertices(g.neighbor_bits, alive)
        if size + live.bit_count() // 2 <= best:
            return
        if not live:
            best = size
            return
        low = live & -live
        v = low.bit_length() - 1
        nb = g.neighbor_bits[v] & live
        while nb:
            wlow = nb & -nb
            nb ^= wlow
            search(live & ~low & ~wlow, size + 1)
        # leave v unmatched
        search(live & ~low, size)

    search((1 << g.n) - 1, 0)
    return best


def minimum_vertex_cover(g: Graph) -> list[int]:
    """A minimum vertex cover, found by branch and bound."""
    best = list(range(g.n))

    def search(adj, chosen):
        nonlocal best
        degs = [b.bit_count() for b in adj]
        m2 = sum(degs)
        if m2 == 0:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        dmax = max(degs)
        # each further cover vertex removes at most dmax edges
        if len(chosen) + -(-(m2 // 2) // dmax) >= len(best):
            return
        v = degs.index(dmax)
        search(_delete(adj, 1 << v), chosen + [v])
        nb = adj[v]
        search(_delete(adj, nb), chosen + [w for w in range(g.n) if (nb >> w) & 1])

    search(list(g.neighbor_bits), [])
    return best


def covering_number(g: Graph) -> int:
    """Exact minimum vertex cover size."""
    return len(minimum_vertex_cover(g))


def _delete(adj, vertices):
    keep = ~vertices
    return [0 if (vertices >> i) & 1 else b & keep for i, b in enumerate(adj)]


def induced_edge_count(g: Graph, subset: Iterable[int]) -> int:
    bits = 0
    for v in subset:
        bits |= 1 << v
    return sum((g.neighbor_bits[v] & bits).bit_count() for v in range(g.n) if (bits >> v) & 1) // 2


def max_induced_edges(g: Graph, k: int, cap: int | None = None) -> int:
    """max |E_G(U)| over all k-subsets U, by exhaustive enumeration."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    check_cap(g.n, k, cap)
    if k < 2 or g.m == 0:
        return 0
    return max(induced_edge_count(g, u) for u in combinations(range(g.n), k))


def is_clique_free(g: Graph, r_plus_1: int) -> bool:
    """True iff g has no clique on ``r_plus_1`` vertices."""
    if r_plus_1 < 2:
        raise ValueError("clique size must be at least 2")
    adj = g.neighbor_bits

    def extend(candidates, size):
        if size == r_plus_1:
            return True
        if size + candidates.bit_count() < r_plus_1:
            return False
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            # only later vertices, so each clique is found once
            if extend(adj[v] & candidates, size + 1):
                return True
        return False

    return not extend((1 << g.n) - 1, 0)


def is_cover(g: Graph, cover: Iterable[int]) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in g.edges)


def star_cover_decomposition(g: Graph, cover: Sequence[int]) -> list[Graph]:
    """Split g into edge-disjoint stars, one per cover vertex, in cover order.

    Part i gets the edges through ``cover[i]`` that avoid every earlier cover
    vertex, so parts may be empty.
    """
    if not is_cover(g, cover):
        raise ValueError(f"{list(cover)} is not a vertex cover")
    parts = []
    used = set()
    for v in cover:
        mine = tuple(e for e in g.edges if v in e and not (set(e) & used))
        used.add(v)
        parts.append(Graph(g.n, mine))
    return parts


def top_degree_sum(g: Graph, k: int) -> int:
    """Sum of the k largest degrees."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    return sum(sorted(g.degrees, reverse=True)[:k])


def conjugate_degree_sum(g: Graph, k: int) -> int:
    """Sum of the first k terms of the conjugate degree sequence d'_i = #{v: deg v >= i}."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    return sum(sum(1 for d in g.degrees if d >= i) for i in range(1, k + 1))


def count_labeled_graphs(n: int) -> int:
    return 1 << comb(n, 2)
