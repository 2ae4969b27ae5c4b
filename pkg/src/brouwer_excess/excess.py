"""Excess quantities and the catalogue of bounds they are checked against.

Three excesses of a graph G = (V, E) at order k:

* ``eps_k``      sum of the k largest Laplacian eigenvalues, minus |E|
* ``teps_k``     largest eigenvalue of M_k(G), minus |E| (``-|E|`` at k = 0)
* ``eps_token_k`` largest Laplacian eigenvalue of the token graph F_k(G), minus |E|

Each accepts ``family="signless"`` to use Q(G) in place of L(G).

Every bound is a :class:`BoundSpec` whose ``lhs``/``bound`` callables work
on a mapping of scalar values (one graph) or of numpy arrays (a batch of
graphs); :func:`evaluate_bounds` uses the first form and
:mod:`brouwer_excess.batch` the second.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .compound import m_k_block_union, m_k_direct
from .config import violation_tol, within_cap
from .errors import TheoremViolationError
from .graphs import (
    Graph, SplitMix64, conjugate_degree_sum, covering_number, disjoint_union, encode_graph6,
    is_bipartite, is_clique_free, matching_number, max_induced_edges, minimum_vertex_cover,
    spanning_subgraph, star_cover_decomposition, top_degree_sum, turan_number,
)
from .spectral import eigenvalues_sym, graph_matrix, lambda_max
from .token import token_matrix

DEFAULT_CLIQUE_ORDERS = (2, 3)


def eps_k(g: Graph, k: int, family: str = "laplacian") -> float:
    """Sum of the k largest eigenvalues of L(G) (or Q(G)) minus |E|."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    return float(eigenvalues_sym(graph_matrix(g, family))[:k].sum()) - g.m


def teps_k(g: Graph, k: int, family: str = "laplacian", cap: int | None = None) -> float:
    """lambda_1(M_k(G)) - |E|, with the convention -|E| at k = 0."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    if k == 0:
        return -float(g.m)
    return lambda_max(m_k_direct(g, k, family, cap).matrix) - g.m


def eps_token_k(g: Graph, k: int, family: str = "laplacian", cap: int | None = None) -> float:
    """lambda_1(L(F_k(G))) - |E|."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    return lambda_max(token_matrix(g, k, family, cap)) - g.m


def teps_star_closed_form(n: int, k: int) -> float:
    """M_k-excess of the n-vertex star from its two-dimensional reduction."""
    if n < 2 or not 1 <= k <= n:
        raise ValueError(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")
    if k == n:
        return 0.0
    a = n - k + 1
    lam_plus = (a + math.sqrt(a * a + 4 * (k - 1))) / 2
    return lam_plus + (k - 1) - (n - 1)


# ---------------------------------------------------------------------------
# bound catalogue
# ---------------------------------------------------------------------------

def _growth(k):
    return (4 * k - 2) * np.sqrt(k)


def _half_growth(k):
    return (2 * k - 1) * np.sqrt(k)


@dataclass(frozen=True)
class BoundSpec:
    """``lhs(v) <= bound(v)`` where it ``applies(v)``; ``needs`` lists the value keys used."""

    name: str
    kind: str  # "theorem" or "conjecture"
    lhs: Callable
    bound: Callable
    needs: tuple[str, ...]
    applies: Callable | None = None
    description: str = ""


def _family_specs(prefix: str, sfx: str, clique_orders: Sequence[int], with_degree_bounds: bool):
    eps, teps, tok, mi = f"eps{sfx}", f"teps{sfx}", f"token_max{sfx}", "max_induced"
    specs = [
        BoundSpec(prefix + "density", "theorem",
                  lambda v: v[eps], lambda v: v[mi] + _growth(v["k"]), (eps, mi),
                  description="eps_k <= max_U |E(U)| + (4k-2)sqrt(k)"),
        BoundSpec(prefix + "binomial", "theorem",
                  lambda v: v[eps], lambda v: v["k"] * (v["k"] - 1) / 2 + _growth(v["k"]), (eps,),
                  description="eps_k <= C(k,2) + (4k-2)sqrt(k)"),
    ]
    for r in clique_orders:
        specs.append(BoundSpec(
            f"{prefix}clique_free_r{r}", "theorem",
            lambda v: v[eps], lambda v, r=r: (1 - 1 / r) * v["k"] ** 2 / 2 + _growth(v["k"]), (eps,),
            applies=lambda v, r=r: v[f"clique_free_{r + 1}"],
            description=f"K_{r + 1}-free: eps_k <= (1-1/{r})k^2/2 + (4k-2)sqrt(k)"))
    specs += [
        BoundSpec(prefix + "teps_general", "theorem",
                  lambda v: v[teps], lambda v: _growth(v["k"]), (teps,),
                  description="teps_k <= (4k-2)sqrt(k)"),
        BoundSpec(prefix + "teps_bipartite", "theorem",
                  lambda v: v[teps], lambda v: _half_growth(v["k"]), (teps,),
                  applies=lambda v: v["bipartite"],
                  description="bipartite: teps_k <= (2k-1)sqrt(k)"),
        BoundSpec(prefix + "token_general", "theorem",
                  lambda v: v[tok], lambda v: v["m"] + 4 * v["k"] - 2, (tok,),
                  description="lambda_1(F_k) <= |E| + 4k - 2"),
        BoundSpec(prefix + "token_bipartite", "theorem",
                  lambda v: v[tok], lambda v: v["m"] + 2 * v["k"] - 1, (tok,),
                  applies=lambda v: v["bipartite"],
                  description="bipartite: lambda_1(F_k) <= |E| + 2k - 1"),
        BoundSpec(prefix + "mk_chain", "theorem",
                  lambda v: v[eps], lambda v: v[teps] + v[mi], (eps, teps, mi),
                  description="eps_k <= teps_k + max_U |E(U)|"),
    ]
    if with_degree_bounds:
        specs += [
            BoundSpec("degree_lower", "theorem",
                      lambda v: v["degree_top"], lambda v: v["lap_sum"], ("degree_top", "lap_sum"),
                      description="k largest degrees <= sum of k largest eigenvalues"),
            BoundSpec("conjugate_upper", "theorem",
                      lambda v: v["lap_sum"], lambda v: v["conjugate_sum"], ("lap_sum", "conjugate_sum"),
                      description="sum of k largest eigenvalues <= k largest conjugate degrees"),
        ]
    return specs


def bound_specs(family: str = "laplacian",
                clique_orders: Sequence[int] = DEFAULT_CLIQUE_ORDERS) -> list[BoundSpec]:
    """All bounds, theorems first, in the fixed order used for reports and CSV columns."""
    if family not in ("laplacian", "signless", "both"):
        raise ValueError(f"unknown family {family!r}")
    lap = family in ("laplacian", "both")
    sig = family in ("signless", "both")
    theorems, conjectures = [], []
    if lap:
        theorems += _family_specs("", "", clique_orders, True)
        conjectures += [
            BoundSpec("brouwer", "conjecture",
                      lambda v: v["eps"], lambda v: v["k"] * (v["k"] + 1) / 2, ("eps",),
                      description="eps_k <= C(k+1,2)"),
            BoundSpec("token", "conjecture",
                      lambda v: v["token_max"], lambda v: v["m"] + v["k"], ("token_max",),
                      description="lambda_1(L(F_k)) <= |E| + k"),
            BoundSpec("token_matching", "conjecture",
                      lambda v: v["eps_token"], lambda v: v["nu"], ("eps_token",),
                      description="epsT_k <= nu(G)"),
        ]
        for r in clique_orders:
            conjectures.append(BoundSpec(
                f"clique_turan_r{r}", "conjecture",
                lambda v: v["eps"], lambda v, r=r: turan_number(v["k"] + 1, r), ("eps",),
                applies=lambda v, r=r: v[f"clique_free_{r + 1}"],
                description=f"K_{r + 1}-free: eps_k <= ex(k+1; K_{r + 1})"))
    if sig:
        theorems += _family_specs("signless_", "_q", clique_orders, False)
        conjectures += [
            BoundSpec("signless_brouwer", "conjecture",
                      lambda v: v["eps_q"], lambda v: v["k"] * (v["k"] + 1) / 2, ("eps_q",),
                      description="sum of k largest Q eigenvalues <= |E| + C(k+1,2)"),
            BoundSpec("signless_token", "conjecture",
                      lambda v: v["token_max_q"], lambda v: v["m"] + v["k"], ("token_max_q",),
                      description="lambda_1(Q(F_k)) <= |E| + k"),
        ]
    return theorems + conjectures


def required_clique_sizes(clique_orders: Sequence[int]) -> list[int]:
    return sorted({r + 1 for r in clique_orders})


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

STATUS_OK = "ok"
STATUS_TIGHT = "tight"
STATUS_VIOLATED = "violated"
STATUS_NA = "n/a"
STATUS_SKIPPED = "skipped: cap"


@dataclass
class BoundRecord:
    name: str
    bound_value: float | None
    lhs: float | None
    satisfied: bool | None
    slack: float | None
    status: str


def classify(slack: float, tol: float) -> str:
    if slack < -tol:
        return STATUS_VIOLATED
    if slack <= tol:
        return STATUS_TIGHT
    return STATUS_OK


def evaluate_spec(spec: BoundSpec, values: Mapping, tol: float) -> BoundRecord:
    if any(values.get(key) is None for key in spec.needs):
        return BoundRecord(spec.name, None, None, None, None, STATUS_SKIPPED)
    if spec.applies is not None and not spec.applies(values):
        return BoundRecord(spec.name, None, None, None, None, STATUS_NA)
    lhs = float(spec.lhs(values))
    bound = float(spec.bound(values))
    slack = bound - lhs
    return BoundRecord(spec.name, bound, lhs, bool(slack >= -tol), slack, classify(slack, tol))


@dataclass
class ExcessReport:
    graph_id: str
    n: int
    m: int
    k: int
    eps_k: float | None
    teps_k: float | None
    epsT_k: float | None
    max_induced_edges: int | None
    nu: int
    tau: int
    bipartite: bool
    eps_k_signless: float | None = None
    teps_k_signless: float | None = None
    epsT_k_signless: float | None = None
    bounds: list[BoundRecord] = field(default_factory=list)
    conjectures: list[BoundRecord] = field(default_factory=list)

    def records(self) -> list[BoundRecord]:
        return self.bounds + self.conjectures

    def record(self, name: str) -> BoundRecord:
        for rec in self.records():
            if rec.name == name:
                return rec
        raise KeyError(name)

    def violations(self, kind: str | None = None) -> list[BoundRecord]:
        pool = {"theorem": self.bounds, "conjecture": self.conjectures, None: self.records()}[kind]
        return [r for r in pool if r.status == STATUS_VIOLATED]

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    CSV_HEADER = ("graph_id", "n", "m", "k", "kind", "name", "lhs", "bound", "slack", "status")

    def csv_rows(self) -> list[tuple]:
        """One row per bound, columns as in ``CSV_HEADER``."""
        rows = []
        for kind, recs in (("theorem", self.bounds), ("conjecture", self.conjectures)):
            for r in recs:
                rows.append((self.graph_id, self.n, self.m, self.k, kind, r.name,
                             r.lhs, r.bound_value, r.slack, r.status))
        return rows


def excess_values(g: Graph, k: int, family: str = "laplacian",
                  clique_orders: Sequence[int] = DEFAULT_CLIQUE_ORDERS,
                  cap: int | None = None, invariants: Mapping | None = None) -> dict:
    """Every quantity the bound catalogue reads, for one graph and one k.

    Values that need a C(n, k) enumeration beyond the cap are ``None``.
    ``invariants`` may carry precomputed k-independent values (nu, tau, ...).
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    v = dict(invariants) if invariants is not None else graph_invariants(g, clique_orders)
    v.update(n=g.n, m=g.m, k=k)
    fits = within_cap(g.n, k, cap)
    v["max_induced"] = max_induced_edges(g, k, cap) if fits else None
    v["degree_top"] = top_degree_sum(g, k)
    v["conjugate_sum"] = conjugate_degree_sum(g, k)
    families = {"laplacian": ("",), "signless": ("_q",), "both": ("", "_q")}[family]
    for sfx in families:
        fam = "laplacian" if sfx == "" else "signless"
        spectrum = eigenvalues_sym(graph_matrix(g, fam))
        top = float(spectrum[:k].sum())
        v["lap_sum" if sfx == "" else "q_sum"] = top
        v["eps" + sfx] = top - g.m
        if fits:
            v["teps" + sfx] = teps_k(g, k, fam, cap)
            v["token_max" + sfx] = lambda_max(token_matrix(g, k, fam, cap))
            v["eps_token" + sfx] = v["token_max" + sfx] - g.m
        else:
            v["teps" + sfx] = v["token_max" + sfx] = v["eps_token" + sfx] = None
    return v


def graph_invariants(g: Graph, clique_orders: Sequence[int] = DEFAULT_CLIQUE_ORDERS) -> dict:
    """k-independent combinatorial values: nu, tau, bipartiteness, clique-freeness."""
    v = {
        "nu": matching_number(g),
        "tau": covering_number(g),
        "bipartite": is_bipartite(g) is not None,
    }
    for s in required_clique_sizes(clique_orders):
        v[f"clique_free_{s}"] = is_clique_free(g, s)
    return v


def evaluate_bounds(g: Graph, k: int, family: str = "laplacian",
                    clique_orders: Sequence[int] = DEFAULT_CLIQUE_ORDERS,
                    cap: int | None = None, tol: float | None = None,
                    strict: bool = True, graph_id: str | None = None,
                    invariants: Mapping | None = None) -> ExcessReport:
    """Evaluate every applicable bound for (g, k) and package the verdicts.

    With ``strict`` a theorem record below ``-tol`` raises
    :class:`TheoremViolationError`; conjecture violations are only reported.
    """
    tol = violation_tol(tol)
    values = excess_values(g, k, family, clique_orders, cap, invariants)
    report = ExcessReport(
        graph_id=graph_id if graph_id is not None else encode_graph6(g),
        n=g.n, m=g.m, k=k,
        eps_k=values.get("eps"), teps_k=values.get("teps"), epsT_k=values.get("eps_token"),
        max_induced_edges=values["max_induced"], nu=values["nu"], tau=values["tau"],
        bipartite=values["bipartite"],
        eps_k_signless=values.get("eps_q"), teps_k_signless=values.get("teps_q"),
        epsT_k_signless=values.get("eps_token_q"),
    )
    for spec in bound_specs(family, clique_orders):
        rec = evaluate_spec(spec, values, tol)
        (report.bounds if spec.kind == "theorem" else report.conjectures).append(rec)
    bad = report.violations("theorem")
    if strict and bad:
        detail = "; ".join(f"{r.name}: lhs={r.lhs!r} bound={r.bound_value!r} slack={r.slack!r}" for r in bad)
        raise TheoremViolationError(
            f"proved bound violated for graph {report.graph_id} (n={g.n}), k={k}: {detail}", bad)
    return report


# ---------------------------------------------------------------------------
# structural identities
# ---------------------------------------------------------------------------

def _excess_or_zero_order(g: Graph, i: int, which: str, family: str, cap) -> float:
    if which == "teps":
        return teps_k(g, i, family, cap)
    return eps_token_k(g, i, family, cap)


def verify_disjoint_union_formula(g1: Graph, g2: Graph, k: int, family: str = "laplacian",
                                  cap: int | None = None, tol: float = 1e-7) -> bool:
    """Check both excess(G1 u G2) = max_{i+j=k} excess_i(G1) + excess_j(G2) identities."""
    union = disjoint_union(g1, g2)
    if not 0 <= k <= union.n:
        raise ValueError(f"k={k} out of range for n={union.n}")
    for which in ("teps", "token"):
        whole = _excess_or_zero_order(union, k, which, family, cap)
        best = max(
            _excess_or_zero_order(g1, i, which, family, cap) + _excess_or_zero_order(g2, k - i, which, family, cap)
            for i in range(max(0, k - g2.n), min(k, g1.n) + 1)
        )
        if abs(whole - best) > tol:
            return False
    return True


def union_block_spectrum(g1: Graph, g2: Graph, k: int, family: str = "laplacian",
                         cap: int | None = None) -> np.ndarray:
    """Spectrum of M_k(G1 u G2) assembled from its Kronecker-sum blocks."""
    vals = np.concatenate([eigenvalues_sym(b) for _, _, b in m_k_block_union(g1, g2, k, family, cap)])
    return np.sort(vals)[::-1]


def random_edge_split(g: Graph, seed: int) -> tuple[Graph, Graph]:
    """Split E(g) into two spanning subgraphs with fair SplitMix64 coin flips."""
    rng = SplitMix64(seed)
    first = [e for e in g.edges if rng.random() < 0.5]
    rest = sorted(set(g.edges) - set(first))
    return spanning_subgraph(g, first), spanning_subgraph(g, rest)


def verify_subadditivity(g: Graph, split_seed: int, k: int, family: str = "laplacian",
                         cap: int | None = None, tol: float = 1e-7) -> bool:
    """Check subadditivity of teps_k and epsT_k on a random edge split and on star covers.

    The star-cover route decomposes g along a minimum vertex cover and checks
    excess(G) <= sum over star parts, with every star part at most sqrt(k)
    for teps and at most 1 for epsT.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    g1, g2 = random_edge_split(g, split_seed)
    parts = star_cover_decomposition(g, minimum_vertex_cover(g))
    for which, star_cap in (("teps", math.sqrt(k)), ("token", 1.0)):
        whole = _excess_or_zero_order(g, k, which, family, cap)
        split = _excess_or_zero_order(g1, k, which, family, cap) + _excess_or_zero_order(g2, k, which, family, cap)
        if whole > split + tol:
            return False
        per_star = [_excess_or_zero_order(p, k, which, family, cap) for p in parts]
        if any(x > star_cap + tol for x in per_star):
            return False
        if whole > sum(per_star) + tol:
            return False
    return True
