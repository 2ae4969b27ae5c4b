"""Exhaustive, sampled and file-driven searches over the bound catalogue.

A search streams graphs grouped by vertex count, evaluates every bound for
every requested k, and reduces the results to a :class:`SearchSummary`:
worst slack per bound (with the graph that attains it), counts of tight and
violated cases, and the list of violations.  Reductions are min/sum over a
deterministic stream, so a given :class:`SearchConfig` always produces the
same summary and the same CSV bytes.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import asdict, dataclass, field
from math import comb
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from . import batch
from .config import violation_tol
from .errors import GraphFormatError
from .excess import (
    DEFAULT_CLIQUE_ORDERS, STATUS_VIOLATED, BoundSpec, bound_specs, evaluate_bounds,
    excess_values, graph_invariants,
)
from .graphs import Graph, SplitMix64, decode_graph6, encode_graph6, erdos_renyi, parse_edge_list

log = logging.getLogger(__name__)

MODES = ("exhaustive", "sample", "file")
EXHAUSTIVE_LIMIT = 7


@dataclass
class SearchConfig:
    mode: str = "exhaustive"
    n: Sequence[int] = (4,)
    k: Sequence[int] | None = None  # None means 1..n for every n
    count: int = 100
    p: float = 0.5
    seed: int = 0
    input_path: str | None = None
    cap: int | None = None
    tol: float | None = None
    family: str = "laplacian"
    clique_orders: Sequence[int] = DEFAULT_CLIQUE_ORDERS
    allow_large: bool = False

    def validate(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.family not in ("laplacian", "signless", "both"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.mode == "file":
            if not self.input_path:
                raise ValueError("file mode needs an input path")
            return
        if not self.n:
            raise ValueError("no vertex counts given")
        for n in self.n:
            if n < 1:
                raise ValueError(f"n must be positive, got {n}")
            if self.mode == "exhaustive" and n > EXHAUSTIVE_LIMIT and not self.allow_large:
                raise ValueError(f"exhaustive search over n={n} needs allow_large "
                                 f"(limit {EXHAUSTIVE_LIMIT})")
        if self.k is not None and any(k < 1 for k in self.k):
            raise ValueError("k values must be >= 1")
        if self.mode == "sample":
            if self.count < 0:
                raise ValueError("count must be non-negative")
            if not 0.0 <= self.p <= 1.0:
                raise ValueError("p must lie in [0, 1]")

    def ks_for(self, n: int) -> list[int]:
        if self.k is None:
            return list(range(1, n + 1))
        return [k for k in self.k if 1 <= k <= n]


@dataclass
class BoundSummary:
    name: str
    kind: str
    evaluated: int = 0
    not_applicable: int = 0
    skipped: int = 0
    tight: int = 0
    violations: int = 0
    worst_slack: float | None = None
    worst_graph: str | None = None
    worst_k: int | None = None
    worst_lhs: float | None = None
    worst_bound: float | None = None


@dataclass
class SearchSummary:
    graphs_processed: int = 0
    pairs_evaluated: int = 0
    bounds: list[BoundSummary] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    # empirical max of teps_k / sqrt(k) over the corpus, with its witness
    teps_ratio_max: float | None = None
    teps_ratio_graph: str | None = None
    teps_ratio_k: int | None = None

    def bound(self, name: str) -> BoundSummary:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    def theorem_violations(self) -> list[dict]:
        return [v for v in self.violations if v["kind"] == "theorem" and v["confirmed"]]

    def conjecture_violations(self) -> list[dict]:
        return [v for v in self.violations if v["kind"] == "conjecture" and v["confirmed"]]

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


# ---------------------------------------------------------------------------
# graph streams
# ---------------------------------------------------------------------------

def read_graph_file(path: str | Path) -> list[Graph]:
    """Graphs from an edge-list file (one graph) or a graph6 file (one per line)."""
    text = Path(path).read_text()
    content = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    content = [ln for ln in content if ln]
    if not content:
        raise GraphFormatError(f"{path}: no graphs found")
    first = content[0].split()
    if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
        return [parse_edge_list(text)]
    return [decode_graph6(ln) for ln in content]


def sample_seeds(seed: int, count: int) -> list[int]:
    rng = SplitMix64(seed)
    return [rng.next_u64() for _ in range(count)]


def graph_groups(config: SearchConfig) -> Iterator[tuple[int, np.ndarray | list[Graph]]]:
    """Yield (n, masks) groups, or (n, graphs) when masks would not fit in int64."""
    if config.mode == "exhaustive":
        for n in config.n:
            total = 1 << comb(n, 2)
            step = batch.chunk_size(n, config.ks_for(n))
            for start in range(0, total, step):
                yield n, np.arange(start, min(total, start + step), dtype=np.int64)
    elif config.mode == "sample":
        for n in config.n:
            graphs = [erdos_renyi(n, config.p, s) for s in sample_seeds(config.seed + n, config.count)]
            yield from _group_graphs(n, graphs, config)
    else:
        graphs = read_graph_file(config.input_path)
        by_n: dict[int, list[Graph]] = {}
        for g in graphs:
            by_n.setdefault(g.n, []).append(g)
        for n in sorted(by_n):
            yield from _group_graphs(n, by_n[n], config)


def _group_graphs(n, graphs, config):
    if batch.batch_supported(n, config.ks_for(n), config.cap):
        step = batch.chunk_size(n, config.ks_for(n))
        masks = np.array([g.mask for g in graphs], dtype=np.int64)
        for start in range(0, len(masks), step):
            yield n, masks[start:start + step]
    else:
        yield n, graphs


# ---------------------------------------------------------------------------
# the search loop
# ---------------------------------------------------------------------------

def csv_header(specs: Sequence[BoundSpec]) -> list[str]:
    cols = ["graph6", "n", "m", "k", "eps_k", "teps_k", "epsT_k"]
    for s in specs:
        cols += [f"{s.name}_lhs", f"{s.name}_bound", f"{s.name}_slack"]
    return cols


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if x.is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


class _Aggregator:
    def __init__(self, specs, tol, want_rows):
        self.specs = specs
        self.tol = tol
        self.summary = SearchSummary(bounds=[BoundSummary(s.name, s.kind) for s in specs])
        self.rows = [] if want_rows else None

    def add(self, ids, values, k):
        """Fold one k-slice of values (arrays over the graphs ``ids``) into the summary."""
        count = len(ids)
        if count == 0:
            return
        self.summary.pairs_evaluated += count
        per_spec = []
        for spec, acc in zip(self.specs, self.summary.bounds):
            if any(values.get(key) is None for key in spec.needs):
                acc.skipped += count
                per_spec.append(None)
                continue
            lhs = np.broadcast_to(np.asarray(spec.lhs(values), dtype=float), (count,))
            bound = np.broadcast_to(np.asarray(spec.bound(values), dtype=float), (count,))
            ok = np.ones(count, bool) if spec.applies is None else \
                np.broadcast_to(np.asarray(spec.applies(values), dtype=bool), (count,))
            slack = bound - lhs
            acc.not_applicable += int((~ok).sum())
            acc.evaluated += int(ok.sum())
            if ok.any():
                masked = np.where(ok, slack, np.inf)
                acc.tight += int((ok & (np.abs(slack) <= self.tol)).sum())
                bad = np.flatnonzero(ok & (slack < -self.tol))
                acc.violations += len(bad)
                for i in bad:
                    self.summary.violations.append(dict(
                        graph6=ids[i], k=k, name=spec.name, kind=spec.kind,
                        lhs=float(lhs[i]), bound=float(bound[i]), slack=float(slack[i]), confirmed=True))
                i = int(np.argmin(masked))
                if acc.worst_slack is None or masked[i] < acc.worst_slack:
                    acc.worst_slack = float(masked[i])
                    acc.worst_graph = ids[i]
                    acc.worst_k = k
                    acc.worst_lhs = float(lhs[i])
                    acc.worst_bound = float(bound[i])
            per_spec.append((lhs, bound, slack, ok))

        teps = values.get("teps")
        if teps is not None:
            ratio = np.asarray(teps, dtype=float) / math.sqrt(k)
            i = int(np.argmax(ratio))
            s = self.summary
            if s.teps_ratio_max is None or ratio[i] > s.teps_ratio_max:
                s.teps_ratio_max, s.teps_ratio_graph, s.teps_ratio_k = float(ratio[i]), ids[i], k

        if self.rows is not None:
            col = lambda key: None if values.get(key) is None else np.broadcast_to(values[key], (count,))
            eps, teps, epst = col("eps"), col("teps"), col("eps_token")
            for i in range(count):
                row = [ids[i], values["n"], values["m"][i], k,
                       None if eps is None else eps[i], None if teps is None else teps[i],
                       None if epst is None else epst[i]]
                for item in per_spec:
                    if item is None or not item[3][i]:
                        row += [None, None, None]
                    else:
                        row += [item[0][i], item[1][i], item[2][i]]
                self.rows.append((ids[i], k, [_fmt(x) for x in row]))


class _MaskIds:
    """graph6 strings for a mask array, encoded only when looked up."""

    def __init__(self, n, masks):
        self.n = n
        self.masks = masks

    def __len__(self):
        return len(self.masks)

    def __getitem__(self, i):
        return encode_graph6(Graph.from_mask(self.n, int(self.masks[i])))


def _values_from_graphs(graphs, k, config):
    """Per-graph route, stacked into the same array layout the batch route gives."""
    per = []
    for g in graphs:
        inv = graph_invariants(g, config.clique_orders)
        per.append(excess_values(g, k, config.family, config.clique_orders, config.cap, inv))
    out = {}
    for key in per[0]:
        col = [p[key] for p in per]
        out[key] = None if any(c is None for c in col) else np.array(col)
    out["n"], out["k"] = per[0]["n"], k
    return out


def run_search(config: SearchConfig, want_rows: bool = False,
               progress_every: int = 0) -> tuple[SearchSummary, list[list[str]] | None]:
    """Run a search.  Returns the summary and, if requested, CSV rows in stream order."""
    config.validate()
    tol = violation_tol(config.tol)
    specs = bound_specs(config.family, config.clique_orders)
    agg = _Aggregator(specs, tol, want_rows)
    for n, group in graph_groups(config):
        ks = config.ks_for(n)
        if isinstance(group, np.ndarray):
            ids = _MaskIds(n, group)
            gv = batch.batch_graph_values(n, group, config.family, config.clique_orders)
            for k in ks:
                agg.add(ids, batch.batch_order_values(n, k, gv, config.family, config.cap), k)
            agg.summary.graphs_processed += len(group)
        else:
            ids = [encode_graph6(g) for g in group]
            for k in ks:
                agg.add(ids, _values_from_graphs(group, k, config), k)
            agg.summary.graphs_processed += len(group)
        if progress_every and agg.summary.graphs_processed % progress_every < len(group):
            log.info("processed %d graphs", agg.summary.graphs_processed)
    _recheck(agg.summary, config, tol)
    rows = None
    if want_rows:
        rows = [csv_header(specs)] + [r for _, _, r in agg.rows]
    return agg.summary, rows


def _recheck(summary: SearchSummary, config: SearchConfig, tol: float):
    """Re-evaluate each violation through the per-graph constructions."""
    for v in summary.violations:
        g = decode_graph6(v["graph6"])
        report = evaluate_bounds(g, v["k"], config.family, config.clique_orders,
                                 config.cap, tol, strict=False, graph_id=v["graph6"])
        rec = report.record(v["name"])
        v["confirmed"] = rec.status == STATUS_VIOLATED
        v["recheck_slack"] = rec.slack


def rows_to_csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()
