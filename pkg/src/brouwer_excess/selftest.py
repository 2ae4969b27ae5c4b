"""Quick property checks bundled with the library (``brouwer-excess selftest``).

These are small-scale versions of the identities the test suite checks in
full, meant as a smoke test of an installed copy.
"""
from __future__ import annotations

import math
from itertools import combinations
from typing import Callable

import numpy as np

from .compound import additive_compound, diag_perturbation, m_k_direct
from .excess import eps_k, eps_token_k, teps_k, teps_star_closed_form, verify_disjoint_union_formula
from .graphs import Graph, complete, erdos_renyi, matching_graph, pair_list, star
from .spectral import eigenvalues_sym, laplacian
from .token import token_graph, token_laplacian


def check_compound_spectrum() -> bool:
    rng = np.random.default_rng(7)
    for _ in range(20):
        dim = int(rng.integers(2, 6))
        a = rng.uniform(-5, 5, (dim, dim))
        a = a + a.T
        base = eigenvalues_sym(a)
        for k in range(1, dim + 1):
            sums = np.sort([base[list(c)].sum() for c in combinations(range(dim), k)])
            got = np.sort(eigenvalues_sym(additive_compound(a, k).matrix))
            if np.max(np.abs(sums - got)) >= 1e-7:
                return False
    return True


def check_m_k_identity() -> bool:
    for mask in range(1 << len(pair_list(4))):
        g = Graph.from_mask(4, mask)
        for k in range(1, 5):
            direct = m_k_direct(g, k).matrix
            other = additive_compound(laplacian(g), k).matrix - diag_perturbation(g, k).matrix
            if not np.array_equal(direct, other):
                return False
    return True


def check_star_closed_form() -> bool:
    return all(abs(teps_k(star(n), k) - teps_star_closed_form(n, k)) < 1e-8
               for n in range(2, 8) for k in range(1, n + 1))


def check_matchings() -> bool:
    for t in range(1, 4):
        for iso in range(3):
            g = matching_graph(t, iso)
            for k in range(1, t + 1):
                if abs(teps_k(g, k) - (2 * k - t)) > 1e-8 or abs(eps_token_k(g, k) - (2 * k - t)) > 1e-8:
                    return False
    return True


def check_token_star() -> bool:
    # F_n(S_n) is a single vertex, so k = n is excluded
    return all(abs(eps_token_k(star(n), k) - 1) < 1e-8 for n in range(2, 8) for k in range(1, n))


def check_token_laplacian() -> bool:
    for seed in range(10):
        g = erdos_renyi(6, 0.5, seed)
        for k in range(0, 7):
            if not np.array_equal(token_laplacian(g, k), laplacian(token_graph(g, k).graph)):
                return False
    return True


def check_union_formula() -> bool:
    pairs = [(complete(2), complete(2)), (star(3), complete(3)), (erdos_renyi(4, 0.6, 1), star(3))]
    return all(verify_disjoint_union_formula(a, b, k) for a, b in pairs for k in range(a.n + b.n + 1))


def check_k1_agreement() -> bool:
    for seed in range(10):
        g = erdos_renyi(6, 0.4, seed)
        a, b, c = eps_k(g, 1), teps_k(g, 1), eps_token_k(g, 1)
        if max(abs(a - b), abs(a - c)) > 1e-8:
            return False
    return math.isclose(teps_k(star(5), 4), 2.0, abs_tol=1e-8)


CHECKS: dict[str, Callable[[], bool]] = {
    "compound spectrum = k-sums": check_compound_spectrum,
    "M_k direct = compound - D_k (n=4)": check_m_k_identity,
    "star closed form": check_star_closed_form,
    "matching excess = 2k - t": check_matchings,
    "token star excess = 1": check_token_star,
    "token Laplacian direct = via graph": check_token_laplacian,
    "disjoint union max formula": check_union_formula,
    "k=1 excesses agree": check_k1_agreement,
}


def run_selftest(out=print) -> bool:
    ok = True
    for name, fn in CHECKS.items():
        passed = fn()
        ok &= passed
        out(f"{'PASS' if passed else 'FAIL'}  {name}")
    return ok
