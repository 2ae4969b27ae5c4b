"""
Additive compounds and the matrix M_k
=====================================

The k-th additive compound of a symmetric matrix has every sum of k distinct
eigenvalues as an eigenvalue.  Subtracting the diagonal of induced edge counts
from the compound of L(G) gives M_k(G), whose entries are small integers.
"""

from itertools import combinations

import numpy as np

from brouwer_excess import additive_compound, cycle, m_k_direct
from brouwer_excess.compound import diag_perturbation
from brouwer_excess.spectral import eigenvalues_sym, laplacian

rng = np.random.default_rng(0)
a = rng.normal(size=(5, 5))
a = a + a.T
w = eigenvalues_sym(a)
sums = sorted((w[list(c)].sum() for c in combinations(range(5), 2)), reverse=True)
print(np.allclose(eigenvalues_sym(additive_compound(a, 2).matrix), sums))

# M_2 of the 5-cycle, two ways
g = cycle(5)
direct = m_k_direct(g, 2)
via = additive_compound(laplacian(g), 2).matrix - diag_perturbation(g, 2).matrix
print(np.array_equal(direct.matrix, via))
for s, row in zip(direct.indexer.subsets, direct.matrix.astype(int)):
    print(s, row)

# The top of its spectrum, minus |E|, is teps_2
print("teps_2(C_5) =", eigenvalues_sym(direct.matrix)[0] - g.m)
