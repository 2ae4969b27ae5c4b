"""
Token graphs
============

F_k(G) has one vertex per k-subset of V; two subsets are joined when they
differ by an edge of G.  Think of k indistinguishable tokens sliding along
edges.
"""

import numpy as np

from brouwer_excess import format_edge_list, path, star, token_graph, token_laplacian
from brouwer_excess.spectral import eigenvalues_sym

t = token_graph(path(3), 2)
print(t.indexer.subsets)
print(format_edge_list(t.graph))

# Two tokens on a 5-vertex star: the subdivision of K_4.  Its top Laplacian
# eigenvalue is 5, one more than the edge count of the star.
lap = token_laplacian(star(5), 2)
print(eigenvalues_sym(lap)[:3])

# F_k and F_{n-k} are isomorphic (swap tokens and holes)
for k in range(6):
    print(k, np.round(eigenvalues_sym(token_laplacian(star(6), k))[0], 9))
