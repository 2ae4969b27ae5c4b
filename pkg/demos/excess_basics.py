"""
Three excesses of a small graph
===============================

eps_k adds up the k largest Laplacian eigenvalues and subtracts the edge
count. teps_k does the same with the top eigenvalue of M_k, and epsT_k with
the top eigenvalue of the token graph Laplacian.
"""

import numpy as np

from brouwer_excess import complete, eps_k, eps_token_k, laplacian, matching_graph, star, teps_k
from brouwer_excess.spectral import eigenvalues_sym

# The triangle: spectrum 3, 3, 0.  Two eigenvalues give 6, minus 3 edges.
print(eigenvalues_sym(laplacian(complete(3))))
print("eps_2(K_3) =", eps_k(complete(3), 2), " vs C(3,2) =", 3)

# Stars: the M_k excess never climbs past sqrt(k), the token excess sits at 1
for n in (4, 6, 8):
    row = [f"{teps_k(star(n), k):.3f}/{np.sqrt(k):.3f}" for k in range(1, n)]
    print(f"star({n}) teps/sqrt(k):", " ".join(row))
    print(f"star({n}) epsT:", [round(eps_token_k(star(n), k), 9) for k in range(1, n)])

# A perfect matching on 2t vertices: all three excesses at k <= t equal 2k - t
t = 4
g = matching_graph(t, 0)
for k in range(1, t + 1):
    print(k, eps_k(g, k), round(teps_k(g, k), 9), round(eps_token_k(g, k), 9), 2 * k - t)
