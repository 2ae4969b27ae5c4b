"""Laplacian matrices, the symmetric eigensolver contract, Kronecker sums.

Matrices are plain ``float64`` numpy arrays.  Spectra are 1-d arrays sorted
in non-increasing order, ties kept.
"""
from __future__ import annotations

import numpy as np

from .errors import EigenSolverError
from .graphs import Graph

FAMILIES = ("laplacian", "signless")


def laplacian(g: Graph) -> np.ndarray:
    """L(G): degrees on the diagonal, -1 for every edge."""
    out = np.zeros((g.n, g.n))
    for u, v in g.edges:
        out[u, v] = out[v, u] = -1.0
        out[u, u] += 1.0
        out[v, v] += 1.0
    return out


def signless_laplacian(g: Graph) -> np.ndarray:
    """Q(G): degrees on the diagonal, +1 for every edge."""
    out = np.zeros((g.n, g.n))
    for u, v in g.edges:
        out[u, v] = out[v, u] = 1.0
        out[u, u] += 1.0
        out[v, v] += 1.0
    return out


def graph_matrix(g: Graph, family: str = "laplacian") -> np.ndarray:
    if family == "laplacian":
        return laplacian(g)
    if family == "signless":
        return signless_laplacian(g)
    raise ValueError(f"unknown matrix family {family!r}")


def spectral_atol(m: np.ndarray) -> float:
    """Accuracy promised by :func:`eigenvalues_sym` for this matrix."""
    dim = m.shape[0]
    scale = float(np.abs(m).max()) if m.size else 0.0
    return 1e-9 * max(1.0, scale * dim)


def _check_symmetric(m: np.ndarray):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not exactly symmetric")


def eigenvalues_sym(m: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, largest first."""
    m = np.asarray(m, dtype=float)
    _check_symmetric(m)
    if m.shape[0] == 0:
        return np.zeros(0)
    try:
        w = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(str(exc)) from exc
    return w[::-1].copy()


def batch_eigenvalues(stack: np.ndarray) -> np.ndarray:
    """Eigenvalues of a stack of symmetric matrices, each row largest first."""
    try:
        w = np.linalg.eigvalsh(stack)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(str(exc)) from exc
    return w[..., ::-1]


def lambda_max(m: np.ndarray) -> float:
    """Largest eigenvalue."""
    return float(eigenvalues_sym(m)[0])


def top_k_sum(m: np.ndarray, k: int) -> float:
    """Sum of the k largest eigenvalues."""
    dim = np.shape(m)[0]
    if not 1 <= k <= dim:
        raise ValueError(f"k={k} out of range for dimension {dim}")
    return float(eigenvalues_sym(m)[:k].sum())


def kronecker_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """A (+) B = A (x) I + I (x) B; block (i, j) is a[i, j] * I, plus b on the diagonal."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.kron(a, np.eye(b.shape[0])) + np.kron(np.eye(a.shape[0]), b)
