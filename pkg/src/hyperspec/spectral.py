"""Matrices of a hypergraph and its alpha-spectral radius.

``A`` counts, for each vertex pair, the edges containing both; ``D`` is
the diagonal of row sums of ``A``.  For ``0 <= alpha < 1`` the matrix
``A_alpha = alpha*D + (1-alpha)*A`` is nonnegative and symmetric, and its
largest eigenvalue is computed by shifted power iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import AlphaOutOfRange, NoConvergence, ZeroVector
from .hypergraph import Hypergraph

DEFAULT_TOL = 1e-10
MAX_ITERATIONS = 10**6


def _check_alpha(alpha):
    if not (0.0 <= alpha < 1.0):
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")


def adjacency_matrix(hg: Hypergraph) -> np.ndarray:
    A = np.zeros((hg.n, hg.n))
    for e in hg.edges:
        idx = np.array(e)
        A[np.ix_(idx, idx)] += 1.0
    np.fill_diagonal(A, 0.0)
    return A


def row_sum_matrix(hg: Hypergraph) -> np.ndarray:
    """``D(G)``: diagonal matrix of adjacency row sums."""
    return np.diag(np.asarray(hg.row_sums, dtype=float))


def degree_matrix(hg: Hypergraph) -> np.ndarray:
    return np.diag(np.asarray(hg.degrees, dtype=float))


def signless_laplacian(hg: Hypergraph) -> np.ndarray:
    return row_sum_matrix(hg) + adjacency_matrix(hg)


def laplacian(hg: Hypergraph) -> np.ndarray:
    return row_sum_matrix(hg) - adjacency_matrix(hg)


def alpha_matrix(hg: Hypergraph, alpha: float) -> np.ndarray:
    _check_alpha(alpha)
    return alpha * row_sum_matrix(hg) + (1.0 - alpha) * adjacency_matrix(hg)


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    vector: np.ndarray
    residual: float
    iterations: int
    alpha: float


def _power_iteration(M, tol, max_iter):
    n = M.shape[0]
    if n == 1:
        return float(M[0, 0]), np.ones(1), 0.0, 0
    shift = float(np.max(np.abs(M).sum(axis=1))) + 1.0
    # The requested tolerance is floored at what double rounding allows for this scale.
    tol = max(tol, 64 * np.finfo(float).eps * shift * n)
    x = np.full(n, 1.0 / math.sqrt(n))
    for it in range(1, max_iter + 1):
        y = M @ x
        rho = float(x @ y)
        res = float(np.max(np.abs(y - rho * x)))
        if res < tol:
            return rho, x, res, it
        x = y + shift * x
        x /= np.linalg.norm(x)
    raise NoConvergence(f"power iteration did not reach residual {tol:g} in {max_iter} steps")


def spectral_radius(hg: Hypergraph, alpha: float = 0.0, tol: float = DEFAULT_TOL,
                    max_iter: int = MAX_ITERATIONS) -> SpectralResult:
    """Largest eigenvalue of ``A_alpha(hg)`` with its unit Perron vector.

    Disconnected inputs are solved per component; the returned vector is
    supported on the component attaining the maximum.
    """
    _check_alpha(alpha)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if hg.n == 0:
        raise ValueError("spectral radius of the empty hypergraph is undefined")
    M = alpha_matrix(hg, alpha)
    best = None
    total_iters = 0
    for comp in hg.components:
        idx = np.array(comp)
        rho, x, res, it = _power_iteration(M[np.ix_(idx, idx)], tol, max_iter)
        total_iters += it
        if best is None or rho > best[0]:
            best = (rho, idx, x, res)
    rho, idx, x, res = best
    vec = np.zeros(hg.n)
    vec[idx] = np.abs(x) if len(hg.components) > 1 else x
    residual = float(np.max(np.abs(M @ vec - rho * vec)))
    return SpectralResult(rho=rho, vector=vec, residual=residual, iterations=total_iters, alpha=alpha)


def rho(hg: Hypergraph, alpha: float = 0.0, tol: float = DEFAULT_TOL) -> float:
    """Shorthand for ``spectral_radius(hg, alpha, tol).rho``."""
    return spectral_radius(hg, alpha, tol).rho


def rayleigh_quotient(hg: Hypergraph, alpha: float, x) -> float:
    """``x^T A_alpha x / x^T x`` evaluated as a sum over vertex pairs."""
    _check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    if x.shape != (hg.n,):
        raise ValueError(f"vector length {x.shape} does not match n={hg.n}")
    norm2 = float(x @ x)
    if norm2 == 0.0:
        raise ZeroVector("Rayleigh quotient of the zero vector")
    A = adjacency_matrix(hg)
    total = 0.0
    for u, v in combinations(range(hg.n), 2):
        a = A[u, v]
        if a:
            total += a * (alpha * (x[u] ** 2 + x[v] ** 2) + 2.0 * (1.0 - alpha) * x[u] * x[v])
    return total / norm2


def eigen_equation_residual(hg: Hypergraph, alpha: float, rho: float, x) -> float:
    """``max_u |rho*x_u - sum_v a_uv (alpha*x_u + (1-alpha)*x_v)|``."""
    _check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    A = adjacency_matrix(hg)
    worst = 0.0
    for u in range(hg.n):
        s = 0.0
        for v in np.nonzero(A[u])[0]:
            s += A[u, v] * (alpha * x[u] + (1.0 - alpha) * x[v])
        worst = max(worst, abs(rho * x[u] - s))
    return worst


def closed_form_rho(spec, alpha: float) -> float | None:
    """Exact alpha-spectral radius for families that have a known formula.

    Covers uniform hyperstars, complete (uniform) hypergraphs, ordinary
    cycles and uniform loose cycles; other families return ``None``.
    """
    _check_alpha(alpha)
    tag, p = spec.tag, spec.params
    if tag in ("S_nk", "S_n"):
        n = p["n"]
        k = p.get("k", 2)
        if n == 1:
            return 0.0
        b = n * alpha + k - 2
        return (b + math.sqrt(b * b - 4 * (n - 1) * (k * alpha - 1))) / 2
    if tag == "K_nk":
        n, k = p["n"], p["k"]
        return float(math.comb(n - 2, k - 2) * (n - 1))
    if tag == "K_n":
        return float(p["n"] - 1)
    if tag == "S_m_n" and p["m"] == 1:
        return float(p["n"] - 1)
    if tag == "C_n":
        return 2.0
    if tag == "C_nk":
        k = p["k"]
        if k == 2:
            return 2.0
        return _loose_cycle_rho(k, alpha)
    if tag == "Ck_g_a" and p["a"] == 0:
        k = p["k"]
        return 2.0 if k == 2 else _loose_cycle_rho(k, alpha)
    return None


def _loose_cycle_rho(k, alpha):
    # Perron vector is constant on the shared vertices (value a) and on the
    # degree-one vertices (value b); this gives a 2x2 quotient eigenproblem.
    q11 = 2 * alpha * (k - 1) + 2 * (1 - alpha)
    q12 = 2 * (1 - alpha) * (k - 2)
    q21 = 2 * (1 - alpha)
    q22 = alpha * (k - 1) + (1 - alpha) * (k - 3)
    tr = q11 + q22
    det = q11 * q22 - q12 * q21
    return (tr + math.sqrt(tr * tr - 4 * det)) / 2


def write_matrix_market(path, matrix: np.ndarray, comment: str = "") -> None:
    """Write ``matrix`` in MatrixMarket coordinate format."""
    from scipy.io import mmwrite
    from scipy.sparse import coo_matrix

    mat = coo_matrix(matrix)
    field = "integer" if np.all(matrix == np.round(matrix)) else "real"
    mmwrite(path, mat, comment=comment, field=field, symmetry="symmetric")
