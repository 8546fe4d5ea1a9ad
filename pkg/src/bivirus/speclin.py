"""Spectral primitives for nonnegative and Metzler matrices.

Everything downstream (reproduction numbers, boundary-stability tests,
Jacobian classification) reduces to three questions about small dense
matrices: is the adjacency pattern strongly connected, what is the Perron
root of a nonnegative matrix, and what is the rightmost eigenvalue of a
Metzler matrix. This module answers them with deterministic power
iteration (fixed start vector, no randomness) plus a strongly-connected-
component fallback for reducible inputs.
"""

from __future__ import annotations

import math

import numpy as np
import scipy.sparse
from scipy.sparse import csgraph

from .exceptions import ConvergenceError, DomainError

DEFAULT_TOL = 1e-12
#: Half-width of the band around 0 inside which a spectral abscissa is
#: reported as sitting on the singular boundary.
CLASSIFY_BAND = 1e-9


# ---------------------------------------------------------------------------
# input checking

def as_square_matrix(A, what="matrix") -> np.ndarray:
    """Coerce to a float64 square 2-D array with finite entries."""
    M = np.asarray(A, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise DomainError(f"{what} must be square 2-D, got shape {M.shape}")
    if not np.isfinite(M).all():
        raise DomainError(f"{what} contains NaN or Inf entries")
    return M


def require_nonnegative(A, what="matrix") -> np.ndarray:
    M = as_square_matrix(A, what)
    if (M < 0).any():
        raise DomainError(f"{what} has negative entries")
    return M


def require_positive_diagonal(D, what="matrix") -> np.ndarray:
    """Positive diagonal matrix: off-diagonals exactly zero, diagonal > 0."""
    M = as_square_matrix(D, what)
    off = M - np.diag(np.diag(M))
    if np.any(off != 0.0):
        raise DomainError(f"{what} has nonzero off-diagonal entries")
    if (np.diag(M) <= 0).any():
        raise DomainError(f"{what} has nonpositive diagonal entries")
    return M


def is_metzler(M) -> bool:
    M = as_square_matrix(M)
    off = M - np.diag(np.diag(M))
    return bool((off >= 0).all())


def require_metzler(M, what="matrix") -> np.ndarray:
    M = as_square_matrix(M, what)
    if not is_metzler(M):
        raise DomainError(f"{what} is not Metzler (negative off-diagonal)")
    return M


# ---------------------------------------------------------------------------
# graph structure

def is_irreducible(A) -> bool:
    """True iff the directed graph with an edge j -> i whenever A[i, j] > 0
    is strongly connected.  A 1x1 matrix counts as irreducible."""
    M = require_nonnegative(A)
    n = M.shape[0]
    if n == 1:
        return True
    pattern = scipy.sparse.csr_matrix(M > 0)
    ncomp, _ = csgraph.connected_components(pattern, directed=True,
                                            connection="strong")
    return ncomp == 1


def strongly_connected_components(A) -> list[np.ndarray]:
    """Index sets of the strongly connected components of the pattern of A
    (same edge convention as `is_irreducible`)."""
    M = as_square_matrix(A)
    pattern = scipy.sparse.csr_matrix(M != 0)
    ncomp, labels = csgraph.connected_components(pattern, directed=True,
                                                 connection="strong")
    return [np.flatnonzero(labels == k) for k in range(ncomp)]


# ---------------------------------------------------------------------------
# power iteration core

def _iteration_cap(n, tol):
    return max(200, int(100 * n * math.log(1.0 / tol)))


def _power_iteration(A, tol):
    """Dominant eigenpair of a nonnegative matrix by shifted power iteration.

    Iterates on A + sigma*I (sigma > 0 makes any irreducible nonnegative
    matrix primitive, so the iteration cannot stall on a periodic pattern);
    the Perron root of A is recovered through rho(A + sigma*I) = rho(A) +
    sigma.  Start vector is (1/n)*ones, which is never orthogonal to the
    Perron direction.  Stops once the Rayleigh-quotient estimate lambda
    satisfies ||A v - lambda v||_inf <= tol * lambda.
    """
    n = A.shape[0]
    if n == 1:
        return float(A[0, 0]), np.ones(1)
    amax = float(A.max())
    if amax == 0.0:
        return 0.0, np.full(n, 1.0 / n)
    sigma = 0.5 * amax
    As = A + sigma * np.eye(n)
    v = np.full(n, 1.0 / n)
    lam = 0.0
    cap = _iteration_cap(n, tol)
    for _ in range(cap):
        w = As @ v
        theta = float(v @ w) / float(v @ v)
        lam = theta - sigma
        resid = float(np.max(np.abs(w - theta * v)))
        if resid <= tol * max(lam, amax * 1e-15):
            v = w / np.sum(w)
            return lam, v
        v = w / np.sum(w)
    raise ConvergenceError(
        f"power iteration did not converge in {cap} iterations",
        estimate=lam, iterate=v)


def spectral_radius(A, tol: float = DEFAULT_TOL) -> float:
    """Perron root of a nonnegative irreducible matrix, to relative `tol`."""
    M = require_nonnegative(A)
    if not is_irreducible(M):
        raise DomainError("spectral_radius requires an irreducible matrix")
    lam, _ = _power_iteration(M, tol)
    return lam


def perron_vector(A, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Strictly positive right eigenvector of the Perron root, unit 1-norm.

    Satisfies ||A v - rho(A) v||_inf <= tol * rho(A) at return.
    """
    M = require_nonnegative(A)
    if not is_irreducible(M):
        raise DomainError("perron_vector requires an irreducible matrix")
    lam, v = _power_iteration(M, tol)
    v = v / np.sum(v)
    if (v <= 0).any():
        raise ConvergenceError("Perron vector has nonpositive entries "
                               "(iteration not converged)",
                               estimate=lam, iterate=v)
    return v


def spectral_abscissa(M, tol: float = DEFAULT_TOL) -> float:
    """Largest real part among eigenvalues of a Metzler matrix.

    Uses s(M) = rho(M + c I) - c with c = 1 + max |M_ii|, which turns the
    problem into a nonnegative Perron computation.  Reducible matrices
    (block-triangular Jacobians at boundary equilibria) are handled by
    condensing into strongly connected components and taking the maximum
    over the per-component abscissas.
    """
    A = require_metzler(M, "spectral_abscissa input")
    n = A.shape[0]
    c = 1.0 + float(np.max(np.abs(np.diag(A)))) if n else 1.0
    comps = strongly_connected_components(A)
    best = -math.inf
    for idx in comps:
        sub = A[np.ix_(idx, idx)]
        shifted = sub + c * np.eye(len(idx))
        lam, _ = _power_iteration(shifted, tol)
        best = max(best, lam - c)
    return best


def classify_abscissa(s: float, tol: float = CLASSIFY_BAND) -> str:
    """Map a spectral abscissa to {hurwitz, singular_boundary, unstable}."""
    if s < -tol:
        return "hurwitz"
    if s > tol:
        return "unstable"
    return "singular_boundary"


def classify_metzler(M, tol: float = CLASSIFY_BAND) -> str:
    """Stability class of a Metzler matrix, with a +-tol band around zero
    reported as `singular_boundary` (lines of equilibria sit exactly there).
    """
    return classify_abscissa(spectral_abscissa(M, DEFAULT_TOL), tol)
