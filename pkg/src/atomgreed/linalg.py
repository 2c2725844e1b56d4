"""Dense linear-algebra kernels shared by the whole package.

Vectors are 1-D float64 numpy arrays; matrices are 2-D.  Orthonormal bases
are stored column-wise, so a basis ``Q`` of a k-dimensional subspace of
R^n is an (n, k) array with ``Q.T @ Q == I_k``.  Everything here is a pure
function of its inputs and safe to call concurrently.
"""

from __future__ import annotations

import numpy as np

RANK_TOL = 1e-10
LSQ_CUTOFF = 1e-12


class SvdError(RuntimeError):
    """SVD failed to converge (numerically pathological input)."""


def as_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


def as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def orthonormalize(vectors, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis of span(vectors) via modified Gram-Schmidt.

    A second projection pass is applied to each accepted vector, which keeps
    ``Q.T @ Q`` within ~10*tol of the identity even for badly correlated
    inputs.  Vectors whose residual after projection falls below ``tol``
    are dropped, so the output has full column rank.

    Args:
        vectors: iterable of equal-length 1-D arrays, or an (n, k) array of
            columns.
        tol: rank / drop tolerance, > 0.

    Returns:
        (n, r) array whose columns form an orthonormal basis, r <= k.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    cols = [as_vector(v) for v in (vectors.T if isinstance(vectors, np.ndarray) else vectors)]
    if not cols:
        return np.zeros((0, 0))
    n = cols[0].size
    basis: list[np.ndarray] = []
    for v in cols:
        if v.size != n:
            raise ValueError("dimension mismatch among input vectors")
        w = v.copy()
        for q in basis:
            w -= np.dot(q, w) * q
        # reorthogonalization pass for stability
        for q in basis:
            w -= np.dot(q, w) * q
        norm = np.linalg.norm(w)
        if norm >= tol:
            basis.append(w / norm)
    if not basis:
        return np.zeros((n, 0))
    return np.column_stack(basis)


def project(v, basis: np.ndarray) -> np.ndarray:
    """Orthogonal projection of ``v`` onto the span of an orthonormal basis."""
    v = as_vector(v)
    if basis.size == 0:
        return np.zeros_like(v)
    if basis.shape[0] != v.size:
        raise ValueError("dimension mismatch between vector and basis")
    return basis @ (basis.T @ v)


def svd(m):
    """Full SVD ``m = U @ diag(s) @ V.T`` with nonincreasing s >= 0.

    Returns:
        (U, s, V) where U is (rows, k), V is (cols, k), k = min(rows, cols).

    Raises:
        SvdError: if the underlying iteration does not converge.
    """
    m = as_matrix(m)
    try:
        u, s, vt = np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological
        raise SvdError(str(exc)) from exc
    return u, s, vt.T


def singular_values(m) -> np.ndarray:
    m = as_matrix(m)
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise SvdError(str(exc)) from exc


def solve_lsq(m, b) -> np.ndarray:
    """Minimum-norm least-squares solution of ``m @ c ~ b``.

    Rank-deficient systems are resolved by the pseudoinverse with singular
    values below ``LSQ_CUTOFF * s_max`` treated as zero.
    """
    m = as_matrix(m)
    b = as_vector(b)
    if m.shape[0] != b.size:
        raise ValueError("dimension mismatch between matrix and rhs")
    if m.shape[1] == 0:
        return np.zeros(0)
    c, _, _, _ = np.linalg.lstsq(m, b, rcond=LSQ_CUTOFF)
    return c
