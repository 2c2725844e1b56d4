"""Pure-numpy implementations of the hot inner loops.

These are the reference backend; the compiled extension in ``_fast.pyx``
implements the same contracts.  The subgradient iteration is vectorized
across restart columns so the per-iteration cost is a single matmul.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def subgrad_minimize(A: np.ndarray, V0: np.ndarray, iters: int):
    """Projected subgradient descent for min_{||v||=1} max_j |<v, a_j>|.

    Runs every restart column of ``V0`` for ``iters`` steps with step size
    0.5/sqrt(t), renormalizing after each step, and tracks the best value
    seen anywhere along each trajectory.

    Args:
        A: (n, m) column matrix of atoms.
        V0: (n, R) unit starting vectors, one restart per column.
        iters: number of subgradient steps, >= 1.

    Returns:
        (best_vals, best_vecs): (R,) values and (n, R) witnesses.
    """
    A = np.ascontiguousarray(A, dtype=float)
    V = np.array(V0, dtype=float, copy=True)
    R = V.shape[1]
    idx = np.arange(R)
    best = np.full(R, np.inf)
    best_vecs = V.copy()

    for t in range(1, iters + 1):
        scores = A.T @ V                      # (m, R)
        j = np.argmax(np.abs(scores), axis=0)
        vals = np.abs(scores[j, idx])
        improved = vals < best
        if improved.any():
            best[improved] = vals[improved]
            best_vecs[:, improved] = V[:, improved]
        signs = np.where(scores[j, idx] >= 0.0, 1.0, -1.0)
        V = V - (0.5 / np.sqrt(t)) * (A[:, j] * signs)
        V /= np.linalg.norm(V, axis=0)

    scores = A.T @ V
    j = np.argmax(np.abs(scores), axis=0)
    vals = np.abs(scores[j, idx])
    improved = vals < best
    if improved.any():
        best[improved] = vals[improved]
        best_vecs[:, improved] = V[:, improved]
    return best, best_vecs


def circle_minimize(B: np.ndarray, n_angles: int):
    """Minimum over the unit circle of max_j |B[j] . (cos a, sin a)|.

    Scans ``n_angles`` equally spaced angles over [0, pi) (the objective has
    period pi by symmetry).

    Args:
        B: (m, 2) coefficient rows.
        n_angles: grid resolution, >= 1.

    Returns:
        (value, angle) at the grid minimizer.
    """
    B = np.ascontiguousarray(B, dtype=float)
    angles = np.arange(n_angles) * (np.pi / n_angles)
    W = np.stack([np.cos(angles), np.sin(angles)])   # (2, n_angles)
    vals = np.abs(B @ W).max(axis=0)
    k = int(np.argmin(vals))
    return float(vals[k]), float(angles[k])
