"""Pure-numpy implementations of the covariance-factor kernels.

These are the hot inner operations of a local search unit. A compiled
equivalent lives in ``vbopt._speedups``; :mod:`vbopt.backend` picks whichever
is available. Both backends implement the same float64 arithmetic; results
agree to rounding, and each backend is individually deterministic.

The square-root factor A satisfies C = A @ A.T. Rank-one changes of C map to
direct changes of A, and the inverse factor is carried along with a
Sherman-Morrison step so no solve is needed inside the loop.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "pure-python"

# a downdate whose square-root argument falls at or below this is skipped
SQRT_ARG_FLOOR = 1e-12
# directions with squared preimage norm below this contribute nothing useful
W_NORM_FLOOR = 1e-20


def chol_rank_one(A, A_inv, alpha, beta, v):
    """Apply C' = alpha*C + beta*v v^T directly to the factor A.

    Returns (A_new, A_inv_new), or None when the downdate is numerically
    infeasible (square-root argument <= SQRT_ARG_FLOOR) and must be skipped.
    A degenerate direction (||A^-1 v||^2 below W_NORM_FLOOR) reduces to the
    pure scaling A' = sqrt(alpha)*A.
    """
    sa = math.sqrt(alpha)
    w = A_inv @ v
    w2 = float(w @ w)
    if w2 < W_NORM_FLOOR:
        return sa * A, A_inv / sa
    arg = 1.0 + (beta / alpha) * w2
    if arg <= SQRT_ARG_FLOOR:
        return None
    b = (sa / w2) * (math.sqrt(arg) - 1.0)
    A_new = sa * A + b * np.outer(v, w)
    # A' = A (sa*I + b w w^T): Sherman-Morrison on the right factor
    A_inv_new = (A_inv - (b / (sa + b * w2)) * np.outer(w, w @ A_inv)) / sa
    return A_new, A_inv_new


def constraint_downdate(A, A_inv, vs, coeff):
    """Shrink A along a batch of accumulated infeasible-step directions.

    A_new = A - coeff * sum_j outer(v_j, w_j) / (w_j . w_j), w_j = A_inv v_j.
    Terms with w_j . w_j < W_NORM_FLOOR are skipped. Returns
    (A_new, skipped_count); the caller recomputes the inverse (the change is
    not rank-one in general).
    """
    delta = np.zeros_like(A)
    skipped = 0
    for v in vs:
        w = A_inv @ v
        w2 = float(w @ w)
        if w2 < W_NORM_FLOOR:
            skipped += 1
            continue
        delta += np.outer(v, w) / w2
    return A - coeff * delta, skipped
