"""QR-based least squares with an explicit full-rank guard.

Normal equations are never formed; designs are factored by Householder QR
and solutions obtained by back substitution.  A design counts as
rank-deficient when its smallest singular value falls below
``RANK_TOL`` times its largest, in which case :class:`NumericalError`
is raised (no silent pseudo-inverse fallback).
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import solve_triangular

from .errors import NumericalError

RANK_TOL = 1e-10


def check_full_rank(design: np.ndarray, what: str) -> None:
    """Raise :class:`NumericalError` if ``design`` is rank-deficient."""
    if design.ndim != 2:
        raise ValueError("design must be a matrix")
    if design.shape[0] < design.shape[1]:
        raise NumericalError(
            f"{what}: {design.shape[0]} rows cannot determine {design.shape[1]} coefficients"
        )
    if not np.all(np.isfinite(design)):
        raise NumericalError(f"{what}: design contains non-finite values")
    sv = np.linalg.svd(design, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] <= RANK_TOL * sv[0]:
        raise NumericalError(f"{what}: design is rank-deficient")


def ols_qr(design: np.ndarray, response: np.ndarray, what: str) -> np.ndarray:
    """Least-squares coefficients of ``response`` on ``design``.

    ``response`` may be a vector or a matrix of stacked right-hand sides;
    the returned coefficients have matching trailing shape.
    """
    check_full_rank(design, what)
    q, r = np.linalg.qr(design, mode="reduced")
    coef = solve_triangular(r, q.T @ response, lower=False)
    if not np.all(np.isfinite(coef)):
        raise NumericalError(f"{what}: least-squares solution is non-finite")
    return coef
