"""Dense 3-tensor arithmetic and reshaping operators.

Tensors are plain float64 ``numpy.ndarray`` objects of shape (N1, N2, N3).
The vectorisation convention used throughout the library lists the first
index fastest, i.e. ``vec(t)[l] = t[p1, p2, p3]`` with
``l = p1 + p2*N1 + p3*N1*N2`` (0-based), which is numpy's Fortran ravel
order.  Mode-d matricisation follows the matching convention: entry
(p1, p2, p3) maps to row ``p_d`` and column
``l = sum_{d' != d} p_{d'} * prod_{d'' < d', d'' != d} N_{d''}``.

Dimension mismatches always raise; there is no silent broadcasting.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_tensor3",
    "vec",
    "unvec",
    "mode_matricize",
    "mode_multiply",
    "kron",
    "inner",
    "frobenius",
    "hadamard",
]


def as_tensor3(t) -> np.ndarray:
    """Validate and coerce ``t`` to a float64 array of exactly 3 dimensions."""
    arr = np.asarray(t, dtype=np.float64)
    if arr.ndim != 3:
        raise ValueError(f"expected a 3-way tensor, got ndim={arr.ndim}")
    if min(arr.shape) < 1:
        raise ValueError(f"tensor dimensions must be positive, got {arr.shape}")
    return arr


def _as_matrix(u) -> np.ndarray:
    arr = np.asarray(u, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={arr.ndim}")
    return arr


def vec(t) -> np.ndarray:
    """Flatten a tensor to a vector with the first index fastest."""
    return as_tensor3(t).reshape(-1, order="F")


def unvec(v, dims) -> np.ndarray:
    """Inverse of :func:`vec` for the given (N1, N2, N3)."""
    v = np.asarray(v, dtype=np.float64).reshape(-1)
    n1, n2, n3 = dims
    if v.size != n1 * n2 * n3:
        raise ValueError(f"vector of length {v.size} cannot fill dims {tuple(dims)}")
    return v.reshape((n1, n2, n3), order="F")


def mode_matricize(t, mode: int) -> np.ndarray:
    """Unfold ``t`` along ``mode`` (1, 2 or 3) into an N_d x prod(N_other) matrix.

    Columns are ordered with the lower remaining mode index fastest.
    """
    t = as_tensor3(t)
    if mode not in (1, 2, 3):
        raise ValueError(f"mode must be 1, 2 or 3, got {mode}")
    return np.moveaxis(t, mode - 1, 0).reshape(t.shape[mode - 1], -1, order="F")


def mode_multiply(t, mode: int, u) -> np.ndarray:
    """Multiply the mode-``d`` fibers of ``t`` by the matrix ``u``.

    ``u`` must have N_d columns; the result replaces N_d with ``u.shape[0]``.
    """
    t = as_tensor3(t)
    u = _as_matrix(u)
    if mode not in (1, 2, 3):
        raise ValueError(f"mode must be 1, 2 or 3, got {mode}")
    if u.shape[1] != t.shape[mode - 1]:
        raise ValueError(
            f"mode-{mode} multiply needs {t.shape[mode - 1]} columns, got {u.shape[1]}"
        )
    unfolded = u @ mode_matricize(t, mode)
    new_shape = (u.shape[0],) + tuple(n for d, n in enumerate(t.shape) if d != mode - 1)
    return np.moveaxis(unfolded.reshape(new_shape, order="F"), 0, mode - 1)


def kron(u, v) -> np.ndarray:
    """Kronecker product with the standard block layout [u_11*V, u_12*V, ...]."""
    return np.kron(_as_matrix(u), _as_matrix(v))


def _check_same_dims(u: np.ndarray, v: np.ndarray) -> None:
    if u.shape != v.shape:
        raise ValueError(f"tensor dims differ: {u.shape} vs {v.shape}")


def inner(u, v) -> float:
    """Entrywise inner product of two tensors with identical dims."""
    u = as_tensor3(u)
    v = as_tensor3(v)
    _check_same_dims(u, v)
    return float(np.dot(u.reshape(-1), v.reshape(-1)))


def frobenius(u) -> float:
    """Frobenius norm, ``sqrt(inner(u, u))``."""
    return float(np.linalg.norm(as_tensor3(u)))


def hadamard(u, v) -> np.ndarray:
    """Entrywise product of two tensors with identical dims."""
    u = as_tensor3(u)
    v = as_tensor3(v)
    _check_same_dims(u, v)
    return u * v
