"""Dense complex matrix kernel.

Products, adjoints, inverses, hermitian eigen-signatures, matrix
exponentials and Kronecker products, all on plain 2-D complex ndarrays
with explicit tolerance control. Everything here is a pure function;
inputs are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DegenerateMetric, DimensionMismatch, NotHermitian, Singular

__all__ = [
    "Tolerances",
    "DEFAULT_TOLS",
    "as_matrix",
    "as_vector",
    "max_abs",
    "matmul",
    "conj_transpose",
    "inverse",
    "signature",
    "expm",
    "kron",
]


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds used throughout the library.

    eq_tol   entrywise equality of matrices and scalars
    herm_tol allowed deviation from hermiticity
    sig_tol  eigenvalue / pivot zero threshold
    sym_tol  metric preservation after an exponential map
    """

    eq_tol: float = 1e-10
    herm_tol: float = 1e-10
    sig_tol: float = 1e-9
    sym_tol: float = 1e-8

    def __post_init__(self):
        for name in ("eq_tol", "herm_tol", "sig_tol", "sym_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_TOLS = Tolerances()


def as_matrix(a) -> np.ndarray:
    """Coerce input to a 2-D complex ndarray."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionMismatch(f"matrix dimensions must be >= 1, got {m.shape}")
    return m


def as_vector(a, dim: int | None = None) -> np.ndarray:
    """Coerce input to a 1-D complex ndarray, optionally of fixed length."""
    v = np.asarray(a, dtype=complex)
    if v.ndim != 1 or v.shape[0] < 1:
        raise DimensionMismatch(f"expected a 1-D vector, got shape {v.shape}")
    if dim is not None and v.shape[0] != dim:
        raise DimensionMismatch(f"expected length {dim}, got {v.shape[0]}")
    return v


def max_abs(a) -> float:
    """Largest entry magnitude; the norm behind every entrywise check."""
    return float(np.max(np.abs(a)))


def _require_square(m: np.ndarray) -> np.ndarray:
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got {m.shape}")
    return m


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(
            f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


def conj_transpose(a) -> np.ndarray:
    """Entrywise conjugate transpose."""
    return as_matrix(a).conj().T.copy()


def inverse(a, tols: Tolerances = DEFAULT_TOLS) -> np.ndarray:
    """Inverse of a square matrix.

    Raises Singular when the smallest singular value falls below sig_tol,
    which is the library-wide notion of "no inverse exists".
    """
    m = _require_square(as_matrix(a))
    smin = float(np.linalg.svd(m, compute_uv=False)[-1])
    if smin < tols.sig_tol:
        raise Singular(f"smallest singular value {smin:.3e} below {tols.sig_tol:.3e}")
    return np.linalg.inv(m)


def signature(h, tols: Tolerances = DEFAULT_TOLS) -> tuple[int, int]:
    """Counts (n_plus, n_minus) of positive/negative eigenvalues.

    The input must be hermitian within herm_tol; an eigenvalue with
    magnitude below sig_tol makes the matrix degenerate and is rejected,
    so n_plus + n_minus always equals the dimension.
    """
    m = _require_square(as_matrix(h))
    if max_abs(m - m.conj().T) > tols.herm_tol:
        raise NotHermitian("signature requires a hermitian matrix")
    eigs = np.linalg.eigvalsh(m)
    if np.any(np.abs(eigs) < tols.sig_tol):
        raise DegenerateMetric(f"eigenvalue below zero threshold {tols.sig_tol:.3e}")
    n_plus = int(np.sum(eigs > 0))
    return n_plus, m.shape[0] - n_plus


def expm(a) -> np.ndarray:
    """Matrix exponential (scaling-and-squaring); expm(0) is exactly I."""
    m = _require_square(as_matrix(a))
    if not m.any():
        return np.eye(m.shape[0], dtype=complex)
    return scipy.linalg.expm(m)


def kron(a, b) -> np.ndarray:
    """Kronecker product, left factor major: (i_a, i_b) -> i_a * rows(b) + i_b."""
    return np.kron(as_matrix(a), as_matrix(b))
