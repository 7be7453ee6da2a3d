"""Complex dense linear-algebra primitives used by the precoding chain.

Everything here operates on plain ``numpy`` arrays (complex128). Matrices are
validated for finiteness at the operation boundary; no wrapper types.
"""

from __future__ import annotations

import numpy as np


class NullSpaceEmpty(np.linalg.LinAlgError):
    """Requested null-space dimension exceeds the matrix nullity."""


class NotPositiveDefinite(np.linalg.LinAlgError):
    """Hermitian matrix has a non-positive eigenvalue."""


def _as_complex(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.size == 0:
        raise np.linalg.LinAlgError(f"expected a nonempty 2-D matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise np.linalg.LinAlgError("matrix contains NaN or Inf entries")
    return m


def svd_ordered(a, full_matrices: bool = False):
    """SVD ``a = U @ diag(s) @ V*`` with ``s`` sorted descending.

    Returns ``(U, s, V)`` where ``U`` and ``V`` have orthonormal columns
    (``V`` is returned untransposed, so ``a ≈ U @ np.diag(s) @ V.conj().T``).
    Column phases are normalized: the first nonzero entry of each column of
    ``V`` is made real nonnegative, with the paired ``U`` column (when one
    exists) co-rotated so the product is unchanged. This pins the factors
    for regression tests.
    """
    m = _as_complex(a)
    u, s, vh = np.linalg.svd(m, full_matrices=full_matrices)
    v = vh.conj().T
    # phase of the first nonzero entry of each V column (all-zero cols keep 1)
    lead = v[(np.abs(v) > 1e-300).argmax(axis=0), np.arange(v.shape[1])]
    mag = np.abs(lead)
    phase = np.where(mag > 0, lead, 1.0) / np.where(mag > 0, mag, 1.0)
    v *= phase.conj()
    k = min(s.size, u.shape[1], v.shape[1])
    u[:, :k] *= phase[:k].conj()
    return u, s, v


def rank_from_singular_values(s: np.ndarray, rows: int, cols: int) -> int:
    """Numerical rank with the usual relative cutoff max(m, n) * eps * s_max."""
    if s.size == 0:
        return 0
    tol = max(rows, cols) * np.finfo(np.float64).eps * s[0]
    return int(np.count_nonzero(s > tol))


def null_space_basis(a, dim: int) -> np.ndarray:
    """Orthonormal basis of a ``dim``-dimensional subspace of the null space.

    Returns a ``cols(a) x dim`` matrix built from the right-singular vectors
    of the ``dim`` smallest singular values. Raises :class:`NullSpaceEmpty`
    when the nullity (cols minus numerical rank) is smaller than ``dim``.
    """
    m = _as_complex(a)
    if dim < 1:
        raise ValueError(f"null-space dimension must be >= 1, got {dim}")
    rows, cols = m.shape
    _, s, v = svd_ordered(m, full_matrices=True)
    nullity = cols - rank_from_singular_values(s, rows, cols)
    if dim > nullity:
        raise NullSpaceEmpty(
            f"requested null-space dimension {dim} but nullity is {nullity} "
            f"for a {rows}x{cols} matrix"
        )
    return np.ascontiguousarray(v[:, cols - dim:])


def inv_sqrt_hpd(w) -> np.ndarray:
    """Inverse square root ``S`` of a Hermitian positive definite ``w``.

    Satisfies ``S @ w @ S* = I``. The input is symmetrized as ``(w + w*)/2``
    first to tolerate rounding asymmetry from upstream products.
    """
    m = _as_complex(w)
    if m.shape[0] != m.shape[1]:
        raise np.linalg.LinAlgError(f"expected a square matrix, got shape {m.shape}")
    herm = 0.5 * (m + m.conj().T)
    evals, evecs = np.linalg.eigh(herm)
    if evals[0] <= 0.0:
        raise NotPositiveDefinite(f"smallest eigenvalue {evals[0]:.3e} is not positive")
    return (evecs * (1.0 / np.sqrt(evals))) @ evecs.conj().T


def logdet_hpd(a) -> float:
    """log2 det of a Hermitian positive definite matrix, via Cholesky."""
    m = _as_complex(a)
    if m.shape[0] != m.shape[1]:
        raise np.linalg.LinAlgError(f"expected a square matrix, got shape {m.shape}")
    herm = 0.5 * (m + m.conj().T)
    try:
        chol = np.linalg.cholesky(herm)
    except np.linalg.LinAlgError as err:
        raise NotPositiveDefinite(str(err)) from err
    return float(2.0 * np.sum(np.log2(np.real(np.diag(chol)))))
