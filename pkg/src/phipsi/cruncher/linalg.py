"""
Exact linear algebra over prime fields.

Row reduction goes through galois FieldArrays; everything handed back to the
rest of the package is a plain int64 numpy array with entries in [0, p).
"""
from functools import lru_cache
from typing import Optional, Tuple

import galois
import numpy as np


@lru_cache(maxsize=None)
def field(p: int) -> type:
    return galois.GF(p)


def as_field(matrix: np.ndarray, p: int) -> galois.FieldArray:
    return field(p)(np.asarray(matrix, dtype=np.int64) % p)


def rref(matrix: np.ndarray, p: int) -> np.ndarray:
    """Reduced row-echelon form with the zero rows dropped."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    if matrix.shape[0] == 0 or not np.any(matrix % p):
        return np.zeros((0, matrix.shape[1]), dtype=np.int64)
    reduced = as_field(matrix, p).row_reduce().view(np.ndarray).astype(np.int64)
    return reduced[reduced.any(axis=1)]


def rank(matrix: np.ndarray, p: int) -> int:
    return int(rref(matrix, p).shape[0])


def pivots(basis: np.ndarray) -> Tuple[int, ...]:
    """Pivot column of each row of an echelon basis."""
    return tuple(int(np.flatnonzero(row)[0]) for row in basis)


def reduce_vector(basis: np.ndarray, pivot_cols: Tuple[int, ...], vec: np.ndarray, p: int) -> np.ndarray:
    """Remainder of vec after clearing every pivot column of an RREF basis."""
    vec = np.asarray(vec, dtype=np.int64) % p
    for row, c in zip(basis, pivot_cols):
        if vec[c]:
            vec = (vec - vec[c] * row) % p
    return vec


def reduce_rows(basis: np.ndarray, pivot_cols: Tuple[int, ...], vecs: np.ndarray, p: int) -> np.ndarray:
    """Row-wise reduce_vector for a whole matrix at once."""
    vecs = np.atleast_2d(np.asarray(vecs, dtype=np.int64)) % p
    if len(pivot_cols) == 0:
        return vecs
    # pivot columns of an RREF basis are unit columns
    coords = vecs[:, list(pivot_cols)]
    if not fits_int64(p, len(pivot_cols)):
        F = field(p)
        return (F(vecs) - F(coords) @ F(np.asarray(basis, dtype=np.int64) % p)).view(np.ndarray).astype(np.int64)
    return (vecs - coords @ basis) % p


def fits_int64(p: int, terms: int) -> bool:
    """True when a sum of `terms` products of residues mod p stays below 2**63."""
    return terms * (p - 1) ** 2 < 2**63


def in_row_space(basis: np.ndarray, pivot_cols: Tuple[int, ...], vec: np.ndarray, p: int) -> bool:
    return not reduce_vector(basis, pivot_cols, vec, p).any()


def kernel_basis(matrix: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {v : matrix @ v = 0}."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    ncols = matrix.shape[1]
    reduced = rref(matrix, p)
    piv = pivots(reduced)
    free = [c for c in range(ncols) if c not in piv]

    kernel = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        kernel[k, f] = 1
        for row, c in zip(reduced, piv):
            kernel[k, c] = (-row[f]) % p
    return kernel


def solve(matrix: np.ndarray, rhs: np.ndarray, p: int) -> Optional[np.ndarray]:
    """One solution of matrix @ v = rhs (free variables set to 0), or None."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    ncols = matrix.shape[1]
    augmented = np.hstack([matrix, np.asarray(rhs, dtype=np.int64).reshape(-1, 1)])
    reduced = rref(augmented, p)
    piv = pivots(reduced)
    if ncols in piv:
        return None

    solution = np.zeros(ncols, dtype=np.int64)
    for row, c in zip(reduced, piv):
        solution[c] = row[ncols]
    return solution % p


def batched_invertible(mats: np.ndarray, p: int, chunk: int = 8192) -> np.ndarray:
    """
    Invertibility over F_p of a stack of square matrices.

    Gaussian elimination is run on all matrices at once; a matrix is singular
    as soon as one column has no pivot left.
    """
    mats = np.asarray(mats, dtype=np.int64)
    count, size = mats.shape[0], mats.shape[1]
    inverses = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
    result = np.empty(count, dtype=bool)

    for start in range(0, count, chunk):
        A = mats[start:start + chunk] % p
        rows = np.arange(A.shape[0])
        alive = np.ones(A.shape[0], dtype=bool)
        for col in range(size):
            candidates = A[:, col:, col] != 0
            alive &= candidates.any(axis=1)
            piv = col + candidates.argmax(axis=1)

            top = A[rows, col].copy()
            A[rows, col] = A[rows, piv]
            A[rows, piv] = top

            A[rows, col] = (A[rows, col] * inverses[A[rows, col, col]][:, None]) % p
            factors = A[:, col + 1:, col]
            A[:, col + 1:, :] = (A[:, col + 1:, :] - factors[:, :, None] * A[:, col, None, :]) % p
        result[start:start + chunk] = alive
    return result
