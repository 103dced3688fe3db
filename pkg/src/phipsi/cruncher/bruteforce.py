"""
Exhaustive scans over all of (Z/n)G for tiny rings.

Elements are identified by their id, the little-endian base-n number formed
by the coefficient vector. All scans work on the (N, |G|) coefficient matrix
of every element at once.
"""
from math import ceil, log2
from typing import FrozenSet, Iterable, Tuple
import logging

import numpy as np

from ..errors import TooLargeError
from . import linalg
from .groupring import GroupRingElement, IdealSubspace
from .groups import FiniteAbelianGroup
from .modring import RingDescriptor

max_elements = 2**16

ElementSet = FrozenSet[Tuple[int, ...]]


def ring_size(R: RingDescriptor, G: FiniteAbelianGroup) -> int:
    return R.modulus ** G.size


def require_small(R: RingDescriptor, G: FiniteAbelianGroup) -> int:
    N = ring_size(R, G)
    if N > max_elements:
        raise TooLargeError(f"{R.name}{G.name} has {N} elements, brute force is limited to {max_elements}")
    return N


def all_elements(R: RingDescriptor, G: FiniteAbelianGroup) -> np.ndarray:
    N = require_small(R, G)
    ids = np.arange(N, dtype=np.int64)[:, None]
    return (ids // R.modulus ** np.arange(G.size, dtype=np.int64)[None, :]) % R.modulus


def element_ids(X: np.ndarray, n: int) -> np.ndarray:
    X = np.atleast_2d(X)
    return (X % n) @ (n ** np.arange(X.shape[1], dtype=np.int64))


def as_element_set(X: np.ndarray) -> ElementSet:
    return frozenset(tuple(int(c) for c in row) for row in np.atleast_2d(X))


def multiply_rows(X: np.ndarray, Y: np.ndarray, G: FiniteAbelianGroup, n: int) -> np.ndarray:
    """Row-wise products X[i] * Y[i] in (Z/n)G."""
    out = np.zeros_like(Y)
    table = G.mult_table
    for g in range(G.size):
        out[:, table[g]] = (out[:, table[g]] + X[:, g:g + 1] * Y) % n
    return out


def nilpotent_bruteforce(R: RingDescriptor, G: FiniteAbelianGroup) -> ElementSet:
    """
    Every nilpotent element.

    Distinct nonzero powers of a nilpotent element never repeat, so its index
    is at most the ring size; squaring ceil(log2 N) times is enough.
    """
    X = all_elements(R, G)
    Y = X.copy()
    for _ in range(max(1, ceil(log2(X.shape[0])))):
        Y = multiply_rows(Y, Y, G, R.modulus)
    nil = X[~Y.any(axis=1)]
    logging.debug(f"{R.name}{G.name}: {nil.shape[0]} nilpotent elements out of {X.shape[0]}")
    return as_element_set(nil)


def _regular_index(G: FiniteAbelianGroup) -> np.ndarray:
    # entry (g, k) is the index of k*g^-1, so X[:, idx][i, g] is the row of g·x_i
    return G.mult_table[:, G.inverse_table].T


def unit_mask(R: RingDescriptor, G: FiniteAbelianGroup, chunk: int = 4096) -> np.ndarray:
    """
    Boolean mask over element ids, True on units.

    x is a unit of (Z/n)G iff it is a unit of F_q G for every prime q | n,
    i.e. iff its regular matrix is invertible mod every such q.
    """
    X = all_elements(R, G)
    idx = _regular_index(G)
    mask = np.ones(X.shape[0], dtype=bool)
    for start in range(0, X.shape[0], chunk):
        mats = X[start:start + chunk][:, idx]
        for q in R.primes:
            mask[start:start + chunk] &= linalg.batched_invertible(mats, q)
    logging.debug(f"{R.name}{G.name}: {int(mask.sum())} units")
    return mask


def additive_span(R: RingDescriptor, G: FiniteAbelianGroup, vectors: Iterable[np.ndarray]) -> np.ndarray:
    """All Z-linear combinations of the given vectors, as a coefficient matrix."""
    n = R.modulus
    span = np.zeros((1, G.size), dtype=np.int64)
    members = {0}
    for v in vectors:
        v = np.asarray(v, dtype=np.int64) % n
        blocks = [span]
        # span + k*v is either inside the span or disjoint from it
        for k in range(1, n):
            if int(element_ids(k * v, n)[0]) in members:
                break
            shifted = (span + k * v) % n
            members.update(element_ids(shifted, n).tolist())
            blocks.append(shifted)
        span = np.vstack(blocks)
    return span


def ideal_closure(R: RingDescriptor, G: FiniteAbelianGroup, generators: Iterable[GroupRingElement]) -> ElementSet:
    """The ideal generated by `generators`, as an element set."""
    require_small(R, G)
    translates = []
    for x in generators:
        translates.extend(x.regular_matrix())
    return as_element_set(additive_span(R, G, translates))


def subspace_elements(J: IdealSubspace) -> ElementSet:
    """Every vector of an ideal subspace."""
    p = J.ring.modulus
    if p ** J.dimension > max_elements:
        raise TooLargeError(f"Subspace of dimension {J.dimension} over F_{p} is too large to list")
    return as_element_set(additive_span(J.ring, J.group, J.basis))


def jacobson_bruteforce(R: RingDescriptor, G: FiniteAbelianGroup) -> ElementSet:
    """
    The Jacobson radical: x with 1 - xy a unit for every y.

    The candidate set C of x with 1 - c·g·x a unit for every scalar c and
    g in G contains the radical and is stable under scalars and G. When C is
    also additively closed it is an ideal made of quasi-regular elements, so
    it is the radical. Otherwise every candidate is checked against all y.
    """
    n = R.modulus
    X = all_elements(R, G)
    units = unit_mask(R, G)
    one = np.zeros(G.size, dtype=np.int64)
    one[0] = 1

    candidates = np.ones(X.shape[0], dtype=bool)
    idx = _regular_index(G)
    for c in range(1, n):
        for g in range(G.size):
            translated = X[:, idx[g]]
            candidates &= units[element_ids((one[None, :] - c * translated) % n, n)]

    C = X[candidates]
    closed = np.zeros(X.shape[0], dtype=bool)
    closed[element_ids(additive_span(R, G, C), n)] = True
    if np.array_equal(closed, candidates):
        logging.debug(f"{R.name}{G.name}: Jacobson candidates form an ideal of size {C.shape[0]}")
        return as_element_set(C)

    logging.debug(f"{R.name}{G.name}: Jacobson candidates not closed, checking all products")
    radical = []
    for x in C:
        products = (X @ _multiplication_matrix(x, idx)) % n
        if units[element_ids((one[None, :] - products) % n, n)].all():
            radical.append(x)
    return as_element_set(np.array(radical, dtype=np.int64).reshape(-1, G.size))


def _multiplication_matrix(x: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """Matrix M with y @ M = x*y for coefficient rows y."""
    return x[idx]
