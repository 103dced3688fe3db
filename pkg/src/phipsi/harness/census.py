"""
The ideal lattice of F_p G next to the image of Phi.

Every subspace of F_p^|G| is visited once through its RREF matrix (pivot set
plus free entries), and the ideals are the subspaces closed under G. This is
only feasible for tiny rings; past `limit` subspaces the census keeps the
Phi-image listing alone.
"""
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple
import logging
import time

import numpy as np
import pandas as pd

from ..cruncher.groupring import (GroupRingElement, IdealSubspace, ideal_generated, in_phi_image,
                                  phi, psi, require_prime_field)
from ..cruncher.groups import Subgroup, all_subgroups, make_group
from ..cruncher.modring import make_ring
from ..errors import NotApplicableError
from .results import CaseResult, Expectations, SuiteResult

default_limit = 10**6


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    num, den = 1, 1
    for i in range(k):
        num *= q**(n - i) - 1
        den *= q**(i + 1) - 1
    return num // den


def subspace_count(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def iter_rref(n: int, p: int) -> Iterator[np.ndarray]:
    """Every RREF matrix with n columns over F_p and no zero rows."""
    yield np.zeros((0, n), dtype=np.int64)
    for k in range(1, n + 1):
        for piv in combinations(range(n), k):
            free = [(i, c) for i, pc in enumerate(piv) for c in range(pc + 1, n) if c not in piv]
            base = np.zeros((k, n), dtype=np.int64)
            base[np.arange(k), list(piv)] = 1
            rows = [i for i, _ in free]
            cols = [c for _, c in free]
            for values in product(range(p), repeat=len(free)):
                M = base.copy()
                M[rows, cols] = values
                yield M


@dataclass
class LatticeCensus:
    modulus: int
    orders: Tuple[int, ...]
    subgroup_count: int
    phi_image: List[Tuple[Subgroup, int]]
    subspace_count: int
    exhaustive: bool
    ideal_count: Optional[int] = None
    fiber_sizes: Optional[Dict[Subgroup, int]] = None
    fibers_contain_phi: Optional[bool] = None
    ideals: List[IdealSubspace] = field(default_factory=list, repr=False)

    @property
    def phi_equals_t(self) -> Optional[bool]:
        """Phi is injective into the non-unit ideals, so equality is a count."""
        if self.ideal_count is None:
            return None
        return self.ideal_count == self.subgroup_count

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for N, dim in self.phi_image:
            fiber = self.fiber_sizes.get(N) if self.fiber_sizes is not None else None
            rows.append((N.label, N.order, dim, fiber))
        return pd.DataFrame(rows, columns=["subgroup", "order", "phi_dim", "fiber_size"])

    def to_dict(self) -> Dict:
        return {
            "modulus": self.modulus,
            "group": list(self.orders),
            "subgroup_count": self.subgroup_count,
            "subspace_count": self.subspace_count,
            "exhaustive": self.exhaustive,
            "phi_image": [{"subgroup": N.label, "dimension": dim} for N, dim in self.phi_image],
            "ideal_count": self.ideal_count,
            "fiber_sizes": None if self.fiber_sizes is None
            else {N.label: size for N, size in self.fiber_sizes.items()},
            "fibers_contain_phi": self.fibers_contain_phi,
            "phi_equals_t": self.phi_equals_t,
        }


def ideal_census(p: int, orders, limit: int = default_limit, cache=None) -> LatticeCensus:
    R = make_ring(p)
    require_prime_field(R)
    G = make_group(orders)
    subgroups = all_subgroups(G)
    phis = {N: (cache.get_phi(R, G, N) if cache is not None else phi(R, G, N)) for N in subgroups}
    count = subspace_count(G.size, p)

    census = LatticeCensus(p, G.orders, len(subgroups), [(N, J.dimension) for N, J in phis.items()],
                           count, exhaustive=count <= limit)
    if not census.exhaustive:
        logging.warning(f"{R.name}{G.name}: {count} subspaces > {limit}, listing the Phi image only")
        return census

    start = time.time()
    ideals = []
    for M in iter_rref(G.size, p):
        J = IdealSubspace(R, G, M, tuple(int(np.flatnonzero(row)[0]) for row in M))
        if J.is_proper and J.is_closed_under_group():
            ideals.append(J)
    logging.debug(f"{R.name}{G.name}: {len(ideals)} non-unit ideals among {count} subspaces ({time.time() - start:.2f}s)")

    fibers = {N: 0 for N in subgroups}
    for J in ideals:
        fibers[psi(J)] += 1
    found = set(ideals)

    census.ideals = ideals
    census.ideal_count = len(ideals)
    census.fiber_sizes = fibers
    census.fibers_contain_phi = all(J in found and psi(J) == N for N, J in phis.items())
    return census


def maximal_ideals(census: LatticeCensus) -> List[IdealSubspace]:
    """Non-unit ideals not strictly inside another non-unit ideal."""
    if census.ideal_count is None:
        raise NotApplicableError("Maximal ideals need an exhaustive census")
    return [J for J in census.ideals
            if not any(K.dimension > J.dimension and J.is_subideal(K) for K in census.ideals)]


def theorem37_equivalence(p: int, m: int, census_limit: int = 10**5, cache=None) -> SuiteResult:
    """
    Phi onto the non-unit ideals, and every principal non-unit ideal in the
    image of Phi, should both hold exactly for F_2 C_2.
    """
    start = time.time()
    R, G = make_ring(p), make_group([m])
    expected = (p == 2 and m == 2)
    key = f"theorem37 {R.name} {G.name}"
    expect = Expectations(key, {"p": p, "m": m})

    outside = None
    for coeffs in product(range(p), repeat=m):
        x = GroupRingElement(R, G, coeffs)
        if x.is_zero():
            continue
        J = ideal_generated([x])
        if J.is_proper and in_phi_image(J, cache) is None:
            outside = x
            break
    logging.debug(f"{key}: first principal ideal outside the image: {outside}")
    expect.equal("all_principal_in_image", expected, outside is None)

    if subspace_count(m, p) <= census_limit:
        census = ideal_census(p, [m], census_limit, cache)
        expect.equal("phi_onto_non_units", expected, census.phi_equals_t)

    wall = time.time() - start
    case = CaseResult(key, "theorem37", expect.checks, expect.failures, wall)
    return SuiteResult(key, expect.checks, expect.failures, wall, [case])
