"""
Finite abelian groups given as products of cyclic groups.

Elements are enumerated row-major, index = sum e_i * prod_{j>i} m_j, so
index 0 is the identity. Subgroups are stored as the sorted tuple of their
element indices, which makes equality literal.
"""
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterable, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np
import sympy

from ..errors import InvalidExponentError, InvalidInputError, TooLargeError

max_group_size = 2**20
max_lattice_size = 2**12
max_table_size = 2**12


@dataclass(frozen=True)
class GroupElement:
    exponents: Tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.exponents) + ")"


ElementLike = Union[GroupElement, int, Sequence[int]]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: Tuple[int, ...]

    @cached_property
    def size(self) -> int:
        return prod(self.orders)

    @cached_property
    def strides(self) -> np.ndarray:
        return np.array([prod(self.orders[i + 1:]) for i in range(len(self.orders))], dtype=np.int64)

    @cached_property
    def moduli(self) -> np.ndarray:
        return np.array(self.orders, dtype=np.int64)

    @cached_property
    def exponent_matrix(self) -> np.ndarray:
        """Row i holds the exponent vector of element i."""
        idx = np.arange(self.size, dtype=np.int64)[:, None]
        return (idx // self.strides[None, :]) % self.moduli[None, :]

    @cached_property
    def mult_table(self) -> np.ndarray:
        if self.size > max_table_size:
            raise TooLargeError(f"Multiplication table of {self.name} refused, size {self.size} > {max_table_size}")
        E = self.exponent_matrix
        return self.ravel((E[:, None, :] + E[None, :, :]) % self.moduli)

    @cached_property
    def inverse_table(self) -> np.ndarray:
        return self.ravel((-self.exponent_matrix) % self.moduli)

    @cached_property
    def order_table(self) -> np.ndarray:
        if not self.orders:
            return np.ones(self.size, dtype=np.int64)
        E = self.exponent_matrix
        return np.lcm.reduce(self.moduli[None, :] // np.gcd(self.moduli[None, :], E), axis=1)

    @property
    def name(self) -> str:
        if not self.orders:
            return "1"
        return "×".join(f"C_{m}" for m in self.orders)

    def __str__(self) -> str:
        return self.name

    @property
    def is_cyclic(self) -> bool:
        return len(self.orders) <= 1

    @property
    def identity(self) -> GroupElement:
        return GroupElement(tuple(0 for _ in self.orders))

    def ravel(self, exps: np.ndarray) -> np.ndarray:
        return np.asarray(exps, dtype=np.int64) @ self.strides

    def element_of(self, i: int) -> GroupElement:
        return GroupElement(tuple(int(e) for e in self.exponent_matrix[i]))

    def index_of(self, g: ElementLike) -> int:
        if isinstance(g, (int, np.integer)):
            if not 0 <= g < self.size:
                raise IndexError(f"Element index {g} out of range for {self.name}")
            return int(g)
        exps = g.exponents if isinstance(g, GroupElement) else tuple(g)
        if len(exps) != len(self.orders):
            raise InvalidInputError(f"Element {exps} does not belong to {self.name}")
        return int(sum((e % m) * s for e, m, s in zip(exps, self.orders, self.strides)))

    def op_index(self, i: int, j: int) -> int:
        E = self.exponent_matrix
        return int(self.ravel((E[i] + E[j]) % self.moduli))

    def power_index(self, i: int, k: int) -> int:
        return int(self.ravel((self.exponent_matrix[i] * k) % self.moduli))

    def op(self, g: ElementLike, h: ElementLike) -> GroupElement:
        return self.element_of(self.op_index(self.index_of(g), self.index_of(h)))

    def inverse(self, g: ElementLike) -> GroupElement:
        return self.element_of(int(self.inverse_table[self.index_of(g)]))

    def order_of(self, g: ElementLike) -> int:
        return int(self.order_table[self.index_of(g)])

    def exponent(self) -> int:
        return int(self.order_table.max())

    def elements_of_order(self, k: int) -> List[int]:
        return [int(i) for i in np.flatnonzero(self.order_table == k)]

    def is_p_group(self, p: int) -> bool:
        return all(q == p for q in supp(self))

    def generators(self) -> List[int]:
        """Indices of the standard generators, one per cyclic factor."""
        return [int(s) for s in self.strides]


@lru_cache(maxsize=None)
def _make_group(orders: Tuple[int, ...]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(orders)


def make_group(orders: Iterable[int]) -> FiniteAbelianGroup:
    orders = tuple(int(m) for m in orders)
    if any(m < 2 for m in orders):
        raise InvalidInputError(f"Cyclic factor orders must be at least 2, got {list(orders)}")
    if prod(orders) > max_group_size:
        raise TooLargeError(f"Group of order {prod(orders)} exceeds {max_group_size}")
    return _make_group(orders)


@dataclass(frozen=True)
class Subgroup:
    group: FiniteAbelianGroup
    elements: Tuple[int, ...]
    generators: Tuple[GroupElement, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __contains__(self, g: ElementLike) -> bool:
        return self.group.index_of(g) in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def minimal_generators(self) -> List[int]:
        """Greedy generating set: each new generator is the least element outside the current span."""
        gens: List[int] = []
        span = np.array([0], dtype=np.int64)
        for i in self.elements:
            if i in span:
                continue
            gens.append(i)
            span = _closure(self.group, span, [i])
            if span.size == self.order:
                break
        return gens

    @property
    def label(self) -> str:
        G = self.group
        if self.is_trivial:
            return "1"
        if G.is_cyclic:
            k = G.size // self.order
            return "<g>" if k == 1 else f"<g^{k}>"
        return "<" + ",".join(str(G.element_of(i)) for i in self.minimal_generators()) + ">"

    def __str__(self) -> str:
        return self.label


def _closure(G: FiniteAbelianGroup, members: np.ndarray, gens: Sequence[int]) -> np.ndarray:
    E = G.exponent_matrix
    gens = np.asarray(list(gens), dtype=np.int64)
    if gens.size == 0:
        return np.unique(members)
    members = np.unique(members)
    while True:
        grown = G.ravel((E[members][:, None, :] + E[gens][None, :, :]) % G.moduli).ravel()
        merged = np.union1d(members, grown)
        if merged.size == members.size:
            return members
        members = merged


def subgroup_generated(G: FiniteAbelianGroup, gens: Iterable[ElementLike]) -> Subgroup:
    idx = [G.index_of(g) for g in gens]
    members = _closure(G, np.array([0], dtype=np.int64), idx)
    return Subgroup(G, tuple(int(i) for i in members), tuple(G.element_of(i) for i in idx))


def trivial_subgroup(G: FiniteAbelianGroup) -> Subgroup:
    return Subgroup(G, (0,), ())


def whole_group(G: FiniteAbelianGroup) -> Subgroup:
    return subgroup_generated(G, G.generators())


def subgroup_from_elements(G: FiniteAbelianGroup, elements: Iterable[int]) -> Optional[Subgroup]:
    """Wrap an element set as a Subgroup if it is closed, else None."""
    members = np.unique(np.asarray(list(elements), dtype=np.int64))
    if members.size == 0 or members[0] != 0:
        return None
    if _closure(G, members, members).size != members.size:
        return None
    N = Subgroup(G, tuple(int(i) for i in members))
    return Subgroup(G, N.elements, tuple(G.element_of(i) for i in N.minimal_generators()))


def supp(G: FiniteAbelianGroup) -> List[int]:
    return sorted(sympy.primefactors(G.size)) if G.size > 1 else []


def sylow_component(G: FiniteAbelianGroup, p: int) -> Subgroup:
    orders = G.order_table
    # orders are divisors of |G|; a p-power divides the p-part of |G|
    p_part = p ** sympy.multiplicity(p, G.size) if G.size % p == 0 else 1
    members = np.flatnonzero(p_part % orders == 0)
    return subgroup_from_elements(G, members)


def meet(N: Subgroup, M: Subgroup) -> Subgroup:
    common = sorted(set(N.elements) & set(M.elements))
    return subgroup_from_elements(N.group, common)


def join(N: Subgroup, M: Subgroup) -> Subgroup:
    G = N.group
    E = G.exponent_matrix
    sums = G.ravel((E[list(N.elements)][:, None, :] + E[list(M.elements)][None, :, :]) % G.moduli)
    members = np.unique(sums)
    return Subgroup(G, tuple(int(i) for i in members), N.generators + M.generators)


def all_subgroups(G: FiniteAbelianGroup) -> List[Subgroup]:
    """
    Every subgroup of G.

    A subgroup of a product of k cyclic groups needs at most k generators, so
    joining cyclic subgroups until nothing new appears reaches all of them.
    """
    if G.size > max_lattice_size:
        raise TooLargeError(f"Subgroup lattice of {G.name} refused, size {G.size} > {max_lattice_size}")

    found = {}
    for i in range(G.size):
        C = subgroup_generated(G, [i])
        found.setdefault(C.elements, C)
    cyclic = list(found.values())
    logging.debug(f"{G.name}: {len(cyclic)} cyclic subgroups")

    frontier = list(cyclic)
    while frontier:
        new = []
        for H in frontier:
            for C in cyclic:
                J = join(H, C)
                if J.elements not in found:
                    found[J.elements] = J
                    new.append(J)
        frontier = new

    logging.debug(f"{G.name}: {len(found)} subgroups")
    return sorted(found.values(), key=lambda N: (N.order, N.elements))


@dataclass(frozen=True, eq=False)
class QuotientGroup:
    group: FiniteAbelianGroup
    subgroup: Subgroup
    coset_representatives: Tuple[int, ...]
    coset_of: np.ndarray
    table: np.ndarray

    @property
    def size(self) -> int:
        return len(self.coset_representatives)

    def is_well_defined(self) -> bool:
        G = self.group
        E = G.exponent_matrix
        products = G.ravel((E[:, None, :] + E[None, :, :]) % G.moduli)
        lhs = self.coset_of[products]
        rhs = self.table[self.coset_of[:, None], self.coset_of[None, :]]
        return bool(np.array_equal(lhs, rhs))


def quotient(G: FiniteAbelianGroup, N: Subgroup) -> QuotientGroup:
    E = G.exponent_matrix
    coset_of = np.full(G.size, -1, dtype=np.int64)
    reps = []
    for g in range(G.size):
        if coset_of[g] >= 0:
            continue
        members = G.ravel((E[g][None, :] + E[list(N.elements)]) % G.moduli)
        coset_of[members] = len(reps)
        reps.append(g)

    R = E[reps]
    table = coset_of[G.ravel((R[:, None, :] + R[None, :, :]) % G.moduli)]
    coset_of.flags.writeable = False
    table.flags.writeable = False
    return QuotientGroup(G, N, tuple(reps), coset_of, table)


def cyclic_reduce(m: int, n: int) -> int:
    if not 0 < n < m:
        raise InvalidExponentError(f"Expected 0 < n < m, got n={n}, m={m}")
    return gcd(m, n)


def cyclic_factorizations(max_order: int, min_order: int = 2) -> List[Tuple[int, ...]]:
    """
    Every non-decreasing tuple of cyclic orders with product at most
    max_order, including the empty tuple (trivial group).
    """
    found = [()]

    def extend(prefix: Tuple[int, ...], size: int):
        start = prefix[-1] if prefix else min_order
        for m in range(start, max_order // size + 1):
            orders = prefix + (m,)
            found.append(orders)
            extend(orders, size * m)

    extend((), 1)
    return sorted(found, key=lambda orders: (prod(orders), orders))
