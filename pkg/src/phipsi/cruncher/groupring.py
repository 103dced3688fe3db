"""
Group rings RG with R = Z/n and G finite abelian.

Elements are dense coefficient vectors in the group enumeration order. Ideals
are handled as subspaces in reduced row-echelon form, which needs R to be a
prime field; over composite moduli ideals only show up as finite element sets
(see bruteforce.py).
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from ..errors import (IncompatibleOperandsError, InvalidExponentError, InvalidInputError, NotAProperIdealError,
                      NotAnIdealError, TooLargeError, UnsupportedRingError)
from . import linalg
from .groups import (ElementLike, FiniteAbelianGroup, QuotientGroup, Subgroup, quotient,
                     subgroup_from_elements)
from .modring import RingDescriptor


def require_prime_field(R: RingDescriptor) -> int:
    if not R.is_field:
        raise UnsupportedRingError(f"{R.name} is not a prime field, ideal subspaces need one")
    return R.modulus


class GroupRingElement:

    def __init__(self, ring: RingDescriptor, group: FiniteAbelianGroup, coeffs: Sequence[int]):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (group.size,):
            raise IncompatibleOperandsError(
                f"Expected {group.size} coefficients for {group.name}, got {coeffs.shape[0] if coeffs.ndim else 1}")
        self.ring = ring
        self.group = group
        self.coeffs = coeffs % ring.modulus
        self.coeffs.flags.writeable = False

    # Constructors
    @classmethod
    def zero(cls, R: RingDescriptor, G: FiniteAbelianGroup) -> "GroupRingElement":
        return cls(R, G, np.zeros(G.size, dtype=np.int64))

    @classmethod
    def one(cls, R: RingDescriptor, G: FiniteAbelianGroup) -> "GroupRingElement":
        return cls.group_element(R, G, 0)

    @classmethod
    def group_element(cls, R: RingDescriptor, G: FiniteAbelianGroup, g: ElementLike, coeff: int = 1) -> "GroupRingElement":
        coeffs = np.zeros(G.size, dtype=np.int64)
        coeffs[G.index_of(g)] = coeff
        return cls(R, G, coeffs)

    # Arithmetic
    def _check(self, other: "GroupRingElement"):
        if self.ring.modulus != other.ring.modulus or self.group.orders != other.group.orders:
            raise IncompatibleOperandsError(
                f"Cannot combine {self.ring.name}{self.group.name} with {other.ring.name}{other.group.name}")

    def __add__(self, other):
        if isinstance(other, (int, np.integer)):
            other = GroupRingElement.one(self.ring, self.group) * int(other)
        self._check(other)
        return GroupRingElement(self.ring, self.group, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.ring, self.group, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GroupRingElement(self.ring, self.group, self.coeffs * (int(other) % self.ring.modulus))
        self._check(other)
        n = self.ring.modulus
        out = np.zeros(self.group.size, dtype=np.int64)
        # reduce after every term: one product is below n**2, a sum of |G| of them is not
        for g in np.flatnonzero(self.coeffs):
            out = (out + self.coeffs[g] * other.translated_coeffs(int(g))) % n
        return GroupRingElement(self.ring, self.group, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        return power(self, k)

    def translated_coeffs(self, g: int) -> np.ndarray:
        """Coefficients of g·x: the coefficient of h moves to gh."""
        out = np.empty_like(self.coeffs)
        out[self.group.mult_table[g]] = self.coeffs
        return out

    def translate(self, g: ElementLike) -> "GroupRingElement":
        return GroupRingElement(self.ring, self.group, self.translated_coeffs(self.group.index_of(g)))

    def regular_matrix(self) -> np.ndarray:
        """Row g holds the coefficients of g·x."""
        out = np.empty((self.group.size, self.group.size), dtype=np.int64)
        rows = np.arange(self.group.size)[:, None]
        out[rows, self.group.mult_table] = self.coeffs[None, :]
        return out

    # Predicates
    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (self.ring.modulus == other.ring.modulus
                and self.group.orders == other.group.orders
                and bool(np.array_equal(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash((self.ring.modulus, self.group.orders, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"GroupRingElement({self.ring.name}{self.group.name}, {self.coeffs.tolist()})"

    def __str__(self) -> str:
        G = self.group
        terms = []
        for i in np.flatnonzero(self.coeffs):
            c = int(self.coeffs[i])
            if i == 0:
                terms.append(str(c))
                continue
            g = "g" if G.is_cyclic else str(G.element_of(int(i)))
            if G.is_cyclic and i > 1:
                g = f"g^{i}"
            terms.append(g if c == 1 else f"{c}{g}")
        return " + ".join(terms) if terms else "0"

    def to_dict(self) -> Dict:
        return {"modulus": self.ring.modulus, "group": list(self.group.orders), "coeffs": self.coeffs.tolist()}


ElementOrCoeffs = Union[GroupRingElement, Sequence[int], np.ndarray]


def add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x + y


def mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def scalar_mul(r: int, x: GroupRingElement) -> GroupRingElement:
    return x * r


def power(x: GroupRingElement, k: int) -> GroupRingElement:
    if k < 0:
        raise InvalidExponentError(f"Negative power {k} of a group ring element")
    result = GroupRingElement.one(x.ring, x.group)
    base = x
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def augmentation(x: GroupRingElement) -> int:
    return int(x.coeffs.sum() % x.ring.modulus)


def g_minus_one(R: RingDescriptor, G: FiniteAbelianGroup, g: ElementLike) -> GroupRingElement:
    return GroupRingElement.group_element(R, G, g) - GroupRingElement.one(R, G)


@dataclass(frozen=True, eq=False)
class IdealSubspace:
    """
    An ideal of F_p G stored by its RREF basis.

    Two subspaces are equal exactly when their bases are equal as matrices.
    """
    ring: RingDescriptor
    group: FiniteAbelianGroup
    basis: np.ndarray
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, R: RingDescriptor, G: FiniteAbelianGroup, rows: np.ndarray) -> "IdealSubspace":
        p = require_prime_field(R)
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, G.size)
        basis = linalg.rref(rows, p)
        basis.flags.writeable = False
        return cls(R, G, basis, linalg.pivots(basis))

    @classmethod
    def zero(cls, R: RingDescriptor, G: FiniteAbelianGroup) -> "IdealSubspace":
        return cls.span(R, G, np.zeros((0, G.size), dtype=np.int64))

    @classmethod
    def whole(cls, R: RingDescriptor, G: FiniteAbelianGroup) -> "IdealSubspace":
        return cls.span(R, G, np.eye(G.size, dtype=np.int64))

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[0])

    @property
    def is_proper(self) -> bool:
        return self.dimension < self.group.size

    @property
    def free_columns(self) -> List[int]:
        piv = set(self.pivots)
        return [c for c in range(self.group.size) if c not in piv]

    def reduce(self, vecs: np.ndarray) -> np.ndarray:
        return linalg.reduce_rows(self.basis, self.pivots, vecs, self.ring.modulus)

    def contains(self, x: ElementOrCoeffs) -> bool:
        vec = x.coeffs if isinstance(x, GroupRingElement) else np.asarray(x, dtype=np.int64)
        if isinstance(x, GroupRingElement):
            self._check(x.ring, x.group)
        return not self.reduce(vec).any()

    def __contains__(self, x: ElementOrCoeffs) -> bool:
        return self.contains(x)

    def is_subideal(self, other: "IdealSubspace") -> bool:
        """True iff self is contained in other."""
        other._check(self.ring, self.group)
        return self.dimension == 0 or not other.reduce(self.basis).any()

    def is_closed_under_group(self) -> bool:
        if self.dimension == 0:
            return True
        table = self.group.mult_table
        for g in self.group.generators():
            translated = np.empty_like(self.basis)
            translated[:, table[g]] = self.basis
            if self.reduce(translated).any():
                return False
        return True

    def _check(self, R: RingDescriptor, G: FiniteAbelianGroup):
        if R.modulus != self.ring.modulus or G.orders != self.group.orders:
            raise IncompatibleOperandsError(
                f"{R.name}{G.name} does not match ideal of {self.ring.name}{self.group.name}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealSubspace):
            return NotImplemented
        return (self.ring.modulus == other.ring.modulus
                and self.group.orders == other.group.orders
                and self.basis.shape == other.basis.shape
                and bool(np.array_equal(self.basis, other.basis)))

    def __hash__(self):
        return hash((self.ring.modulus, self.group.orders, self.basis.shape, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"IdealSubspace({self.ring.name}{self.group.name}, dim={self.dimension})"

    def to_dict(self) -> Dict:
        return {
            "modulus": self.ring.modulus,
            "group": list(self.group.orders),
            "dimension": self.dimension,
            "basis": self.basis.tolist(),
        }


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """basis_i * basis_j = sum_k table[i, j, k] basis_k, entries mod `modulus`."""
    dimension: int
    modulus: int
    table: np.ndarray
    basis_labels: Tuple[int, ...] = ()

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.transpose(1, 0, 2)))

    def is_associative(self) -> bool:
        if self.dimension > 16:
            raise TooLargeError(f"Associativity check refused for dimension {self.dimension} > 16")
        c, n, d = self.table, self.modulus, self.dimension
        # (b_i b_j) b_k against b_i (b_j b_k), summed over l with a reduction per term
        lhs = np.zeros((d, d, d, d), dtype=np.int64)
        rhs = np.zeros((d, d, d, d), dtype=np.int64)
        for l in range(d):
            lhs = (lhs + c[:, :, l, None, None] * c[l][None, None, :, :]) % n
            rhs = (rhs + c[None, :, :, l, None] * c[:, l, None, None, :]) % n
        return bool(np.array_equal(lhs, rhs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return (self.dimension == other.dimension and self.modulus == other.modulus
                and bool(np.array_equal(self.table, other.table)))


def augmentation_ideal(R: RingDescriptor, G: FiniteAbelianGroup) -> IdealSubspace:
    require_prime_field(R)
    rows = np.eye(G.size, dtype=np.int64)[1:]
    rows[:, 0] = -1
    return IdealSubspace.span(R, G, rows)


def phi(R: RingDescriptor, G: FiniteAbelianGroup, N: Subgroup) -> IdealSubspace:
    """
    The ideal generated by {h - 1 : h in N}.

    Generators of N are enough: h1*h2 - 1 = (h1 - 1)*h2 + (h2 - 1).
    """
    require_prime_field(R)
    gens = [G.index_of(h) for h in N.generators] or N.minimal_generators()
    if N.is_trivial:
        return IdealSubspace.zero(R, G)

    table = G.mult_table
    rows = []
    for h in gens:
        block = np.zeros((G.size, G.size), dtype=np.int64)
        idx = np.arange(G.size)
        # row g is (h - 1)*g = hg - g
        block[idx, table[h]] += 1
        block[idx, idx] -= 1
        rows.append(block)
    J = IdealSubspace.span(R, G, np.vstack(rows))
    logging.debug(f"Phi({N.label}) in {R.name}{G.name}: dim {J.dimension}")
    return J


def psi(J: IdealSubspace) -> Subgroup:
    """The subgroup {g : g - 1 in J}."""
    G = J.group
    vecs = np.eye(G.size, dtype=np.int64)
    vecs[:, 0] -= 1
    members = np.flatnonzero(~J.reduce(vecs).any(axis=1))
    N = subgroup_from_elements(G, members)
    if N is None:
        raise NotAnIdealError(f"Psi of {J!r} is not a subgroup, the subspace is not an ideal")
    return N


psi_fiber_key = psi


def ideal_generated(xs: Iterable[GroupRingElement], ring: Optional[RingDescriptor] = None,
                    group: Optional[FiniteAbelianGroup] = None) -> IdealSubspace:
    xs = list(xs)
    if not xs:
        if ring is None or group is None:
            raise InvalidInputError("ideal_generated of an empty list needs ring and group")
        return IdealSubspace.zero(ring, group)
    R, G = xs[0].ring, xs[0].group
    for x in xs[1:]:
        xs[0]._check(x)
    return IdealSubspace.span(R, G, np.vstack([x.regular_matrix() for x in xs]))


def contains(J: IdealSubspace, x: ElementOrCoeffs) -> bool:
    return J.contains(x)


def in_phi_image(J: IdealSubspace, cache=None) -> Optional[Subgroup]:
    """Psi(J) when Phi(Psi(J)) == J, otherwise None."""
    N = psi(J)
    image = cache.get_phi(J.ring, J.group, N) if cache is not None else phi(J.ring, J.group, N)
    return N if image == J else None


def quotient_structure(J: IdealSubspace) -> StructureConstants:
    """
    Structure constants of RG/J.

    The basis is the cosets of the coordinate vectors at the non-pivot
    columns of J; every product of group elements is reduced mod J and read
    off on those columns.
    """
    if not J.is_proper:
        raise NotAProperIdealError(f"Quotient of {J.ring.name}{J.group.name} by itself")
    G = J.group
    free = J.free_columns
    d = len(free)
    products = G.mult_table[np.ix_(free, free)].ravel()
    reduced = J.reduce(np.eye(G.size, dtype=np.int64)[products])
    table = reduced[:, free].reshape(d, d, d)
    table.flags.writeable = False
    return StructureConstants(d, J.ring.modulus, table, tuple(free))


def group_algebra_structure(R: RingDescriptor, QG: QuotientGroup) -> StructureConstants:
    """Structure constants of R(G/N) in the coset basis."""
    size = QG.size
    table = np.zeros((size, size, size), dtype=np.int64)
    a, b = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    table[a, b, QG.table] = 1
    table.flags.writeable = False
    return StructureConstants(size, R.modulus, table, tuple(QG.coset_representatives))


def verify_quotient_iso(R: RingDescriptor, G: FiniteAbelianGroup, N: Subgroup, cache=None) -> bool:
    """
    Check that g + Phi(N) -> gN is an algebra isomorphism RG/Phi(N) -> R(G/N).

    Every g must land on the basis vector of its coset, the free columns must
    hit each coset once, and the relabelled tables must agree.
    """
    J = cache.get_phi(R, G, N) if cache is not None else phi(R, G, N)
    if not J.is_proper:
        return False
    S = quotient_structure(J)
    QG = quotient(G, N)
    target = group_algebra_structure(R, QG)

    free = np.array(S.basis_labels, dtype=np.int64)
    relabel = QG.coset_of[free]
    if S.dimension != QG.size or np.unique(relabel).size != QG.size:
        logging.debug(f"{R.name}{G.name}/Phi({N.label}): free columns do not match the cosets")
        return False

    # image of each group element under RG -> RG/J, written in the coset basis
    images = J.reduce(np.eye(G.size, dtype=np.int64))[:, free]
    expected = np.zeros((G.size, S.dimension), dtype=np.int64)
    position = np.empty(QG.size, dtype=np.int64)
    position[relabel] = np.arange(S.dimension)
    expected[np.arange(G.size), position[QG.coset_of]] = 1
    if not np.array_equal(images, expected):
        return False

    relabelled = np.zeros_like(target.table)
    i, j, k = np.meshgrid(relabel, relabel, relabel, indexing="ij")
    relabelled[i, j, k] = S.table
    return bool(np.array_equal(relabelled, target.table))


