"""
Principal ideals of F_p G that are not of the form Phi(N).

Each constructor builds the element, then asks in_phi_image whether its ideal
is a Phi(N). Exclusion is always taken from that answer, never assumed.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional
import logging

import sympy

from ..cruncher.groupring import (GroupRingElement, IdealSubspace, g_minus_one, ideal_generated,
                                  in_phi_image, phi)
from ..cruncher.groups import FiniteAbelianGroup, Subgroup, subgroup_generated
from ..cruncher.modring import make_ring
from ..cruncher.radicals import frobenius_exponent
from ..errors import NotApplicableError


@dataclass
class Counterexample:
    name: str
    element: GroupRingElement
    ideal: IdealSubspace
    image_of: Optional[Subgroup]
    chain_dims: List[int] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def excluded(self) -> bool:
        return self.image_of is None

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "ring": self.element.ring.name,
            "group": self.element.group.name,
            "element": str(self.element),
            "coeffs": self.element.coeffs.tolist(),
            "dimension": self.ideal.dimension,
            "excluded": self.excluded,
            "chain_dims": self.chain_dims,
            "checks": self.checks,
        }


def _first_of_order(G: FiniteAbelianGroup, k: int) -> int:
    elements = G.elements_of_order(k)
    if not elements:
        raise NotApplicableError(f"{G.name} has no element of order {k}")
    return elements[0]


def counterexample_lemma34(p: int, G: FiniteAbelianGroup, cache=None) -> Counterexample:
    """(g - 1)^2 for g of order p, p odd and G a nontrivial p-group."""
    if p == 2 or not sympy.isprime(p):
        raise NotApplicableError(f"Needs an odd prime, got {p}")
    if G.size == 1 or not G.is_p_group(p):
        raise NotApplicableError(f"{G.name} is not a nontrivial {p}-group")
    R = make_ring(p)
    g = _first_of_order(G, p)

    y = g_minus_one(R, G, g)
    x = y ** 2
    J = ideal_generated([x])
    J1 = ideal_generated([y])
    ce = Counterexample("square", x, J, in_phi_image(J, cache), chain_dims=[0, J.dimension, J1.dimension])
    ce.checks["nonzero"] = J.dimension > 0
    ce.checks["strictly_inside_(g-1)RG"] = J.is_subideal(J1) and J.dimension < J1.dimension
    logging.debug(f"{R.name}{G.name}: (g-1)^2 spans dim {J.dimension}, excluded={ce.excluded}")
    return ce


def counterexample_lemma35(G: FiniteAbelianGroup, cache=None) -> Counterexample:
    """(g - 1)^3 over F_2 for g of order 4 in a 2-group."""
    if G.size == 1 or not G.is_p_group(2):
        raise NotApplicableError(f"{G.name} is not a nontrivial 2-group")
    R = make_ring(2)
    g = _first_of_order(G, 4)

    y = g_minus_one(R, G, g)
    x = y ** 3
    I = ideal_generated([x])
    square = ideal_generated([y ** 2])
    g2 = G.power_index(g, 2)
    ce = Counterexample("cube", x, I, in_phi_image(I, cache), chain_dims=[0, I.dimension, square.dimension])
    ce.checks["chain"] = 0 < I.dimension < square.dimension and I.is_subideal(square)
    ce.checks["square_is_g2_minus_one"] = square == ideal_generated([g_minus_one(R, G, g2)])
    ce.checks["square_is_phi"] = square == phi(R, G, subgroup_generated(G, [g2]))
    return ce


def counterexample_lemma36(G: FiniteAbelianGroup, cache=None) -> Counterexample:
    """(1 + f1)(1 + f2) = 1 + f1 + f2 + f1f2 over F_2, G elementary abelian of order at least 4."""
    if G.size < 4 or not G.is_p_group(2) or G.exponent() != 2:
        raise NotApplicableError(f"{G.name} is not an elementary abelian 2-group of order at least 4")
    R = make_ring(2)
    f1, f2 = G.generators()[:2]

    one = GroupRingElement.one(R, G)
    x = (one + GroupRingElement.group_element(R, G, f1)) * (one + GroupRingElement.group_element(R, G, f2))
    J = ideal_generated([x])
    ce = Counterexample("product", x, J, in_phi_image(J, cache), chain_dims=[0, J.dimension])
    ce.checks["distinct"] = G.op_index(f1, f2) not in (0, f1, f2)
    ce.checks["nonzero"] = J.dimension > 0
    return ce


def unique_prime_check(p: int, G: FiniteAbelianGroup) -> bool:
    """
    True iff every g - 1 is nilpotent in F_p G.

    I(G) is then nil and of codimension 1, so it is the only prime ideal.
    Generators of G are enough since the nilpotents form an ideal.
    """
    R = make_ring(p)
    t = frobenius_exponent(p, G.size)
    return all((g_minus_one(R, G, g) ** (p ** t)).is_zero() for g in G.generators())
