"""
Nilradical and Jacobson radical of RG.

The closed forms say when a radical is zero or Phi(G_p); outside those
hypotheses the report still carries the known generators and containments.
Over prime fields the Frobenius kernel gives an independent answer.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional
import logging

import numpy as np

from . import linalg
from .groupring import (GroupRingElement, IdealSubspace, g_minus_one, ideal_generated, phi,
                        require_prime_field)
from .groups import FiniteAbelianGroup, Subgroup, supp, sylow_component
from .modring import RingDescriptor, colon_jacobson, is_zero_divisor


class ClosedForm(Enum):
    ZERO = "zero"
    PHI_OF = "phi-of"
    NONE = "no-closed-form-in-scope"


@dataclass
class RadicalReport:
    kind: str
    ring: RingDescriptor
    group: FiniteAbelianGroup
    closed_form: ClosedForm
    subgroup: Optional[Subgroup] = None
    generators: List[GroupRingElement] = field(default_factory=list)
    containment_facts: List[str] = field(default_factory=list)
    subspace: Optional[IdealSubspace] = None

    def to_dict(self) -> Dict:
        out = {
            "kind": self.kind,
            "ring": self.ring.name,
            "group": self.group.name,
            "closed_form": self.closed_form.value,
            "subgroup": self.subgroup.label if self.subgroup is not None else None,
            "containment_facts": list(self.containment_facts),
            "generators": [x.coeffs.tolist() for x in self.generators],
        }
        if self.subspace is not None:
            out["dimension"] = self.subspace.dimension
            out["basis"] = self.subspace.basis.tolist()
        return out


def aug_in_nilradical(R: RingDescriptor, G: FiniteAbelianGroup) -> bool:
    """True iff I(G) is nil: G is a p-group and p is nilpotent in R."""
    primes = supp(G)
    if not primes:
        # I(1) = 0
        return True
    return len(primes) == 1 and R.in_nilradical(primes[0])


def _sylow_generators(R: RingDescriptor, G: FiniteAbelianGroup, p: int, r: int = 1) -> List[GroupRingElement]:
    Gp = sylow_component(G, p)
    return [g_minus_one(R, G, g) * r for g in Gp.elements if g != 0]


def _prime_facts(R: RingDescriptor, G: FiniteAbelianGroup) -> List[str]:
    facts = []
    for p in supp(G):
        if R.in_nilradical(p):
            facts.append(f"Phi(G_{p}) ⊆ N(RG): {p} is nilpotent in {R.name}")
        if is_zero_divisor(R, p):
            facts.append(f"{p} is a zero divisor of {R.name}")
    if aug_in_nilradical(R, G):
        facts.append("I(G) ⊆ N(RG)")
    return facts


def nilradical_closed_form(R: RingDescriptor, G: FiniteAbelianGroup) -> RadicalReport:
    primes = supp(G)
    facts = _prime_facts(R, G)
    zero_divisors = [p for p in primes if is_zero_divisor(R, p)]
    reduced = R.is_reduced and not zero_divisors
    facts.append("RG is reduced" if reduced else "RG is not reduced")

    if reduced:
        subspace = IdealSubspace.zero(R, G) if R.is_field else None
        return RadicalReport("nilradical", R, G, ClosedForm.ZERO, containment_facts=facts, subspace=subspace)

    if R.is_reduced and R.modulus in primes:
        p = R.modulus
        Gp = sylow_component(G, p)
        return RadicalReport("nilradical", R, G, ClosedForm.PHI_OF, subgroup=Gp,
                             generators=_sylow_generators(R, G, p), containment_facts=facts,
                             subspace=phi(R, G, Gp))

    generators = []
    if R.nilradical_generator:
        generators.extend(GroupRingElement.group_element(R, G, g, R.nilradical_generator) for g in range(G.size))
        facts.append(f"N({R.name})G ⊆ N(RG)")
    for p in primes:
        if R.in_nilradical(p):
            generators.extend(_sylow_generators(R, G, p))
    return RadicalReport("nilradical", R, G, ClosedForm.NONE, generators=generators, containment_facts=facts)


def frobenius_exponent(p: int, size: int) -> int:
    """Smallest t with p**t >= size."""
    t = 0
    while p**t < size:
        t += 1
    return t


def nilradical_frobenius(R: RingDescriptor, G: FiniteAbelianGroup) -> IdealSubspace:
    """
    Kernel of x -> x^(p^t) on F_p G, t minimal with p^t >= |G|.

    In characteristic p the map sends sum c_g g to sum c_g g^(p^t), so it is
    linear and its kernel is exactly the set of nilpotent elements.
    """
    p = require_prime_field(R)
    t = frobenius_exponent(p, G.size)
    images = G.ravel((G.exponent_matrix * p**t) % G.moduli)

    L = np.zeros((G.size, G.size), dtype=np.int64)
    L[images, np.arange(G.size)] = 1
    J = IdealSubspace.span(R, G, linalg.kernel_basis(L, p))
    logging.debug(f"Frobenius kernel of {R.name}{G.name} (t={t}): dim {J.dimension}")
    return J


def jacobson_generators(R: RingDescriptor, G: FiniteAbelianGroup) -> List[GroupRingElement]:
    """J(R)G together with r(g - 1), g in G_p, r in (J(R) : p), for every p in supp G."""
    generators = []
    if R.jacobson_generator:
        generators.extend(GroupRingElement.group_element(R, G, g, R.jacobson_generator) for g in range(G.size))
    for p in supp(G):
        r = colon_jacobson(R, p)
        if r:
            generators.extend(_sylow_generators(R, G, p, r))
    return generators


def jacobson_closed_form(R: RingDescriptor, G: FiniteAbelianGroup) -> RadicalReport:
    generators = jacobson_generators(R, G)
    facts = []
    if R.jacobson_generator:
        facts.append(f"J({R.name})G ⊆ J(RG)")
    for p in supp(G):
        if colon_jacobson(R, p):
            facts.append(f"(J({R.name}) : {p})·I(G_{p}) ⊆ J(RG)")

    if not generators:
        subspace = IdealSubspace.zero(R, G) if R.is_field else None
        return RadicalReport("jacobson", R, G, ClosedForm.ZERO, containment_facts=facts, subspace=subspace)

    if R.jacobson_generator == 0 and R.is_field and R.modulus in supp(G):
        Gp = sylow_component(G, R.modulus)
        return RadicalReport("jacobson", R, G, ClosedForm.PHI_OF, subgroup=Gp, generators=generators,
                             containment_facts=facts, subspace=phi(R, G, Gp))

    subspace = ideal_generated(generators) if R.is_field else None
    return RadicalReport("jacobson", R, G, ClosedForm.NONE, generators=generators,
                         containment_facts=facts, subspace=subspace)
