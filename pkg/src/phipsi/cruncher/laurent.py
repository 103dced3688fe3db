"""
Laurent polynomials over F_p or the integers: the group ring of the infinite
cyclic group <g>. Modulus 0 stands for integer coefficients.
"""
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

import sympy

from ..errors import IncompatibleOperandsError, InvalidExponentError, UnsupportedRingError
from .circulant import Verdict


class LaurentElement:

    def __init__(self, modulus: int, terms: Mapping[int, int]):
        if modulus != 0 and not sympy.isprime(modulus):
            raise UnsupportedRingError(f"Laurent coefficients must be a prime field or the integers, got modulus {modulus}")
        self.modulus = modulus
        self.terms: Dict[int, int] = {}
        for e, c in terms.items():
            c = c % modulus if modulus else c
            if c:
                self.terms[int(e)] = int(c)

    @property
    def ring_name(self) -> str:
        return f"F_{self.modulus}" if self.modulus else "Z"

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit_coeff(self, c: int) -> bool:
        if self.modulus:
            return c % self.modulus != 0
        return c in (1, -1)

    @property
    def min_exponent(self) -> int:
        return min(self.terms)

    @property
    def max_exponent(self) -> int:
        return max(self.terms)

    def _check(self, other: "LaurentElement"):
        if self.modulus != other.modulus:
            raise IncompatibleOperandsError(f"Cannot combine Laurent elements over {self.ring_name} and {other.ring_name}")

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentElement(self.modulus, terms)

    def __neg__(self) -> "LaurentElement":
        return LaurentElement(self.modulus, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentElement") -> "LaurentElement":
        return self + (-other)

    def __mul__(self, other: "LaurentElement") -> "LaurentElement":
        self._check(other)
        terms: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentElement(self.modulus, terms)

    def shift(self, k: int) -> "LaurentElement":
        """Multiply by g^k."""
        return LaurentElement(self.modulus, {e + k: c for e, c in self.terms.items()})

    def divmod_by(self, k: int) -> Tuple["LaurentElement", "LaurentElement"]:
        """
        Long division by g^k - 1, k >= 1.

        Returns (q, r) with self = q*(g^k - 1) + r and the exponents of r in
        [min_exponent, min_exponent + k). The divisor is monic, so this is
        exact over the integers too.
        """
        if k < 1:
            raise InvalidExponentError(f"Divisor g^{k} - 1 needs k >= 1")
        if self.is_zero():
            return self, self
        low = self.min_exponent
        rem = dict(self.shift(-low).terms)
        quot: Dict[int, int] = {}
        while rem and max(rem) >= k:
            e = max(rem)
            c = rem.pop(e)
            quot[e - k] = quot.get(e - k, 0) + c
            # subtract c*g^(e-k)*(g^k - 1), the g^e term is already gone
            rem[e - k] = rem.get(e - k, 0) + c
            if self.modulus:
                rem[e - k] %= self.modulus
            if not rem[e - k]:
                del rem[e - k]
        q = LaurentElement(self.modulus, quot).shift(low)
        r = LaurentElement(self.modulus, rem).shift(low)
        return q, r

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return self.modulus == other.modulus and self.terms == other.terms

    def __hash__(self):
        return hash((self.modulus, tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "" if e == 0 else ("g" if e == 1 else f"g^{e}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts)

    def to_dict(self) -> Dict:
        return {"modulus": self.modulus, "terms": {str(e): c for e, c in sorted(self.terms.items())}}


@dataclass
class LaurentReport:
    verdict: Verdict
    element: LaurentElement
    h_exponent: Optional[int] = None
    unit: Optional[int] = None

    @property
    def subgroup(self) -> Optional[str]:
        if self.h_exponent is None:
            return None
        return "<g>" if self.h_exponent == 1 else f"<g^{self.h_exponent}>"

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict.value,
            "element": str(self.element),
            "h": None if self.h_exponent is None else f"g^{self.h_exponent}",
            "unit": self.unit,
            "subgroup": self.subgroup,
        }


def classify_laurent(x: LaurentElement) -> LaurentReport:
    """
    xRG = Phi(<h>) exactly when x = u*g1 - u*g2 with u a unit; then h = g1/g2.

    Units of RG are the monomials u*g^k here, since R is a domain and the
    group is torsion free.
    """
    if x.is_zero():
        return LaurentReport(Verdict.ZERO, x)
    if len(x.terms) == 1:
        (c,) = x.terms.values()
        verdict = Verdict.UNIT if x.is_unit_coeff(c) else Verdict.NOT_IN_IMAGE
        return LaurentReport(verdict, x)
    if len(x.terms) != 2:
        return LaurentReport(Verdict.NOT_IN_IMAGE, x)

    lo, hi = x.min_exponent, x.max_exponent
    c_hi, c_lo = x.terms[hi], x.terms[lo]
    cancels = (c_hi + c_lo) % x.modulus == 0 if x.modulus else c_hi + c_lo == 0
    if cancels and x.is_unit_coeff(c_hi):
        return LaurentReport(Verdict.IN_IMAGE, x, h_exponent=hi - lo, unit=c_hi)
    return LaurentReport(Verdict.NOT_IN_IMAGE, x)


def laurent_division_oracle(x: LaurentElement) -> Optional[int]:
    """The k >= 1 with x = u*g^a*(g^k - 1), u a unit, found by division; None if there is none."""
    if x.is_zero():
        return None
    for k in range(1, x.max_exponent - x.min_exponent + 1):
        q, r = x.divmod_by(k)
        if r.is_zero() and len(q.terms) == 1 and x.is_unit_coeff(next(iter(q.terms.values()))):
            return k
    return None
