"""
Coefficient rings Z/n.

A RingDescriptor carries the modulus together with the attributes the
radical computations need (reducedness, nilradical and Jacobson generators).
Residues are plain ints kept in [0, n).
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Tuple

import sympy

from ..errors import InvalidModulusError, NotAUnitError


@dataclass(frozen=True)
class RingDescriptor:
    modulus: int
    characteristic: int
    is_field: bool
    is_reduced: bool
    nilradical_generator: int
    jacobson_generator: int
    primes: Tuple[int, ...]

    @property
    def radical(self) -> int:
        """Product of the distinct primes dividing n, as an integer."""
        return prod(self.primes)

    @property
    def name(self) -> str:
        return f"F_{self.modulus}" if self.is_field else f"Z/{self.modulus}"

    def __str__(self) -> str:
        return self.name

    def reduce(self, r: int) -> int:
        return r % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def inv(self, a: int) -> int:
        try:
            return pow(a % self.modulus, -1, self.modulus)
        except ValueError:
            raise NotAUnitError(f"{a} is not a unit of {self.name}")

    def is_unit(self, a: int) -> bool:
        return gcd(a % self.modulus, self.modulus) == 1

    def in_nilradical(self, a: int) -> bool:
        # a is nilpotent in Z/n iff every prime of n divides a
        return a % self.radical == 0

    def units(self) -> Tuple[int, ...]:
        return tuple(r for r in range(1, self.modulus) if self.is_unit(r))


@lru_cache(maxsize=None)
def make_ring(n: int) -> RingDescriptor:
    if n < 2:
        raise InvalidModulusError(f"Modulus must be at least 2, got {n}")

    primes = tuple(sorted(sympy.factorint(n)))
    nil_gen = prod(primes) % n

    return RingDescriptor(
        modulus=n,
        characteristic=n,
        is_field=(len(primes) == 1 and primes[0] == n),
        is_reduced=(nil_gen == 0),
        nilradical_generator=nil_gen,
        # Z/n is finite, so the Jacobson radical is the nilradical
        jacobson_generator=nil_gen,
        primes=primes,
    )


def is_zero_divisor(R: RingDescriptor, p: int) -> bool:
    """True iff p*s == 0 in R for some nonzero s."""
    return gcd(p, R.modulus) > 1


def colon_jacobson(R: RingDescriptor, p: int) -> int:
    """Generator of (J(R) :_R p) = {r : r*p in J(R)}."""
    # J(R) is the ideal of multiples of j; generator 0 means the zero ideal
    j = gcd(R.jacobson_generator, R.modulus)
    return (j // gcd(j, p)) % R.modulus
