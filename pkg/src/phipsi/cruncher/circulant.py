"""
Principal ideals of F_p C_m.

For x = sum r_i g^i the equation x*y = g^n - 1 is a linear system in the
coefficients s_0..s_{m-1} of y. Its matrix A_x is circulant: row r is the
equation for the coefficient of g^(m-1-r), column c the unknown s_c. The
augmented matrix appends the right-hand side, +1 on the g^n row and -1 on the
g^0 row.
"""
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Dict, List, Optional

import numpy as np
import logging

from ..errors import InvalidExponentError, UnsupportedGroupError, UnsupportedRingError
from . import linalg
from .groupring import GroupRingElement
from .groups import Subgroup, subgroup_generated


class Verdict(Enum):
    IN_IMAGE = "in-image"
    NOT_IN_IMAGE = "not-in-image"
    ZERO = "zero-element"
    UNIT = "unit-element"


D_NOT_DIVISOR = "d-not-divisor"
CONDITION42_FAILED = "condition42-failed"
RANK_MISMATCH = "rank-mismatch"


@dataclass(frozen=True, eq=False)
class CirculantMatrix:
    m: int
    p: int
    rows: np.ndarray

    def rank(self) -> int:
        return linalg.rank(self.rows, self.p)


@dataclass
class ClassificationReport:
    verdict: Verdict
    m: int
    modulus: int
    rank_A: int
    d: Optional[int] = None
    e: Optional[int] = None
    condition42_residues: Optional[List[int]] = None
    rank_A_tilde: Optional[int] = None
    reason: Optional[str] = None
    subgroup: Optional[Subgroup] = None
    quotient: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict.value,
            "m": self.m,
            "d": self.d,
            "e": self.e,
            "rank_A": self.rank_A,
            "rank_A_tilde": self.rank_A_tilde,
            "condition42": self.condition42_residues,
            "reason": self.reason,
            "subgroup": self.subgroup.label if self.subgroup is not None else None,
            "quotient": self.quotient,
        }


def _require_cyclic_field(x: GroupRingElement) -> int:
    if not x.ring.is_field:
        raise UnsupportedRingError(f"Principal ideal classification needs a prime field, got {x.ring.name}")
    if not x.group.is_cyclic:
        raise UnsupportedGroupError(f"Principal ideal classification needs a cyclic group, got {x.group.name}")
    return x.ring.modulus


def _check_exponent(m: int, n: int):
    if not 0 < n < m:
        raise InvalidExponentError(f"Expected 0 < n < m, got n={n}, m={m}")


def build_circulant(x: GroupRingElement) -> CirculantMatrix:
    p = _require_cyclic_field(x)
    m = x.group.size
    r = np.arange(m)
    rows = x.coeffs[(m - 1 - r[:, None] - r[None, :]) % m]
    return CirculantMatrix(m, p, rows)


def build_augmented(x: GroupRingElement, n: int) -> np.ndarray:
    A = build_circulant(x)
    _check_exponent(A.m, n)
    rhs = np.zeros((A.m, 1), dtype=np.int64)
    rhs[A.m - 1 - n, 0] = 1
    rhs[A.m - 1, 0] = A.p - 1
    return np.hstack([A.rows, rhs])


def contains_power_minus_one(x: GroupRingElement, n: int) -> bool:
    """g^n - 1 in xRG, decided by comparing the ranks of A_x and its augmentation."""
    A = build_circulant(x)
    return A.rank() == linalg.rank(build_augmented(x, n), A.p)


def condition42_residues(x: GroupRingElement, d: int) -> List[int]:
    """The d sums r_j + r_(j+d) + ... over each residue class j mod d."""
    p = x.ring.modulus
    return [int(x.coeffs[j::d].sum() % p) for j in range(d)]


def in_power_ideal(x: GroupRingElement, n: int) -> bool:
    """x in (g^n - 1)RG. Only d = gcd(m, n) matters since (g^n - 1)RG = (g^d - 1)RG."""
    _require_cyclic_field(x)
    m = x.group.size
    _check_exponent(m, n)
    return not any(condition42_residues(x, gcd(m, n)))


def principal_dimension(x: GroupRingElement) -> int:
    """dim xRG, the rank of A_x."""
    return build_circulant(x).rank()


def classify_principal(x: GroupRingElement) -> ClassificationReport:
    """
    Decide whether xRG = Phi(N) for some subgroup N of C_m.

    The only candidate is N = <g^d> with d = m - rank(A_x); the checks run in
    order (d divides m, the progression sums vanish, the augmented rank does
    not grow) and the first failure is the reason.
    """
    A = build_circulant(x)
    m, p = A.m, A.p
    rank_A = A.rank()
    report = ClassificationReport(Verdict.NOT_IN_IMAGE, m, p, rank_A)

    if rank_A == 0:
        report.verdict = Verdict.ZERO
        return report
    if rank_A == m:
        report.verdict = Verdict.UNIT
        report.d = 0
        return report

    d = m - rank_A
    report.d = d
    if m % d:
        report.reason = D_NOT_DIVISOR
        logging.debug(f"{x}: d={d} does not divide {m}")
        return report

    report.e = m // d
    report.condition42_residues = condition42_residues(x, d)
    if any(report.condition42_residues):
        report.reason = CONDITION42_FAILED
        return report

    report.rank_A_tilde = linalg.rank(build_augmented(x, d), p)
    if report.rank_A_tilde != rank_A:
        report.reason = RANK_MISMATCH
        return report

    report.verdict = Verdict.IN_IMAGE
    report.subgroup = subgroup_generated(x.group, [d])
    report.quotient = f"{x.ring.name} C_{d}"
    return report


def solve_power_minus_one(x: GroupRingElement, n: int) -> Optional[GroupRingElement]:
    """Some y with x*y = g^n - 1, or None."""
    A = build_circulant(x)
    rhs = build_augmented(x, n)[:, -1]
    s = linalg.solve(A.rows, rhs, A.p)
    if s is None:
        return None
    return GroupRingElement(x.ring, x.group, s)


def divide_by_power_minus_one(x: GroupRingElement, n: int) -> Optional[GroupRingElement]:
    """Some z with (g^n - 1)*z = x, or None."""
    p = _require_cyclic_field(x)
    _check_exponent(x.group.size, n)
    w = GroupRingElement.group_element(x.ring, x.group, n) - 1
    # z @ M = w*z with M the regular matrix of w
    t = linalg.solve(w.regular_matrix().T, x.coeffs, p)
    if t is None:
        return None
    return GroupRingElement(x.ring, x.group, t)
