from itertools import combinations, product
from math import gcd

import numpy as np

from .. import suite_class
from ...cruncher.circulant import (Verdict, classify_principal, contains_power_minus_one, divide_by_power_minus_one,
                                   in_power_ideal, principal_dimension, solve_power_minus_one)
from ...cruncher.groupring import (GroupRingElement, g_minus_one, ideal_generated, in_phi_image,
                                   verify_quotient_iso)
from ...cruncher.groups import make_group, subgroup_generated
from ...cruncher.laurent import LaurentElement, classify_laurent, laurent_division_oracle
from ...cruncher.modring import make_ring

chunk_size = 512
example_coeffs = [0, 1, 3, 1, 1, 3, 1, 1, 4, 1, 1, 3]


def return_obj(bounds, cache):
    s = suite_class.suite("section4", "04_section4_suite", "Circulant classifier against the subspace oracle",
                          bounds, cache)

    s.add_case("example", "F_5 C_12", example_check)

    for p, m in bounds.cyclic_pairs:
        if p not in bounds.primes:
            continue
        total = p**m
        for start in range(0, total, chunk_size):
            stop = min(start + chunk_size, total)
            s.add_case("classify", f"F_{p} C_{m} [{start}:{stop}]", classify_check(p, m, start, stop, bounds, cache),
                       p=p, m=m, start=start)
        s.add_case("cyclic_subgroups", f"C_{m}", cyclic_subgroup_check(m), m=m)
        s.add_case("invariance", f"F_{p} C_{m}", invariance_check(p, m, bounds), p=p, m=m)

    for p in bounds.primes:
        s.add_case("laurent", f"F_{p}", laurent_check(p), p=p)
    s.add_case("laurent", "Z", laurent_integer_check)

    return s


def example_check(expect):
    R, G = make_ring(5), make_group([12])
    x = GroupRingElement(R, G, example_coeffs)
    report = classify_principal(x)
    expect.equal("verdict", Verdict.IN_IMAGE, report.verdict)
    expect.equal("rank_A", 8, report.rank_A)
    expect.equal("d", 4, report.d)
    expect.equal("condition42", [0, 0, 0, 0], report.condition42_residues)
    expect.equal("rank_A_tilde", 8, report.rank_A_tilde)
    expect.equal("subgroup", "<g^4>", report.subgroup.label)
    expect.equal("quotient", "F_5 C_4", report.quotient)
    expect.true("quotient_iso", verify_quotient_iso(R, G, report.subgroup))


def elements(R, G, start, stop):
    n, m = R.modulus, G.size
    ids = np.arange(start, stop, dtype=np.int64)[:, None]
    coeffs = (ids // n ** np.arange(m, dtype=np.int64)[None, :]) % n
    return [GroupRingElement(R, G, row) for row in coeffs]


def classify_check(p, m, start, stop, bounds, cache):
    def check(expect):
        R, G = make_ring(p), make_group([m])
        membership = p**m <= bounds.membership_limit
        layout = p in (2, 3) and m <= bounds.layout_limit
        powers = {n: g_minus_one(R, G, n) for n in range(1, m)}
        power_ideals = {n: ideal_generated([y]) for n, y in powers.items()} if membership else {}
        seen = set()

        for x in elements(R, G, start, stop):
            J = ideal_generated([x])
            report = classify_principal(x)
            tag = str(x.coeffs.tolist())

            if J.dimension == 0:
                expected = (Verdict.ZERO, None)
            elif not J.is_proper:
                expected = (Verdict.UNIT, None)
            else:
                N = in_phi_image(J, cache)
                expected = (Verdict.NOT_IN_IMAGE, None) if N is None else (Verdict.IN_IMAGE, N)
            expect.equal(f"classify {tag}", expected, (report.verdict, report.subgroup))

            if layout:
                expect.equal(f"dimension {tag}", J.dimension, principal_dimension(x))

            if report.verdict is Verdict.IN_IMAGE and report.subgroup not in seen:
                seen.add(report.subgroup)
                expect.true(f"quotient_iso {report.subgroup.label}", verify_quotient_iso(R, G, report.subgroup, cache))

            if not membership:
                continue
            for n in range(1, m):
                contains = contains_power_minus_one(x, n)
                expect.equal(f"contains g^{n}-1 {tag}", J.contains(powers[n]), contains)
                if contains:
                    y = solve_power_minus_one(x, n)
                    expect.true(f"solution g^{n}-1 {tag}", y is not None and x * y == powers[n])
                inside = in_power_ideal(x, n)
                expect.equal(f"inside (g^{n}-1) {tag}", power_ideals[n].contains(x), inside)
                if inside:
                    z = divide_by_power_minus_one(x, n)
                    expect.true(f"quotient by g^{n}-1 {tag}", z is not None and powers[n] * z == x)
    return check


def cyclic_subgroup_check(m):
    def check(expect):
        G = make_group([m])
        for n in range(1, m):
            expect.equal(f"<g^{n}>", subgroup_generated(G, [gcd(m, n)]), subgroup_generated(G, [n]))
    return check


def invariance_check(p, m, bounds):
    def check(expect):
        R, G = make_ring(p), make_group([m])
        rng = np.random.default_rng(bounds.seed)
        samples = max(1, bounds.random_pairs // 100)
        for coeffs in rng.integers(0, p, size=(samples, m)):
            x = GroupRingElement(R, G, coeffs)
            g = int(rng.integers(0, m))
            u = int(rng.integers(1, p))
            base = classify_principal(x)
            for y in (x.translate(g), x * u):
                other = classify_principal(y)
                expect.equal(f"invariant {coeffs.tolist()}",
                             (base.verdict, base.subgroup, base.rank_A, base.d),
                             (other.verdict, other.subgroup, other.rank_A, other.d))
    return check


def laurent_elements(modulus, coefficients, max_terms=4, low=-4, high=4):
    exponents = range(low, high + 1)
    for k in range(0, max_terms + 1):
        for exps in combinations(exponents, k):
            for coeffs in product(coefficients, repeat=k):
                yield LaurentElement(modulus, dict(zip(exps, coeffs)))


def _laurent_agrees(expect, x):
    report = classify_laurent(x)
    k = laurent_division_oracle(x)
    expect.equal(f"laurent {x}", k, report.h_exponent if report.verdict is Verdict.IN_IMAGE else None)


def laurent_check(p):
    def check(expect):
        for x in laurent_elements(p, range(1, p)):
            _laurent_agrees(expect, x)
    return check


def laurent_integer_check(expect):
    for x in laurent_elements(0, (-2, -1, 1, 2), max_terms=2, low=-3, high=3):
        _laurent_agrees(expect, x)
    expect.equal("2g - 2", Verdict.NOT_IN_IMAGE, classify_laurent(LaurentElement(0, {1: 2, 0: -2})).verdict)
