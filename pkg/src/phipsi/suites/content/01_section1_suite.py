import numpy as np

from .. import suite_class
from ...cruncher import bruteforce
from ...cruncher.groupring import augmentation_ideal, in_phi_image, psi, verify_quotient_iso
from ...cruncher.groups import all_subgroups, cyclic_factorizations, make_group, quotient
from ...cruncher.modring import make_ring

# (modulus, group) pairs for the randomized augmentation check
augmentation_rings = ((2, (4,)), (3, (3,)), (4, (2,)), (6, (2, 2)), (5, (12,)), (9, (3, 3)))


def return_obj(bounds, cache):
    s = suite_class.suite("section1", "01_section1_suite", "Phi/Psi round trip and quotient isomorphisms", bounds, cache)

    for p in bounds.primes:
        for orders in cyclic_factorizations(bounds.max_order_phi):
            s.add_case("psi_phi", f"F_{p} {list(orders)}", phi_checks(p, orders, cache), p=p, group=orders)

    for p in bounds.primes:
        for orders in cyclic_factorizations(bounds.max_order_quotient):
            s.add_case("quotient_iso", f"F_{p} {list(orders)}", quotient_checks(p, orders, cache), p=p, group=orders)

    for n, orders in augmentation_rings:
        s.add_case("augmentation", f"Z/{n} {list(orders)}", augmentation_checks(n, orders, bounds), n=n, group=orders)

    return s


def phi_checks(p, orders, cache):
    def check(expect):
        R, G = make_ring(p), make_group(orders)
        subgroups = all_subgroups(G)
        phis = {N: cache.get_phi(R, G, N) for N in subgroups}
        aug = augmentation_ideal(R, G)
        expect.equal("aug_dim", G.size - 1, aug.dimension)

        for N, J in phis.items():
            expect.equal(f"psi_phi {N.label}", N, psi(J))
            expect.equal(f"dim {N.label}", G.size - G.size // N.order, J.dimension)
            expect.true(f"inside_aug {N.label}", J.is_subideal(aug))
            expect.true(f"closed {N.label}", J.is_closed_under_group())
            expect.equal(f"round_trip {N.label}", N, in_phi_image(J, cache))

        for N in subgroups:
            members = set(N.elements)
            for M in subgroups:
                if N.order < M.order and members.issubset(M.elements):
                    expect.true(f"monotone {N.label} {M.label}", phis[N].is_subideal(phis[M]))
    return check


def quotient_checks(p, orders, cache):
    def check(expect):
        R, G = make_ring(p), make_group(orders)
        for N in all_subgroups(G):
            expect.true(f"iso {N.label}", verify_quotient_iso(R, G, N, cache))
            expect.true(f"cosets {N.label}", quotient(G, N).is_well_defined())
    return check


def augmentation_checks(n, orders, bounds):
    def check(expect):
        R, G = make_ring(n), make_group(orders)
        rng = np.random.default_rng(bounds.seed)
        X = rng.integers(0, n, size=(bounds.random_pairs, G.size))
        Y = rng.integers(0, n, size=(bounds.random_pairs, G.size))
        products = bruteforce.multiply_rows(X, Y, G, n)
        lhs = products.sum(axis=1) % n
        rhs = (X.sum(axis=1) * Y.sum(axis=1)) % n
        mismatches = int(np.count_nonzero(lhs != rhs))
        expect.equal(f"multiplicative over {R.name}{G.name}", 0, mismatches)
    return check
