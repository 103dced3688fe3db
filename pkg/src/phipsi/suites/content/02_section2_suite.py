from .. import suite_class
from ...cruncher import bruteforce
from ...cruncher.groupring import g_minus_one, phi
from ...cruncher.groups import cyclic_factorizations, make_group, supp, sylow_component
from ...cruncher.modring import make_ring
from ...cruncher.radicals import (ClosedForm, aug_in_nilradical, jacobson_closed_form, jacobson_generators,
                                  nilradical_closed_form, nilradical_frobenius)

# composite coefficient rings small enough for exhaustive scans
tiny_rings = ((4, (2,)), (9, (3,)), (4, (2, 3)), (8, (2,)), (6, (2,)), (4, (4,)), (6, (3,)))
closed_form_moduli = (2, 3, 4, 5, 6, 8, 9, 10, 12)


def return_obj(bounds, cache):
    s = suite_class.suite("section2", "02_section2_suite", "Nilradical and Jacobson radical", bounds, cache)

    for p in bounds.primes:
        for orders in cyclic_factorizations(bounds.max_order_radical):
            s.add_case("frobenius", f"F_{p} {list(orders)}", field_checks(p, orders, bounds), p=p, group=orders)

    for n, orders in tiny_rings:
        s.add_case("composite", f"Z/{n} {list(orders)}", composite_checks(n, orders), n=n, group=orders)

    for n in closed_form_moduli:
        s.add_case("closed_form", f"Z/{n}", closed_form_checks(n, bounds), n=n)

    return s


def field_checks(p, orders, bounds):
    def check(expect):
        R, G = make_ring(p), make_group(orders)
        frob = nilradical_frobenius(R, G)
        expected = phi(R, G, sylow_component(G, p))

        # trivial G_p gives Phi(1) = 0, which covers p outside supp G
        expect.equal("frobenius_is_phi_Gp", expected, frob)

        nil = nilradical_closed_form(R, G)
        jac = jacobson_closed_form(R, G)
        if p in supp(G):
            expect.equal("nil_closed_form", ClosedForm.PHI_OF, nil.closed_form)
            expect.equal("jac_closed_form", ClosedForm.PHI_OF, jac.closed_form)
        else:
            expect.equal("nil_closed_form", ClosedForm.ZERO, nil.closed_form)
            expect.equal("jac_closed_form", ClosedForm.ZERO, jac.closed_form)
        expect.equal("nil_subspace", frob, nil.subspace)
        expect.equal("jac_subspace", frob, jac.subspace)

        if bruteforce.ring_size(R, G) <= bounds.scan_limit:
            as_set = bruteforce.subspace_elements(frob)
            expect.equal("nilpotent_scan", as_set, bruteforce.nilpotent_bruteforce(R, G))
            expect.equal("jacobson_scan", as_set, bruteforce.jacobson_bruteforce(R, G))
    return check


def composite_checks(n, orders):
    def check(expect):
        R, G = make_ring(n), make_group(orders)
        nilpotent = bruteforce.nilpotent_bruteforce(R, G)
        jacobson = bruteforce.jacobson_bruteforce(R, G)

        # finite ring, so the two radicals agree
        expect.equal("nil_equals_jacobson", nilpotent, jacobson)
        expect.equal("eq21_closure", jacobson, bruteforce.ideal_closure(R, G, jacobson_generators(R, G)))

        if aug_in_nilradical(R, G):
            for g in range(1, G.size):
                y = g_minus_one(R, G, g)
                expect.true(f"g-1 nilpotent {G.element_of(g)}", tuple(y.coeffs.tolist()) in nilpotent)

        report = nilradical_closed_form(R, G)
        expect.equal("reducedness", report.closed_form is ClosedForm.ZERO, len(nilpotent) == 1)
    return check


def closed_form_checks(n, bounds):
    def check(expect):
        R = make_ring(n)
        for orders in cyclic_factorizations(bounds.max_order_radical):
            G = make_group(orders)
            report = nilradical_closed_form(R, G)
            if report.closed_form is ClosedForm.PHI_OF and not report.subgroup.is_trivial:
                expect.true(f"prop22_forward {G.name}", R.is_reduced and R.characteristic in supp(G))
            if report.closed_form is ClosedForm.PHI_OF:
                expect.true(f"prime_char {G.name}", R.is_field)
    return check
