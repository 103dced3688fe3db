from .. import suite_class
from ...cruncher.groupring import in_phi_image
from ...cruncher.groups import cyclic_factorizations, make_group, supp
from ...errors import NotApplicableError
from ...harness.census import ideal_census, maximal_ideals, theorem37_equivalence
from ...harness.counterexamples import (counterexample_lemma34, counterexample_lemma35, counterexample_lemma36,
                                        unique_prime_check)

square_cases = ((3, (3,)), (5, (5,)), (3, (9,)), (3, (3, 3)))
cube_cases = ((4,), (8,), (2, 4))
product_cases = ((2, 2), (2, 2, 2))
not_applicable = (
    ("square", lambda cache: counterexample_lemma34(2, make_group([2]), cache)),
    ("square", lambda cache: counterexample_lemma34(3, make_group([2]), cache)),
    ("cube", lambda cache: counterexample_lemma35(make_group([2, 2]), cache)),
    ("product", lambda cache: counterexample_lemma36(make_group([2]), cache)),
    ("product", lambda cache: counterexample_lemma36(make_group([4]), cache)),
)

# (p, group): expected (non-unit ideal count, Phi onto the non-units)
census_cases = {
    (2, (2,)): (2, True),
    (2, (4,)): (4, False),
    (3, (3,)): (3, False),
    (2, (2, 2)): (None, False),
    (3, (2,)): (None, False),
    (2, (3,)): (None, False),
    (5, (2,)): (None, False),
    (5, (4,)): (None, False),
}


def return_obj(bounds, cache):
    s = suite_class.suite("section3", "03_section3_suite", "Counterexamples, census and the F_2 C_2 characterization",
                          bounds, cache)

    for p, orders in square_cases:
        s.add_case("square", f"F_{p} {list(orders)}", counterexample_check(counterexample_lemma34, p, make_group(orders), cache=cache),
                   p=p, group=orders)
    for orders in cube_cases:
        s.add_case("cube", f"F_2 {list(orders)}", counterexample_check(counterexample_lemma35, make_group(orders), cache=cache),
                   group=orders)
    for orders in product_cases:
        s.add_case("product", f"F_2 {list(orders)}", counterexample_check(counterexample_lemma36, make_group(orders), cache=cache),
                   group=orders)
    for i, (name, build) in enumerate(not_applicable):
        s.add_case("not_applicable", f"{name} {i}", not_applicable_check(build, cache))

    for (p, orders), expected in census_cases.items():
        s.add_case("census", f"F_{p} {list(orders)}", census_check(p, orders, expected, bounds, cache), p=p, group=orders)

    for p in (2, 3):
        s.add_case("unique_prime", f"F_{p}", unique_prime_check_all(p), p=p)

    for p in bounds.primes:
        for m in range(2, 7):
            s.add_case("theorem37", f"F_{p} C_{m}", theorem37_check(p, m, bounds, cache), p=p, m=m)

    return s


def counterexample_check(build, *args, cache=None):
    def check(expect):
        ce = build(*args, cache=cache)
        expect.true("excluded", ce.excluded)
        for name, ok in ce.checks.items():
            expect.true(name, ok)
    return check


def not_applicable_check(build, cache):
    def check(expect):
        try:
            build(cache)
            raised = False
        except NotApplicableError:
            raised = True
        expect.true("not_applicable", raised)
    return check


def census_check(p, orders, expected, bounds, cache):
    count, onto = expected

    def check(expect):
        census = ideal_census(p, orders, bounds.census_limit, cache)
        expect.true("exhaustive", census.exhaustive)
        if count is not None:
            expect.equal("ideal_count", count, census.ideal_count)
        expect.equal("phi_onto", onto, census.phi_equals_t)
        expect.equal("fibers_partition", census.ideal_count, sum(census.fiber_sizes.values()))
        expect.true("fibers_contain_phi", census.fibers_contain_phi)

        G = make_group(orders)
        p_group_over_p = supp(G) in ([], [p])
        all_maximal_in_image = all(in_phi_image(M, cache) is not None for M in maximal_ideals(census))
        expect.equal("maximal_in_image", p_group_over_p, all_maximal_in_image)
        expect.equal("unique_prime", p_group_over_p, unique_prime_check(p, G))
    return check


def unique_prime_check_all(p):
    def check(expect):
        for orders in cyclic_factorizations(16):
            G = make_group(orders)
            primes = supp(G)
            if primes == [p]:
                expect.true(f"p-group {G.name}", unique_prime_check(p, G))
            elif len(primes) == 1:
                expect.true(f"q-group {G.name}", not unique_prime_check(p, G))
    return check


def theorem37_check(p, m, bounds, cache):
    def check(expect):
        res = theorem37_equivalence(p, m, bounds.census_limit, cache)
        expect.checks += res.cases_run - 1
        expect.equal("theorem37", [], [f.check for f in res.failures])
    return check
