from dataclasses import replace

import pandas as pd
import pytest

from phipsi.cruncher.groupring import in_phi_image
from phipsi.cruncher.groups import make_group, subgroup_generated, trivial_subgroup, whole_group
from phipsi.data_cache import PhiCache
from phipsi.cruncher.modring import make_ring
from phipsi.errors import NotApplicableError, UnknownSuiteError
from phipsi.harness.census import (gaussian_binomial, ideal_census, iter_rref, maximal_ideals, subspace_count,
                                   theorem37_equivalence)
from phipsi.harness.counterexamples import (counterexample_lemma34, counterexample_lemma35, counterexample_lemma36,
                                            unique_prime_check)
from phipsi.harness.results import Expectations, SuiteResult, merge
from phipsi.harness.runner import SuiteBounds, run_case, run_suite, suite_names
from phipsi.load_all import get_suites

tiny = SuiteBounds(primes=(2,), max_order_phi=4, max_order_quotient=4, max_order_radical=4,
                   cyclic_pairs=((2, 2), (2, 4)), membership_limit=2**4, census_limit=100,
                   random_pairs=200, workers=2)


@pytest.mark.parametrize("p, orders", [(3, [3]), (5, [5]), (3, [9]), (3, [3, 3])])
def test_square_of_g_minus_one(p, orders, cache):
    ce = counterexample_lemma34(p, make_group(orders), cache)
    assert ce.excluded
    assert all(ce.checks.values())
    assert ce.to_dict()["excluded"]


def test_square_in_f3c3_is_the_norm_element():
    ce = counterexample_lemma34(3, make_group([3]))
    assert ce.element.coeffs.tolist() == [1, 1, 1]
    assert ce.chain_dims == [0, 1, 2]


@pytest.mark.parametrize("orders", [[4], [8], [2, 4]])
def test_cube_of_g_minus_one(orders, cache):
    ce = counterexample_lemma35(make_group(orders), cache)
    assert ce.excluded
    assert ce.checks["chain"]
    assert ce.checks["square_is_g2_minus_one"]
    assert ce.checks["square_is_phi"]


def test_cube_chain_in_f2c4():
    ce = counterexample_lemma35(make_group([4]))
    assert ce.element.coeffs.tolist() == [1, 1, 1, 1]
    assert ce.chain_dims == [0, 1, 2]


@pytest.mark.parametrize("orders", [[2, 2], [2, 2, 2]])
def test_product_of_two_generators(orders, cache):
    ce = counterexample_lemma36(make_group(orders), cache)
    assert ce.excluded
    assert ce.checks == {"distinct": True, "nonzero": True}


@pytest.mark.parametrize("build", [
    lambda: counterexample_lemma34(2, make_group([2])),
    lambda: counterexample_lemma34(3, make_group([2])),
    lambda: counterexample_lemma35(make_group([2, 2])),
    lambda: counterexample_lemma36(make_group([2])),
    lambda: counterexample_lemma36(make_group([4])),
])
def test_hypotheses_not_met(build):
    with pytest.raises(NotApplicableError):
        build()


@pytest.mark.parametrize("p, orders, expected", [
    (2, [4], True),
    (3, [3], True),
    (2, [2, 4], True),
    (3, [2], False),
    (2, [3], False),
])
def test_unique_prime(p, orders, expected):
    assert unique_prime_check(p, make_group(orders)) is expected


def test_subspace_counts():
    assert gaussian_binomial(4, 2, 2) == 35
    assert subspace_count(2, 2) == 5
    assert subspace_count(4, 2) == 67
    assert sum(1 for _ in iter_rref(4, 2)) == 67
    assert sum(1 for _ in iter_rref(3, 3)) == subspace_count(3, 3)


def test_census_f2c2(cache):
    census = ideal_census(2, [2], cache=cache)
    G = make_group([2])
    assert census.exhaustive
    assert census.ideal_count == 2
    assert census.phi_equals_t
    assert census.fibers_contain_phi
    assert census.fiber_sizes == {trivial_subgroup(G): 1, whole_group(G): 1}


def test_census_f2c4(cache):
    census = ideal_census(2, [4], cache=cache)
    G = make_group([4])
    assert census.ideal_count == 4
    assert census.subgroup_count == 3
    assert census.phi_equals_t is False
    assert census.fiber_sizes == {trivial_subgroup(G): 2, subgroup_generated(G, [2]): 1, whole_group(G): 1}
    maximal = maximal_ideals(census)
    assert len(maximal) == 1
    assert in_phi_image(maximal[0], cache) == whole_group(G)


def test_census_f3c3(cache):
    census = ideal_census(3, [3], cache=cache)
    G = make_group([3])
    assert census.ideal_count == 3
    assert census.fiber_sizes == {trivial_subgroup(G): 2, whole_group(G): 1}


def test_census_maximal_ideals_of_a_split_ring(cache):
    census = ideal_census(3, [2], cache=cache)
    maximal = maximal_ideals(census)
    assert census.ideal_count == 3
    assert len(maximal) == 2
    assert any(in_phi_image(M, cache) is None for M in maximal)


def test_census_past_the_limit():
    census = ideal_census(2, [2, 2, 2], limit=100)
    assert not census.exhaustive
    assert census.ideal_count is None
    assert census.phi_equals_t is None
    assert census.subgroup_count == 16
    with pytest.raises(ValueError):
        maximal_ideals(census)


def test_census_frame():
    df = ideal_census(2, [4]).to_frame()
    assert isinstance(df, pd.DataFrame)
    assert df["phi_dim"].tolist() == [0, 2, 3]
    assert df["fiber_size"].sum() == 4


@pytest.mark.parametrize("p, m", [(2, 2), (2, 4), (3, 3), (5, 2), (2, 3)])
def test_only_f2c2_has_every_ideal_in_the_image(p, m, cache):
    res = theorem37_equivalence(p, m, cache=cache)
    assert res.passed, [f.to_dict() for f in res.failures]


def test_expectations_record_failures():
    expect = Expectations("k", {"p": 2})
    assert expect.equal("same", 1, 1)
    assert not expect.equal("different", 1, 2)
    assert not expect.true("falsy", 0)
    assert expect.checks == 3
    assert [f.check for f in expect.failures] == ["different", "falsy"]
    assert expect.failures[0].to_dict()["inputs"] == {"p": "2"}


def test_merge():
    a = SuiteResult("a", 3, [], 1.0)
    b = SuiteResult("b", 2, [], 0.5)
    res = merge("all", [a, b])
    assert res.cases_run == 5
    assert res.passed
    assert res.to_dict()["wall_time"] == 1.5


def test_phi_cache_evicts_oldest():
    R, G = make_ring(2), make_group([8])
    cache = PhiCache(max_cache_size=2)
    subgroups = [subgroup_generated(G, [k]) for k in (1, 2, 4)]
    for N in subgroups:
        cache.get_phi(R, G, N)
    assert len(cache) == 2
    assert cache.misses == 3
    cache.get_phi(R, G, subgroups[2])
    assert cache.hits == 1
    cache.clear()
    assert len(cache) == 0


def test_suite_names():
    assert suite_names() == ["section1", "section2", "section3", "section4"]


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("section9", tiny)


def test_bounds_cap():
    capped = SuiteBounds().with_max_order(6)
    assert capped.max_order_phi == 6
    assert all(m <= 6 for _, m in capped.cyclic_pairs)
    assert SuiteBounds().with_max_order(None) == SuiteBounds()


@pytest.mark.parametrize("name", ["section1", "section2", "section4"])
def test_small_suites_pass(name):
    res = run_suite(name, tiny)
    assert res.cases_run > 0
    assert res.passed, [f.to_dict() for f in res.failures]
    frame = res.to_frame()
    assert frame["failures"].sum() == 0


@pytest.mark.slow
def test_section3_passes():
    res = run_suite("section3", SuiteBounds(primes=(2, 3), workers=2))
    assert res.passed, [f.to_dict() for f in res.failures]


def test_frobenius_scans_respect_the_limit():
    def checks(limit):
        bounds = replace(tiny, scan_limit=limit)
        section2 = next(s for s in get_suites(bounds, PhiCache()) if s.name == "section2")
        case = next(c for c in section2.cases if c.key == "section2 frobenius F_2 [2]")
        res = run_case(case)
        assert res.failures == []
        return res.checks

    assert checks(0) + 2 == checks(2**13)
    assert SuiteBounds().scan_limit < 3**9
