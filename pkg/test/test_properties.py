"""Randomized invariants of the group ring arithmetic and the classifiers."""
from hypothesis import given, settings, strategies as st

from phipsi.cruncher.circulant import Verdict, classify_principal
from phipsi.cruncher.groupring import GroupRingElement, augmentation, ideal_generated, in_phi_image
from phipsi.cruncher.groups import make_group
from phipsi.cruncher.laurent import LaurentElement, classify_laurent, laurent_division_oracle
from phipsi.cruncher.modring import make_ring

moduli = st.sampled_from([2, 3, 4, 5, 6, 9])
primes = st.sampled_from([2, 3, 5, 7])
group_orders = st.sampled_from([(2,), (3,), (4,), (6,), (2, 2), (2, 3), (3, 3), (2, 4)])


@st.composite
def element_pairs(draw):
    n, orders = draw(moduli), draw(group_orders)
    R, G = make_ring(n), make_group(orders)
    coeffs = st.lists(st.integers(0, n - 1), min_size=G.size, max_size=G.size)
    return GroupRingElement(R, G, draw(coeffs)), GroupRingElement(R, G, draw(coeffs))


@st.composite
def cyclic_elements(draw, max_m=8):
    p, m = draw(primes), draw(st.integers(2, max_m))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=m, max_size=m))
    return GroupRingElement(make_ring(p), make_group([m]), coeffs)


@st.composite
def laurent_elements(draw):
    modulus = draw(st.sampled_from([0, 2, 3, 5]))
    coeff = st.integers(-3, 3) if modulus == 0 else st.integers(1, modulus - 1)
    terms = draw(st.dictionaries(st.integers(-5, 5), coeff, max_size=4))
    return LaurentElement(modulus, terms)


@settings(max_examples=200, deadline=None)
@given(element_pairs())
def test_augmentation_is_multiplicative(pair):
    x, y = pair
    assert augmentation(x * y) == (augmentation(x) * augmentation(y)) % x.ring.modulus
    assert augmentation(x + y) == (augmentation(x) + augmentation(y)) % x.ring.modulus


@settings(max_examples=200, deadline=None)
@given(element_pairs())
def test_ring_axioms(pair):
    x, y = pair
    assert x * y == y * x
    assert x * (x + y) == x * x + x * y
    assert x * GroupRingElement.one(x.ring, x.group) == x


@settings(max_examples=100, deadline=None)
@given(cyclic_elements(), st.integers(0, 7), st.integers(1, 6))
def test_classifier_invariant_under_units(x, g, u):
    u = u % x.ring.modulus or 1
    base = classify_principal(x)
    for y in (x.translate(g % x.group.size), x * u):
        other = classify_principal(y)
        assert (other.verdict, other.subgroup, other.rank_A, other.d) == (base.verdict, base.subgroup, base.rank_A, base.d)


@settings(max_examples=100, deadline=None)
@given(cyclic_elements(max_m=6))
def test_classifier_matches_subspace_oracle(x):
    J = ideal_generated([x])
    report = classify_principal(x)
    assert report.rank_A == J.dimension
    if report.verdict is Verdict.IN_IMAGE:
        assert in_phi_image(J) == report.subgroup
    elif report.verdict is Verdict.NOT_IN_IMAGE:
        assert in_phi_image(J) is None


@settings(max_examples=300, deadline=None)
@given(laurent_elements())
def test_laurent_classifier_matches_division(x):
    report = classify_laurent(x)
    k = laurent_division_oracle(x)
    assert (report.h_exponent if report.verdict is Verdict.IN_IMAGE else None) == k


@settings(max_examples=200, deadline=None)
@given(laurent_elements(), st.integers(1, 6))
def test_laurent_division_identity(x, k):
    q, r = x.divmod_by(k)
    assert q * LaurentElement(x.modulus, {k: 1, 0: -1}) + r == x
