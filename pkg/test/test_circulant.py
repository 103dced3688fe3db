import numpy as np
import pytest

from phipsi.cruncher.circulant import (CONDITION42_FAILED, D_NOT_DIVISOR, Verdict, build_augmented, build_circulant,
                                       classify_principal, condition42_residues, contains_power_minus_one,
                                       divide_by_power_minus_one, in_power_ideal, principal_dimension,
                                       solve_power_minus_one)
from phipsi.cruncher.groupring import GroupRingElement, g_minus_one, ideal_generated, in_phi_image
from phipsi.cruncher.groups import make_group, subgroup_generated
from phipsi.cruncher.modring import make_ring
from phipsi.errors import InvalidExponentError, UnsupportedGroupError, UnsupportedRingError

example_coeffs = [0, 1, 3, 1, 1, 3, 1, 1, 4, 1, 1, 3]


def element(p, m, coeffs):
    return GroupRingElement(make_ring(p), make_group([m]), coeffs)


@pytest.fixture
def example():
    return element(5, 12, example_coeffs)


def test_example_in_f5c12(example):
    report = classify_principal(example)
    assert report.verdict is Verdict.IN_IMAGE
    assert report.rank_A == 8
    assert report.d == 4
    assert report.e == 3
    assert report.condition42_residues == [0, 0, 0, 0]
    assert report.rank_A_tilde == 8
    assert report.subgroup == subgroup_generated(example.group, [4])
    assert report.quotient == "F_5 C_4"


def test_example_report_dict(example):
    doc = classify_principal(example).to_dict()
    assert doc["verdict"] == "in-image"
    assert doc["subgroup"] == "<g^4>"
    assert doc["condition42"] == [0, 0, 0, 0]
    assert doc["rank_A"] == doc["rank_A_tilde"] == 8


def test_circulant_layout():
    x = element(7, 4, [1, 2, 3, 4])
    A = build_circulant(x)
    # entry (r, c) is r_(m-1-r-c)
    np.testing.assert_array_equal(A.rows[0], [4, 3, 2, 1])
    np.testing.assert_array_equal(A.rows[1], [3, 2, 1, 4])
    np.testing.assert_array_equal(A.rows[3], [1, 4, 3, 2])


def test_augmented_column():
    x = element(5, 6, [1, 0, 0, 0, 0, 0])
    rhs = build_augmented(x, 2)[:, -1]
    np.testing.assert_array_equal(rhs, [0, 0, 0, 1, 0, 4])


def test_trivial_verdicts():
    assert classify_principal(element(3, 4, [0, 0, 0, 0])).verdict is Verdict.ZERO
    report = classify_principal(element(3, 4, [1, 0, 0, 0]))
    assert report.verdict is Verdict.UNIT
    assert report.d == 0


def test_whole_augmentation_ideal():
    report = classify_principal(element(2, 2, [1, 1]))
    assert report.verdict is Verdict.IN_IMAGE
    assert report.subgroup.label == "<g>"
    assert report.quotient == "F_2 C_1"


@pytest.mark.parametrize("p, m, coeffs", [(3, 3, [1, 1, 1]), (2, 4, [1, 1, 1, 1])])
def test_d_not_a_divisor(p, m, coeffs):
    report = classify_principal(element(p, m, coeffs))
    assert report.verdict is Verdict.NOT_IN_IMAGE
    assert report.reason == D_NOT_DIVISOR


def test_progression_sums_fail():
    report = classify_principal(element(5, 4, [1, 0, 1, 0]))
    assert report.d == 2
    assert report.condition42_residues == [2, 0]
    assert report.reason == CONDITION42_FAILED


def test_membership(example):
    powers = {n: g_minus_one(example.ring, example.group, n) for n in range(1, 12)}
    J = ideal_generated([example])
    for n, y in powers.items():
        assert contains_power_minus_one(example, n) == J.contains(y)
        assert in_power_ideal(example, n) == ideal_generated([y]).contains(example)
    assert in_power_ideal(example, 8)
    assert not in_power_ideal(example, 3)
    assert condition42_residues(example, 3) == [3, 4, 3]


def test_solutions(example):
    y = solve_power_minus_one(example, 4)
    assert example * y == g_minus_one(example.ring, example.group, 4)
    z = divide_by_power_minus_one(example, 4)
    assert g_minus_one(example.ring, example.group, 4) * z == example
    assert solve_power_minus_one(example, 1) is None
    assert divide_by_power_minus_one(example, 3) is None


def test_dimension_is_rank(example):
    assert principal_dimension(example) == ideal_generated([example]).dimension == 8


def test_refuses_unsupported_inputs():
    with pytest.raises(UnsupportedRingError):
        classify_principal(element(4, 3, [1, 1, 0]))
    with pytest.raises(UnsupportedGroupError):
        classify_principal(GroupRingElement(make_ring(2), make_group([2, 2]), [1, 1, 0, 0]))
    with pytest.raises(InvalidExponentError):
        contains_power_minus_one(element(2, 4, [1, 1, 0, 0]), 4)


@pytest.mark.slow
@pytest.mark.parametrize("p, m", [(2, 6), (3, 4), (2, 8)])
def test_classifier_agrees_with_subspace_oracle(p, m, cache):
    R, G = make_ring(p), make_group([m])
    for i in range(p**m):
        x = GroupRingElement(R, G, [(i // p**k) % p for k in range(m)])
        J = ideal_generated([x])
        report = classify_principal(x)
        if J.dimension == 0:
            assert report.verdict is Verdict.ZERO
        elif not J.is_proper:
            assert report.verdict is Verdict.UNIT
        else:
            N = in_phi_image(J, cache)
            assert report.subgroup == N
            assert report.verdict is (Verdict.IN_IMAGE if N is not None else Verdict.NOT_IN_IMAGE)
