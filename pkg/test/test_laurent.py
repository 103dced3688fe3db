import pytest

from phipsi.cruncher.circulant import Verdict
from phipsi.cruncher.laurent import LaurentElement, classify_laurent, laurent_division_oracle
from phipsi.errors import IncompatibleOperandsError, UnsupportedRingError


def L(modulus, terms):
    return LaurentElement(modulus, terms)


def test_coefficients_reduce_and_zeros_vanish():
    x = L(5, {2: 7, 0: 5, -1: -1})
    assert x.terms == {2: 2, -1: 4}
    assert L(0, {1: 0}).is_zero()


def test_rejects_composite_modulus():
    with pytest.raises(UnsupportedRingError):
        L(4, {0: 1})


def test_arithmetic():
    x, y = L(0, {1: 1, 0: -1}), L(0, {1: 1, 0: 1})
    assert x * y == L(0, {2: 1, 0: -1})
    assert x + y == L(0, {1: 2})
    assert x - y == L(0, {0: -2})
    assert x.shift(-3) == L(0, {-2: 1, -3: -1})
    with pytest.raises(IncompatibleOperandsError):
        x + L(3, {0: 1})


def test_long_division():
    q, r = L(0, {3: 1, 0: -1}).divmod_by(1)
    assert q == L(0, {2: 1, 1: 1, 0: 1})
    assert r.is_zero()


@pytest.mark.parametrize("modulus", [0, 7])
def test_division_identity(modulus):
    x = L(modulus, {5: 3, 1: -4, -2: 2})
    for k in range(1, 6):
        q, r = x.divmod_by(k)
        assert q * L(modulus, {k: 1, 0: -1}) + r == x
        assert r.is_zero() or r.max_exponent < x.min_exponent + k


def test_division_needs_positive_k():
    with pytest.raises(ValueError):
        L(0, {1: 1}).divmod_by(0)


def test_in_image_over_prime_field():
    report = classify_laurent(L(5, {3: 2, -1: 3}))
    assert report.verdict is Verdict.IN_IMAGE
    assert report.h_exponent == 4
    assert report.unit == 2
    assert report.subgroup == "<g^4>"
    assert report.to_dict()["h"] == "g^4"


def test_integers_need_unit_coefficients():
    assert classify_laurent(L(0, {1: 2, 0: -2})).verdict is Verdict.NOT_IN_IMAGE
    report = classify_laurent(L(0, {1: 1, 0: -1}))
    assert report.verdict is Verdict.IN_IMAGE
    assert report.subgroup == "<g>"
    assert classify_laurent(L(0, {2: -1, -5: 1})).h_exponent == 7


def test_other_verdicts():
    assert classify_laurent(L(3, {})).verdict is Verdict.ZERO
    assert classify_laurent(L(5, {2: 3})).verdict is Verdict.UNIT
    assert classify_laurent(L(0, {2: 3})).verdict is Verdict.NOT_IN_IMAGE
    assert classify_laurent(L(0, {2: -1})).verdict is Verdict.UNIT
    assert classify_laurent(L(2, {0: 1, 1: 1, 2: 1})).verdict is Verdict.NOT_IN_IMAGE
    assert classify_laurent(L(5, {1: 1, 0: 1})).verdict is Verdict.NOT_IN_IMAGE


def test_division_oracle():
    assert laurent_division_oracle(L(5, {3: 2, -1: 3})) == 4
    assert laurent_division_oracle(L(0, {2: 1, 0: 1})) is None
    assert laurent_division_oracle(L(0, {1: 2, 0: -2})) is None
    assert laurent_division_oracle(L(0, {})) is None


def test_str_and_dict():
    x = L(0, {3: 2, -1: 3, 0: 1})
    assert str(x) == "2g^3 + 1 + 3g^-1"
    assert L(5, {3: 2, -1: 3}).to_dict() == {"modulus": 5, "terms": {"-1": 3, "3": 2}}
