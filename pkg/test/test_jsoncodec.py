import json

import pytest

from phipsi.cruncher.groupring import GroupRingElement, IdealSubspace
from phipsi.cruncher.laurent import LaurentElement
from phipsi.errors import InvalidInputError
from phipsi.utils import jsoncodec


@pytest.fixture
def service():
    return jsoncodec.default_service()


def test_dispatch_by_fields(service):
    name, x = service.unpack({"modulus": 5, "group": [4], "coeffs": [1, 2, 3, 4]})
    assert name == "element" and isinstance(x, GroupRingElement)
    name, (R, G, N) = service.unpack({"modulus": 2, "group": [2, 2], "subgroup_gens": [[1, 0]]})
    assert name == "subgroup" and N.order == 2
    name, J = service.unpack({"modulus": 2, "group": [2], "basis": [[1, 1]]})
    assert name == "subspace" and isinstance(J, IdealSubspace)
    name, y = service.unpack({"modulus": 0, "terms": {"2": 1, "-1": -1}})
    assert name == "laurent" and y == LaurentElement(0, {2: 1, -1: -1})


def test_expected_kind(service):
    with pytest.raises(InvalidInputError):
        service.unpack({"modulus": 0, "terms": {"1": 1}}, expected="element")


def test_malformed_documents(service):
    with pytest.raises(InvalidInputError):
        service.unpack({"group": [2], "coeffs": [1, 0]})
    with pytest.raises(InvalidInputError):
        service.unpack({"modulus": 2, "group": [2], "coeffs": [1]})
    with pytest.raises(InvalidInputError):
        service.unpack({"modulus": 2, "group": [2]})
    with pytest.raises(InvalidInputError):
        service.unpack({"modulus": 0, "terms": [1, 2]})


def test_duplicate_unpacker(service):
    with pytest.raises(KeyError):
        service.add_unpacker("element", jsoncodec.ElementUnpacker())
    assert isinstance(service.get_unpacker("laurent"), jsoncodec.LaurentUnpacker)


def test_load(service, tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"modulus": 3, "group": [3], "coeffs": [1, 1, 1]}))
    assert service.load(str(path)).coeffs.tolist() == [1, 1, 1]
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    with pytest.raises(InvalidInputError):
        service.load(str(bad))
    with pytest.raises(InvalidInputError):
        service.load(str(tmp_path / "missing.json"))


def test_flag_parsers():
    assert jsoncodec.parse_group("2, 4") == (2, 4)
    assert jsoncodec.parse_group("") == ()
    assert jsoncodec.parse_generators("1,0;0,1") == [(1, 0), (0, 1)]
    assert jsoncodec.parse_terms("3:2,-1:3") == {3: 2, -1: 3}
    with pytest.raises(InvalidInputError):
        jsoncodec.parse_ints("1,a")
    with pytest.raises(InvalidInputError):
        jsoncodec.parse_terms("3")
