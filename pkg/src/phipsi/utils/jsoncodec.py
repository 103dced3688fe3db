"""
Decoding of command-line inputs.

JSON documents are handed to a set of payload unpackers; the first one whose
match() accepts the document builds the object. Flag strings ("2,2",
"0,1,3", "1,0;0,1") are parsed by the helpers at the bottom.
"""
import json
import logging
import sys
from typing import Any, Dict, List, Tuple

import numpy as np

from ..cruncher.groupring import GroupRingElement, IdealSubspace
from ..cruncher.groups import make_group, subgroup_generated
from ..cruncher.laurent import LaurentElement
from ..cruncher.modring import make_ring
from ..errors import InvalidInputError


class PayloadUnpacker:

    def __init__(self):
        pass

    def match(self, doc: Dict) -> bool:
        return False

    def unpack(self, doc: Dict):
        return None


def ring_and_group(doc: Dict):
    try:
        return make_ring(int(doc["modulus"])), make_group(doc.get("group", []))
    except KeyError as e:
        raise InvalidInputError(f"Missing field {e} in {sorted(doc)}")


def read_document(source: str) -> Dict:
    """Read a JSON object from a file name, or stdin for '-'."""
    try:
        if source == "-":
            doc = json.load(sys.stdin)
        else:
            with open(source) as f:
                doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInputError(f"{source}: {e}")
    if not isinstance(doc, dict):
        raise InvalidInputError(f"{source}: expected a JSON object")
    return doc


class ElementUnpacker(PayloadUnpacker):
    """{"modulus": n, "group": [m_1, ...], "coeffs": [c_0, ...]}"""

    def match(self, doc):
        return "coeffs" in doc

    def unpack(self, doc):
        R, G = ring_and_group(doc)
        coeffs = list(doc["coeffs"])
        if len(coeffs) != G.size:
            raise InvalidInputError(f"{G.name} needs {G.size} coefficients, got {len(coeffs)}")
        return GroupRingElement(R, G, coeffs)


class SubgroupUnpacker(PayloadUnpacker):
    """{"modulus": p, "group": [...], "subgroup_gens": [[e_1, ...], ...]}"""

    def match(self, doc):
        return "subgroup_gens" in doc

    def unpack(self, doc):
        R, G = ring_and_group(doc)
        return R, G, subgroup_generated(G, [tuple(g) if isinstance(g, list) else (g,) for g in doc["subgroup_gens"]])


class SubspaceUnpacker(PayloadUnpacker):
    """{"modulus": p, "group": [...], "basis": [[...], ...]}; rows are re-echelonized."""

    def match(self, doc):
        return "basis" in doc

    def unpack(self, doc):
        R, G = ring_and_group(doc)
        rows = np.asarray(doc["basis"], dtype=np.int64).reshape(-1, G.size)
        return IdealSubspace.span(R, G, rows)


class LaurentUnpacker(PayloadUnpacker):
    """{"modulus": p-or-0, "terms": {"exponent": coefficient, ...}}"""

    def match(self, doc):
        return "terms" in doc

    def unpack(self, doc):
        try:
            terms = {int(e): int(c) for e, c in doc["terms"].items()}
        except (AttributeError, ValueError):
            raise InvalidInputError(f"Laurent terms must map exponents to coefficients, got {doc['terms']}")
        return LaurentElement(int(doc.get("modulus", 0)), terms)


class UnpackerService:
    """Dispatches JSON documents to the registered unpackers."""

    def __init__(self):
        self.payload_unpackers = {}

    def add_unpacker(self, name, unpacker):
        if name in self.payload_unpackers:
            raise KeyError(f"UnpackerService {name} already registered")
        self.payload_unpackers[name] = unpacker

    def get_unpacker(self, name):
        return self.payload_unpackers[name]

    def unpack(self, doc: Dict, expected: str = None) -> Tuple[str, Any]:
        for n, up in self.payload_unpackers.items():
            if expected is not None and n != expected:
                continue
            if not up.match(doc):
                continue
            logging.debug(f"[{n}] Unpacking {sorted(doc)}")
            return n, up.unpack(doc)
        raise InvalidInputError(f"No unpacker for document with fields {sorted(doc)}"
                                + (f", expected a {expected}" if expected else ""))

    def load(self, source: str, expected: str = None) -> Any:
        return self.unpack(read_document(source), expected)[1]


def default_service() -> UnpackerService:
    service = UnpackerService()
    service.add_unpacker("element", ElementUnpacker())
    service.add_unpacker("subgroup", SubgroupUnpacker())
    service.add_unpacker("subspace", SubspaceUnpacker())
    service.add_unpacker("laurent", LaurentUnpacker())
    return service


def parse_ints(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise InvalidInputError(f"Expected comma-separated integers, got '{text}'")


def parse_group(text: str) -> Tuple[int, ...]:
    return tuple(parse_ints(text))


def parse_generators(text: str) -> List[Tuple[int, ...]]:
    """'1,0;0,1' -> [(1, 0), (0, 1)]."""
    return [tuple(parse_ints(part)) for part in text.split(";") if part.strip()]


def parse_terms(text: str) -> Dict[int, int]:
    """'3:2,-1:3' -> {3: 2, -1: 3}, exponent first."""
    terms: Dict[int, int] = {}
    for part in text.split(","):
        if not part.strip():
            continue
        try:
            e, c = part.split(":")
            terms[int(e)] = terms.get(int(e), 0) + int(c)
        except ValueError:
            raise InvalidInputError(f"Expected exponent:coefficient pairs, got '{part}'")
    return terms
