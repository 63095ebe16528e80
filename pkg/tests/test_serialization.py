import json
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest

from monoidgeom.algebra import AlgebraElement
from monoidgeom.errors import MonoidGeomError
from monoidgeom.presentation import Presentation
from monoidgeom.serialization import (
    canonical_dumps,
    element_from_json,
    element_to_json,
    ideal_from_json,
    ideal_to_json,
    monoid_from_json,
    monoid_to_json,
    presentation_from_json,
    presentation_to_json,
)
from monoidgeom.specm import MonoidIdeal

from conftest import Z2, ZT2, monoid


def _schema(name):
    text = resources.files("monoidgeom.schemas").joinpath(name).read_text()
    return json.loads(text)


def test_monoid_round_trip(p2, nn2, znn):
    for m in (p2, nn2, znn):
        doc = monoid_to_json(m)
        jsonschema.validate(doc, _schema("monoid.schema.json"))
        back = monoid_from_json(doc)
        assert back == m
        assert canonical_dumps(monoid_to_json(back)) == canonical_dumps(doc)


def test_presentation_round_trip():
    p = Presentation.make(2, [((2, 0), (0, 2)), ((1, 1), (1, 1))])
    doc = presentation_to_json(p)
    jsonschema.validate(doc, _schema("presentation.schema.json"))
    assert presentation_from_json(doc) == p


def test_element_round_trip(p2):
    f = AlgebraElement.from_terms(
        p2,
        [
            (ZT2.element((1,), (0,)), Fraction(3, 2)),
            (ZT2.element((1,), (1,)), Fraction(-2)),
        ],
    )
    doc = element_to_json(f)
    jsonschema.validate(doc, _schema("element.schema.json"))
    assert element_from_json(p2, doc) == f
    assert doc["terms"][0]["coeff"] in ("3/2", "-2")


def test_ideal_round_trip(nn2):
    i = MonoidIdeal.generated(nn2, [Z2.element((1, 0)), Z2.element((2, 2))])
    doc = ideal_to_json(i)
    assert ideal_from_json(nn2, doc) == i


def test_bad_inputs_raise():
    with pytest.raises(MonoidGeomError):
        presentation_from_json({"relations": []})
    with pytest.raises(MonoidGeomError):
        monoid_from_json({"ambient": {"torsion": [2]}, "generators": []})


def test_canonical_dumps_is_sorted_and_compact():
    s = canonical_dumps({"b": 1, "a": [1, 2]})
    assert s == '{"a":[1,2],"b":1}'
