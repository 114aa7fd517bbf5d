import json

import pytest
from hypothesis import given

from conftest import kripke_models, rough_models
from roughlogic.algebra3 import HALF
from roughlogic.kripke import MonotonicityError
from roughlogic.modelio import (
    kripke_from_json,
    kripke_to_json,
    model_kind,
    rough_from_json,
    rough_to_json,
    signature_from_json,
)
from roughlogic.rough_semantics import SemanticError, valuate
from roughlogic.syntax import parse
from roughlogic.transfer import to_rough

ROUGH = {
    "universe": ["a", "b", "c"],
    "blocks": [["a", "b"], ["c"]],
    "relations": {"P": {"arity": 1, "tuples": [["a"], ["c"]]}},
    "assignment": {"x": "a"},
}


def test_rough_reading():
    I = rough_from_json(ROUGH)
    assert valuate(I, parse("P(x)")) == HALF
    assert model_kind(ROUGH) == "rough"


def test_signature():
    assert signature_from_json({"relations": {"P": 1, "R": 2}}).relations == {"P": 1, "R": 2}


def test_missing_universe():
    with pytest.raises(SemanticError):
        rough_from_json({"blocks": []})


def test_monotonicity_checked():
    with pytest.raises(MonotonicityError):
        kripke_from_json({"universe": ["u"], "relations": {"P": {"arity": 1, "at_1": [["u"]]}}})


@given(rough_models())
def test_rough_round_trip(I):
    assert rough_from_json(json.loads(json.dumps(rough_to_json(I)))) == I


@given(kripke_models())
def test_kripke_round_trip(K):
    assert kripke_from_json(json.loads(json.dumps(kripke_to_json(K)))) == K


@given(kripke_models())
def test_tagged_elements_round_trip(K):
    I = to_rough(K)
    assert rough_from_json(json.loads(json.dumps(rough_to_json(I)))) == I
