import pytest

from adjkit.dexterity import DexterityFunction
from adjkit.errors import ParseError
from adjkit.factbase import FactBase, factbase_from_json, factbase_to_json, saturate

from factbase_scenarios import SCENARIOS


def run_scenario(scenario):
    closed = saturate(factbase_from_json(scenario["doc"]))
    if "n_adjunctible" in scenario:
        assert set(closed.n_adjunctible) == scenario["n_adjunctible"], scenario["name"]
    if "n_adjunctible_superset" in scenario:
        assert scenario["n_adjunctible_superset"] <= set(closed.n_adjunctible), scenario["name"]
    if "ambidextrous" in scenario:
        assert set(closed.ambidextrous) == scenario["ambidextrous"], scenario["name"]
    for morphism, function, expected in scenario.get("has_class", []):
        got = closed.has_class(morphism, DexterityFunction.from_string(function))
        assert got == expected, f"{scenario['name']}: {morphism} {function}"
    if "same_closure_as" in scenario:
        other = saturate(factbase_from_json(scenario["same_closure_as"]))
        assert factbase_to_json(closed) == factbase_to_json(other), scenario["name"]
    return closed


@pytest.mark.parametrize("scenario", SCENARIOS, ids=[s["name"] for s in SCENARIOS])
def test_scenario(scenario):
    run_scenario(scenario)


@pytest.mark.parametrize("scenario", SCENARIOS, ids=[s["name"] for s in SCENARIOS])
def test_saturate_idempotent_and_monotone(scenario):
    base = factbase_from_json(scenario["doc"])
    closed = saturate(base)
    assert saturate(closed) == closed
    assert base.classes <= closed.classes
    assert base.n_adjunctible <= closed.n_adjunctible
    assert base.adjunctions == closed.adjunctions
    assert base.morphisms == closed.morphisms


def test_json_round_trip():
    closed = saturate(factbase_from_json(SCENARIOS[0]["doc"]))
    doc = factbase_to_json(closed)
    assert factbase_to_json(factbase_from_json(doc)) == doc


def test_malformed_document():
    with pytest.raises(ParseError):
        factbase_from_json({"morphisms": [{"name": "f"}]})
    with pytest.raises(ParseError):
        factbase_from_json({"classes": [{"morphism": "f", "function": "RX"}]})


def test_empty_base_is_fixed_point():
    empty = FactBase()
    assert saturate(empty) == empty
