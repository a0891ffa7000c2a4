import json

import pytest

import pictam


def test_corpus_validates():
    names = pictam.corpus_names()
    assert len(names) == 6
    for name in names:
        verdict = pictam.validate(pictam.corpus(name))
        assert verdict["kind"] == "verdict"
        assert verdict["payload"]["ok"] is True


def test_round_trip_is_canonical():
    doc = pictam.corpus("split(Z/2,Z/2,beta)")
    text = pictam.canonical_text(doc)
    assert text.endswith("\n")
    assert pictam.canonical_text(text) == text
    assert json.loads(text) == doc


def test_invariants_of_beta_model():
    result = pictam.invariants(pictam.corpus("split(Z/2,Z/2,beta)"))
    check = result["payload"]["checks"][0]
    assert check["ok"]
    assert len(check["result"]["pi0"]) == 2
    assert len(check["result"]["pi1"]) == 2
    assert check["result"]["q"] == [0, 1]


def test_k_theory_level_two_is_discrete_on_four_objects():
    doc = pictam.k_theory(pictam.corpus("split(Z/2,0,0)"), 2)
    assert doc["kind"] == "gamma-groupoid"
    level2 = doc["payload"]["levels"][2]
    assert len(level2["objects"]) == 4
    assert len(level2["morphisms"]) == 4
    verdict = pictam.validate(doc)
    assert verdict["payload"]["checks"][0]["result"] == {"special": True, "very_special": True}


def test_missing_symmetry_component_is_an_input_error():
    doc = pictam.corpus("split(Z/2,0,0)")
    doc["payload"]["symmetry"] = doc["payload"]["symmetry"][:-1]
    with pytest.raises(pictam.InputError, match="symmetry component missing"):
        pictam.validate(doc)
    with pytest.raises(ValueError):
        pictam.validate("{not json")


def test_bound_is_enforced():
    with pytest.raises(pictam.BoundExceeded):
        pictam.k_theory(pictam.corpus("split(Z/2,Z/2,beta)"), 3, bound=10)


def test_suite_exit_codes_and_determinism():
    verdict, code = pictam.run_suite({"checks": []})
    assert code == 0
    assert verdict["payload"] == {"checks": [], "ok": True}

    config = {"seed": 4, "corpus": ["split(Z/3,0,0)"], "checks": ["picard", "very-special"]}
    a, code_a = pictam.run_suite(config)
    b, _ = pictam.run_suite(config)
    assert code_a == 0
    assert a == b

    with pytest.raises(pictam.InputError):
        pictam.run_suite({"checks": ["nonsense"]})


def test_corruption_sweep():
    out = pictam.corruption_sweep(pictam.corpus("split(Z/2,Z/2,0)"))
    assert out["missed"] == 0
    assert out["valid_alternatives"] == ["symmetry(1,1)"]


def test_phi():
    assert pictam.phi([0, 2], 2) == [0, 1, 1]
    assert pictam.phi([1, 2], 2) == [0, 0, 1]
    with pytest.raises(pictam.InputError):
        pictam.phi([2, 1], 2)
