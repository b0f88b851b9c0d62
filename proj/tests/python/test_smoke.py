import json

import pytest

import reflekt

CHAIN3 = {"elements": ["0", "1", "2"], "leq": [["0", "1"], ["1", "2"]]}
VEE = {"elements": ["a", "b", "c"], "leq": [["a", "b"], ["a", "c"]]}


def test_poset_round_trip():
    closed = reflekt.normalize_poset(CHAIN3, closed=True)
    assert closed["closed"] is True
    assert len(closed["leq"]) == 6
    assert reflekt.normalize_poset(closed) == CHAIN3


def test_ideals_of_a_chain():
    assert len(reflekt.ideals(CHAIN3)["elements"]) == 3


def test_scott_equals_alexandroff_on_finite_posets():
    assert reflekt.topology(VEE, "scott") == reflekt.topology(VEE, "alexandroff")


def test_finite_spaces_have_every_property():
    for prop in ("sober", "well-filtered", "d-space"):
        assert reflekt.check(VEE, prop)["verdict"] is True


def test_catalog_verdicts():
    assert reflekt.check("johnstone", "well-filtered")["verdict"] is False
    assert reflekt.check("johnstone", "d-space")["verdict"] is True
    assert reflekt.check("nat-top", "sober")["verdict"] is True
    assert reflekt.check("nat", "sober")["verdict"] is False


def test_reflections():
    assert reflekt.reflect("nat", "sob")["target"] == "nat-top"
    assert reflekt.reflect("nat-ab", "wf")["target"] == "q"
    j = reflekt.reflect("johnstone", "sob", bound=4)
    assert j["target"] is None
    assert j["not_scott"]["verified"] is True
    r = reflekt.sobrify(VEE)
    assert all(c["status"] == "pass" for c in r["certificates"])


def test_completions():
    c = reflekt.complete(VEE, "d", variant="ds")
    assert len(c["target"]["elements"]) == len(reflekt.ideals(VEE)["elements"])
    assert reflekt.complete("nat", "d")["target"] == "nat-top"


def test_witness_and_irc():
    w = reflekt.wf_witness("johnstone-top", cap=5)
    assert w["verified"] is True
    assert w["members"] == 32
    e = reflekt.johnstone_irc("johnstone", 4)
    assert e["ok"] is True
    assert e["irreducible"] == e["principal"] + 1


def test_truncate_and_oracle():
    for tag in reflekt.BUILTINS:
        p = reflekt.truncate(tag, 3)
        assert reflekt.normalize_poset(p) == p
        assert reflekt.oracle(tag, level=6, probes=200)["mismatches"] == []


def test_laws_small_scale():
    certs = reflekt.laws(["L1", "L10"], spaces=3, bound=4)
    assert [c["law"] for c in certs] == ["L1", "L10"]
    assert all(c["status"] == "pass" for c in certs)
    assert len(reflekt.law_ids()) == 18


def test_errors():
    with pytest.raises(reflekt.ReflektError):
        reflekt.ideals({"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]})
    with pytest.raises(reflekt.ReflektError):
        reflekt.reflect("cofinite", "sob")
    with pytest.raises(reflekt.ReflektError):
        reflekt.laws(["L99"])


def test_cli_entry():
    code, out, err = reflekt.run_cli("check", "--space", "builtin:johnstone", "--property", "well-filtered")
    assert code == 0
    assert json.loads(out)["verdict"] is False
    assert reflekt.run_cli("frobnicate")[0] == 2
