import json

import orbw


def test_valuation():
    assert orbw.valuation("50", 5) == 2
    assert orbw.valuation("3/25", 5) == -2


def test_charpoly_and_recurrence():
    assert orbw.charpoly([["1", "0"], ["1", "2"]]) == ["2", "-3"]
    assert orbw.minimal_recurrence(["2", "3", "5", "9"]) == ["2", "-3"]


def test_lfactor_matches_orbital_integral():
    L = json.loads(orbw.lfactor_central(5, "inert", 1, 1))
    assert L == {"num": [[1, "1"]], "den": [[1, "1"], [0, "1"]]}
    I = json.loads(orbw.orbital_central_unit(5, "inert", 1, 1, "0"))
    assert I == L
    for p in (3, 5):
        for etale in ("inert", "split"):
            for sign in (1, -1):
                got = orbw.orbital_central_unit(p, etale, 2, sign, "1")
                want = orbw.lfactor_central(p, etale, 2, sign)
                assert got == want


def test_run_verb_descent():
    out = orbw.run_verb(
        "orbits",
        {"a": {"charpoly": ["2", "-3"], "moments": ["1", "1"]}},
        {"base": {"p": 3, "etale": "inert"}},
    )
    assert out["r"] == 1
    assert [r["epsilon"] for r in out["reps"]] == ["+", "-"]


def test_verify_suite():
    rep = orbw.verify_report("orbits", seed=1)
    assert rep["verdict"] == "pass"
