import json

import pytest

import funl

LANG_A = json.dumps(
    {
        "type": "dfa",
        "alphabet": ["a"],
        "states": 3,
        "initial": 0,
        "accepting": [1],
        "transitions": {"0": {"a": 1}, "1": {"a": 2}, "2": {"a": 2}},
    }
)

COUNT_A = json.dumps(
    {
        "type": "wfa",
        "alphabet": ["a", "b"],
        "dim": 2,
        "alpha": ["1", "0"],
        "transitions": {
            "a": [["1", "1"], ["0", "1"]],
            "b": [["1", "0"], ["0", "1"]],
        },
        "beta": ["0", "1"],
    }
)

B_N_PLUS_1 = json.dumps(
    {
        "type": "sst",
        "alphabet": ["a"],
        "output_alphabet": ["b"],
        "states": 1,
        "initial": {"state": 0, "out": "b"},
        "transitions": {"0": {"a": {"to": 0, "out": "b"}}},
        "finals": {"0": ""},
    }
)


def test_learn_dfa_golden():
    learned, stats = funl.learn(LANG_A, mode="basic")
    doc = json.loads(learned)
    assert doc["type"] == "dfa"
    assert doc["states"] == 3
    assert stats["equiv_queries"] == 2
    assert stats["counterexamples"] == ["aaa"]
    assert funl.equiv(learned, LANG_A) is None


def test_learn_wfa_exact_values():
    learned, _ = funl.learn(COUNT_A, mode="optimized")
    assert json.loads(learned)["dim"] == 2
    assert funl.evaluate(learned, "abab") == "2"
    assert funl.evaluate(learned, "") == "0"


def test_learn_sst_with_undefined_values():
    learned, _ = funl.learn(B_N_PLUS_1)
    assert funl.evaluate(learned, "aa") == "bbb"
    partial = json.dumps(
        {
            "type": "sst",
            "alphabet": ["a"],
            "output_alphabet": ["b"],
            "states": 1,
            "initial": {"state": 0, "out": ""},
            "transitions": {},
            "finals": {"0": "b"},
        }
    )
    assert funl.evaluate(partial, "a") is None


def test_minimize_and_equiv():
    chain = json.dumps(
        {
            "type": "dfa",
            "alphabet": ["a"],
            "states": 4,
            "initial": 0,
            "accepting": [1],
            "transitions": {"0": {"a": 1}, "1": {"a": 2}, "2": {"a": 3}, "3": {"a": 3}},
        }
    )
    minimized = funl.minimize(chain)
    assert json.loads(minimized)["states"] == 3
    assert funl.equiv(minimized, LANG_A) is None
    empty = json.dumps(
        {
            "type": "dfa",
            "alphabet": ["a"],
            "states": 1,
            "initial": 0,
            "accepting": [],
            "transitions": {"0": {"a": 0}},
        }
    )
    assert funl.equiv(empty, LANG_A) == "a"


def test_rationals_stay_exact():
    half_each = json.dumps(
        {
            "type": "wfa",
            "alphabet": ["a"],
            "dim": 1,
            "alpha": ["1"],
            "transitions": {"a": [["1/3"]]},
            "beta": ["1"],
        }
    )
    assert funl.evaluate(half_each, "aaa") == "1/27"


def test_dot_and_canonicalize():
    dot = funl.to_dot(LANG_A)
    assert "digraph" in dot and "doublecircle" in dot
    messy = '{"states": 3, "type": "dfa", "alphabet": ["a"], "initial": 0, "accepting": [1], "transitions": {"0": {"a": 1}, "1": {"a": 2}, "2": {"a": 2}}}'
    canonical = funl.canonicalize(messy)
    assert funl.canonicalize(canonical) == canonical


def test_parse_error():
    with pytest.raises(ValueError):
        funl.minimize("{}")
