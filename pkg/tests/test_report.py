import json

import pytest
from hypothesis import given, strategies as st

from obstructor.bundles import Triviality
from obstructor.report import (
    ModelSpec, SpecError, analyze, balanced_spec, emit_spec, exit_code, exotic_report, oracle, parse_spec,
    render_exotic_text, render_oracle_text, render_sweep_text, render_text, sweep, to_json,
)

specs = st.builds(
    lambda g, ds, flagged, fl: ModelSpec(g, tuple(ds), tuple(fl[: len(ds)]) if flagged else None),
    st.integers(0, 4), st.lists(st.integers(-9, 9), min_size=1, max_size=4), st.booleans(),
    st.lists(st.sampled_from(list(Triviality)), min_size=4, max_size=4),
)


@given(specs)
def test_round_trip(spec):
    assert parse_spec(emit_spec(spec)) == spec


@pytest.mark.parametrize("text,path", [
    ('{"genus": -1, "degrees": [1]}', "genus"),
    ('{"genus": 0, "degrees": []}', "degrees"),
    ('{"genus": 0, "degrees": [1, 2.5]}', "degrees[1]"),
    ('{"genus": 0, "degrees": [0, 0], "triviality_flags": ["T"]}', "triviality_flags"),
    ('{"genus": 0, "degrees": [0], "triviality_flags": ["sometimes"]}', "triviality_flags[0]"),
    ('{"genus": 0, "degrees": [0], "colour": 1}', "colour"),
    ('{"degrees": [0]}', "genus"),
    ('[1, 2]', "$"),
    ('{nope', "$"),
])
def test_spec_errors_name_the_field(text, path):
    with pytest.raises(SpecError) as info:
        parse_spec(text)
    assert info.value.path == path


def test_analyze_exotic_has_verified_witness():
    doc = analyze(ModelSpec(0, (-1, -1, -1)))
    assert doc["verdict"]["status"] == "SupportsExotic"
    assert doc["witness"]["verified"] is True
    assert exit_code(doc) == 10
    assert list(doc) == ["tool", "conventions", "spec", "model", "obstructions", "verdict", "witness", "notes"]


def test_analyze_examples():
    doc = analyze(ModelSpec(0, (2, 3, 4)))
    assert doc["verdict"]["status"] == "Good" and doc["verdict"]["rule"].startswith("(a)")
    assert doc["witness"] is None
    doc = analyze(ModelSpec(1, (0, 0, 0)))
    assert doc["verdict"]["status"] == "Inconclusive" and exit_code(doc) == 20
    assert doc["obstructions"][0]["exact"] is False
    assert analyze(ModelSpec(0, (3,)))["obstructions"] == []


def test_deterministic_bytes():
    spec = ModelSpec(2, (0, 0, 1), ("Trivial", "Trivial", "NonTrivial"))
    assert to_json(analyze(spec)) == to_json(analyze(spec))
    assert render_text(analyze(spec)) == render_text(analyze(spec))
    # summand order in the input does not matter
    assert analyze(ModelSpec(0, (3, -1, 0)))["model"] == analyze(ModelSpec(0, (0, 3, -1)))["model"]


def test_json_is_plain():
    json.loads(to_json(analyze(ModelSpec(0, (-1, -1, -1)))))


def test_sweep_examples():
    table = sweep([(-2, 0)] * 3)
    assert table["summary"]["rows"] == 27
    assert table["summary"]["counts"]["SupportsExotic"] == 1
    bal = sweep([(-3, -1)] * 4, balanced=True)
    assert [r["status"] for r in bal["rows"]] == ["Good", "Good", "SupportsExotic"]
    assert sweep([(0, -1)] * 3)["rows"] == []


def test_sweep_check_alpha_column():
    table = sweep([(-2, 0)] * 3, check_alpha=True)
    assert all("alpha_rank" in r for r in table["rows"])
    # (-2, 0, 0) and friends carry a nonzero boundary map but are classed Good
    assert table["summary"]["disagreements"] == sum(not r["agrees"] for r in table["rows"])
    assert "boundary-map disagreements" in render_sweep_text(table)


def test_sweep_limits():
    with pytest.raises(SpecError):
        sweep([(-1000, 1000)] * 3)
    with pytest.raises(SpecError):
        sweep([])
    with pytest.raises(SpecError):
        sweep([(0, 1)] * 2, check_alpha=True)


def test_exotic_and_oracle_reports():
    doc = exotic_report((-1, -1, -1))
    assert doc["alpha_rank"] == 3 and doc["h0_Q2"] == doc["h1_Q3"] == 3
    assert "rank=3" in render_exotic_text(doc)
    with pytest.raises(SpecError):
        exotic_report((1, 2))
    assert oracle(-2)["h1_basis"] == ["z^-1"]
    assert "h0=6" in render_oracle_text(oracle(5))


def test_balanced_spec():
    assert balanced_spec(4, -1).degrees == (-1,) * 4
    with pytest.raises(SpecError):
        balanced_spec(0, 1)
