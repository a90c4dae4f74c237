from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from obstructor.bundles import P1, Curve, Model, SplitBundle, Triviality
from obstructor.cech import cech_dims
from obstructor.obstruction import (
    Rule, Status, balanced_h0_profile, classify, obstruction_report, obstruction_sheaf,
    sufficient_vanishing_range,
)

DW = Model.on_p1([-1, -1, -1])


def model(g, degrees, flags=None):
    return Model(Curve(g), SplitBundle.from_degrees(degrees, flags))


def test_sheaf_examples():
    assert obstruction_sheaf(DW, 2).degrees == (0, 0, 0)
    assert obstruction_sheaf(DW, 3).degrees == (-2, -2, -2)
    q4 = obstruction_sheaf(Model.on_p1([-2] * 4), 3)
    assert set(q4.degrees) == {-4}
    with pytest.raises(ValueError):
        obstruction_sheaf(DW, 4)
    with pytest.raises(ValueError):
        obstruction_sheaf(DW, 1)


def test_balanced_odd_level_multiplicity():
    # E* (x) wedge^3 E has q * C(q, 3) = 16 summands, all of degree (k-1)d = -4.
    # The k * C(q, k) = 12 count of the usual balanced display is reported as a note.
    m = Model.on_p1([-2] * 4)
    assert obstruction_sheaf(m, 3).degrees == (-4,) * 16
    notes = obstruction_report(m).notes
    assert len(notes) == 1 and "16" in notes[0] and "12" in notes[0]
    assert obstruction_report(Model.on_p1([-2] * 3)).notes == ()


def test_report_examples():
    rep = obstruction_report(DW)
    assert rep.ks == [2, 3]
    assert (rep.level(2).dims.h0, rep.level(2).dims.h1) == (3, 0)
    assert (rep.level(3).dims.h0, rep.level(3).dims.h1) == (0, 3)
    assert all(lvl.dims.h0 == 0 for lvl in obstruction_report(Model.on_p1([-2] * 3)).levels)
    with pytest.raises(ValueError):
        obstruction_report(Model.on_p1([4]))
    with pytest.raises(KeyError):
        rep.level(5)


def test_report_cross_check_with_cech():
    for degrees in product(range(-3, 2), repeat=3):
        for lvl in obstruction_report(Model.on_p1(degrees)).levels:
            h0 = sum(cech_dims(d, 16)[0] for d in lvl.sheaf.degrees)
            h1 = sum(cech_dims(d, 16)[1] for d in lvl.sheaf.degrees)
            assert (lvl.dims.h0, lvl.dims.h1) == (h0, h1)


def test_classify_examples():
    v = classify(DW)
    assert v.status is Status.SUPPORTS_EXOTIC and v.rule is Rule.P1_RANK3 and v.witness is not None
    v = classify(Model.on_p1([0, -1, -1]))
    assert v.status is Status.GOOD and v.rule is Rule.P1_RANK3
    v = classify(model(1, [1, 1, 1]))
    assert v.status is Status.GOOD and v.rule is Rule.GENUS1_I
    v = classify(model(2, [0, 0, 1], ["T", "T", "N"]))
    assert v.status is Status.GOOD and v.rule is Rule.NONNEG_LOW_DEGREE
    assert Rule.VANISHING in v.supporting
    assert Rule.NONNEG_LOW_DEGREE.letter == "d"


def test_unknown_picard_data_is_inconclusive():
    v = classify(model(1, [0, 0, 0]))
    assert v.status is Status.INCONCLUSIVE and v.rule is Rule.NONE
    assert v.failed


def test_genus_one_second_branch():
    # Q^(2) = wedge^2 E here, all negative: deg = -h1
    v = classify(model(1, [-1, -1, -2]))
    assert v.status is Status.GOOD
    assert v.rule is Rule.GENUS1_II


def test_balanced_rules():
    assert classify(Model.on_p1([-1] * 4)).status is Status.SUPPORTS_EXOTIC
    v = classify(Model.on_p1([-3] * 5))
    assert v.status is Status.GOOD and v.rule is Rule.P1_BALANCED
    assert classify(Model.on_p1([2] * 4)).rule is not Rule.P1_BALANCED


def test_rank_two_vacuous():
    assert sufficient_vanishing_range(2) == []
    assert classify(Model.on_p1([5, 7])).status is Status.GOOD


@pytest.mark.parametrize("q,expected", [(2, []), (3, [2]), (5, [2, 3, 4])])
def test_vanishing_range(q, expected):
    assert sufficient_vanishing_range(q) == expected
    assert sufficient_vanishing_range(Model.on_p1([0] * q)) == expected


def test_vanishing_never_fires_on_minus_one_cube():
    assert classify(DW).rule is Rule.P1_RANK3
    assert obstruction_report(DW).level(2).dims.h0 != 0


def test_vanishing_never_contradicts_exact_rules():
    for degrees in product(range(-5, 6), repeat=3):
        v = classify(Model.on_p1(degrees), with_witness=False)
        if Rule.VANISHING in v.supporting:
            assert v.status is Status.GOOD


@pytest.mark.parametrize("q", range(2, 7))
def test_balanced_profile(q):
    for d in range(-6, -1):
        assert balanced_h0_profile(q, d) == [0] * (q - 1)
    assert balanced_h0_profile(q, -1)[0] == comb(q, 2)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 3), st.lists(st.integers(-4, 4), min_size=2, max_size=4),
       st.lists(st.sampled_from(list(Triviality)), min_size=4, max_size=4))
def test_classify_total_and_consistent(g, degrees, flags):
    m = model(g, degrees, flags[: len(degrees)])
    v = classify(m, with_witness=False)
    assert (v.status is Status.INCONCLUSIVE) == (v.rule is Rule.NONE)
    rep = obstruction_report(m)
    for lvl in rep.levels:
        if lvl.dims.is_exact:
            assert lvl.dims.h0 - lvl.dims.h1 == lvl.dims.chi
