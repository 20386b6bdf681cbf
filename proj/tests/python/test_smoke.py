import json
import os
import pathlib

import pytest

import fuzzyds

GOLDEN = pathlib.Path(os.environ.get("FUZZYDS_GOLDEN_DIR", pathlib.Path(__file__).parent.parent / "golden"))


def example():
    frame = fuzzyds.Frame([str(i) for i in range(1, 11)])
    a = fuzzyds.FuzzySet.from_grades(frame, {"1": 0.25, "2": 0.5, "3": 0.75, "4": 1.0,
                                             "5": 1.0, "6": 0.75, "7": 0.5, "8": 0.25})
    c = fuzzyds.FuzzySet.from_grades(frame, {"5": 0.5, "6": 1.0, "7": 0.8, "8": 0.4})
    b = fuzzyds.FuzzySet.from_grades(frame, {"2": 0.5, "3": 1.0, "4": 1.0, "5": 1.0,
                                             "6": 0.9, "7": 0.6, "8": 0.3})
    return frame, a, b, c


def test_worked_example_interval():
    frame, a, b, c = example()
    m = fuzzyds.Bpa(frame, [(a, 0.5), (c, 0.5)])
    lo, hi = fuzzyds.interval(m, b)
    assert lo == pytest.approx(0.57, abs=1e-9)
    assert hi == pytest.approx(0.975, abs=1e-9)
    assert fuzzyds.mass_upper(b, c, 1.0) == pytest.approx(0.95, abs=1e-9)


def test_decompose_levels():
    _, _, _, c = example()
    d = fuzzyds.decompose(c)
    assert [lv.alpha for lv in d.levels] == pytest.approx([0.4, 0.5, 0.8, 1.0])
    assert [lv.fraction for lv in d.levels] == pytest.approx([0.4, 0.1, 0.3, 0.2])
    assert d.levels[-1].cut.support() == ["6"]
    assert d.recompose().approx_equal(c)


def test_combine_and_vacuous():
    frame, a, b, c = example()
    m = fuzzyds.Bpa(frame, [(a, 0.5), (c, 0.5)])
    report = fuzzyds.combine(m, fuzzyds.Bpa.vacuous(frame))
    assert report.conflict_mass == pytest.approx(0.0)
    assert report.result.approx_equal(m)
    assert fuzzyds.ishizuka_equivalence_check(m, m)


def test_json_round_trip():
    doc = (GOLDEN / "ex441_bpa.json").read_text()
    m = fuzzyds.Bpa.from_json(doc)
    again = fuzzyds.Bpa.from_json(m.to_json())
    assert again.approx_equal(m)
    assert len(json.loads(m.to_json())["focals"]) == 2


def test_oracle_agrees():
    frame, a, b, c = example()
    m = fuzzyds.Bpa(frame, [(a, 0.5), (c, 0.5)])
    lo, hi = fuzzyds.oracle.oracle_bel_pls(m, b)
    assert (lo, hi) == pytest.approx((0.57, 0.975), abs=1e-9)


def test_errors_carry_kind():
    frame, _, _, _ = example()
    with pytest.raises(fuzzyds.FuzzyDSError) as info:
        fuzzyds.Bpa(frame, [(fuzzyds.FuzzySet.crisp(frame, ["1"]), 0.4)])
    assert info.value.kind == "BadMass"
    with pytest.raises(ValueError):
        fuzzyds.FuzzySet.crisp(frame, ["nope"])
