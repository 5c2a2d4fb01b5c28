from fractions import Fraction

import pytest

import qda


def test_orbit_inventory():
    sizes = [len(o) for o in qda.orbits(5)]
    assert sizes.count(4) == 22
    assert sizes.count(2) == 14


def test_admissible_pairs():
    assert qda.descartes_pair("++-+--") == (3, 2)
    assert qda.admissible_pairs("++-+--") == [(3, 2), (1, 2), (3, 0), (1, 0)]


def test_zone_and_boundary():
    assert qda.zone(-2, 3) == "A"
    assert qda.zone("-0.014", "-0.15") == "E"
    with pytest.raises(qda.OnBoundary):
        qda.zone(0, 1)
    with pytest.raises(qda.OnBoundary):
        qda.zone(Fraction(2, 5), Fraction(2, 25))


def test_classify_is_exact():
    cl = qda.classify("-0.014", "-0.15", Fraction(1, 1000), "-1/4000")
    assert qda.to_fraction(cl["params"]["a"]) == Fraction(-7, 500)
    with pytest.raises(qda.OnDiscriminant):
        qda.classify("2/5", "2/25", "1/125", "1/3125")


def test_scan_zone_a():
    numbers = {r["case_number"] for r in qda.scan(-2, 3)}
    assert numbers == set(range(1, 9))


def test_realize_certificate():
    cert = qda.realize("++-+--", 1, 2)
    assert cert["couple"]["ap"] == [1, 2]
    with pytest.raises(qda.NotFound):
        qda.realize("++-+--", 3, 0, attempts=200)


def test_t5_slice_svg():
    svg = qda.render_slice("2/5", "2/25")
    assert svg.startswith("<?xml")
    assert 'data-x="0.008" data-y="0.00032"' in svg


def test_cli_in_process():
    code, out, _ = qda.cli("zones", "--a", "-2", "--b", "3")
    assert code == 0 and out == "A\n"
    code, _, _ = qda.cli("zones", "--a", "nope", "--b", "3")
    assert code == 1
