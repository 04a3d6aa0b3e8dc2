import pytest

import paucity_lab as pl


def test_taxicab_counts():
    r = pl.enumerate("x^3", 2, 12)
    assert r["schema"] == pl.SCHEMA
    assert r["counts"] == {"total": 284, "trivial": 276, "shared": 0, "disjoint": 8}
    assert pl.enumerate([0, 0, 0, 1], 2, 9)["counts"]["disjoint"] == 0


def test_solutions_and_oracle():
    counts, rows = pl.solutions("x^3", 3, 6)
    assert counts["counts"]["disjoint"] == 36
    assert ((1, 5, 5), (2, 3, 6), "DISJOINT") in rows
    assert pl.brute_counts("x^3", 3, 6)["counts"] == counts["counts"]


def test_depress():
    d = pl.depress("x^3+3x^2")
    assert d["g"] == "y^3-27y"
    assert d["map"] == "y=3x+3"
    assert d["residual"] == "54"
    assert pl.parse("x^3+3x^2") == [0, 0, 3, 1]


def test_big_coefficients_round_trip():
    big = 10**40
    assert pl.parse([1, 0, big]) == [1, 0, big]
    assert pl.format_poly([0, -big, 0, 1], "y") == "y^3-" + str(big) + "y"


def test_surface_algebra():
    assert pl.critical_values("y^3-27y") == [-2916, 0, 1]
    assert pl.singular_test("y^3-27y", 2, [6])
    assert not pl.singular_test("y^3-27y", 2, [1])
    assert pl.numeric_singular_test("y^3-27y", 2, [6])
    c = pl.census("y^3-27y", 2, 1000)
    assert c["singular_n_sample"] == [3, 6]
    assert pl.points_on_surface("y^3", 2, [1], 12) == [(9, 10, 12), (10, 9, 12)]
    curves = pl.family_audit("y^3-27y", 2, [6])
    assert curves and not any(cv["can_carry_positive"] for cv in curves)


def test_ladder_and_fit(tmp_path):
    r = pl.ladder("x^3", 2, [50, 100, 200], cache_dir=str(tmp_path), compare=True)
    assert r["fit"]["status"] == "OK"
    assert r["fit"]["slope"] < 2
    assert r["verdict"]["consistent_with_theorem"]
    again = pl.ladder("x^3", 2, [50, 100, 200], cache_dir=str(tmp_path), compare=True)
    assert again == r
    fit = pl.fit_power_law([(b, b ** (4 / 3)) for b in (10, 20, 40, 80)])
    assert abs(fit["slope"] - 4 / 3) < 1e-9


def test_errors():
    with pytest.raises(pl.PaucityError, match="DegreeTooLow"):
        pl.depress("3")
    with pytest.raises(pl.PaucityError, match="ParseError"):
        pl.parse("x^")
    with pytest.raises(pl.PaucityError, match="UnsupportedS"):
        pl.trivial_count(4, 3)
    assert pl.classify([1, 12], [9, 10]) == "DISJOINT"
