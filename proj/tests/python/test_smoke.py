from fractions import Fraction

import pytest

import lctk


def test_cusp_threshold():
    assert lctk.lct("x^2 + y^3") == Fraction(5, 6)
    assert lctk.lct("x^2 + 2*x*y^2 + y^4 + y^5") == Fraction(7, 10)
    assert lctk.lct({"vars": ["x", "y"], "terms": [{"e": [3, 5], "c": "1"}]}) == Fraction(1, 5)


def test_certificate_replays():
    r = lctk.lct_exact("x^2 + 2*x*y^2 + y^4 + y^5")
    assert r["conclusion"] == "exact"
    assert [s["kind"] for s in r["certificate"]["steps"]] == ["diagonal-edge", "shift", "diagonal-edge"]
    assert lctk.replay(r["certificate"]) is None
    r["certificate"]["steps"][-1]["evaluated_min"] = Fraction(3, 4)
    assert lctk.replay(r["certificate"]) is not None


def test_bounds_and_polygon():
    b = lctk.lct_bounds("x^2 + 2*x*y^2 + y^4 + y^5", [2, 1])
    assert (b["lower"], b["upper"], b["exact"]) == (Fraction(1, 2), Fraction(3, 4), False)
    assert lctk.lct_bounds("1 + x", [1, 1]) is None
    p = lctk.newton_polygon("x^2 + y^3")
    assert p["vertices"] == [[0, 3], [2, 0]]
    assert p["diagonal_crossing"] == Fraction(6, 5)


def test_polynomial_helpers():
    assert lctk.multiply("x + y", "x - y") == lctk.normalize("x^2 - y^2")
    assert lctk.weighted_leading_term("x^2 + y^3 + y^4", [3, 2]) == lctk.normalize("x^2 + y^3")
    assert lctk.weighted_multiplicity("x + y^5", [1, 1]) == 1


def test_weighted_spaces():
    assert lctk.is_well_formed([1, 1, 4, 9])
    assert not lctk.is_well_formed([2, 2, 8, 9])
    assert lctk.fano_check([1, 1, 4, 9], 9)
    assert lctk.h0([1, 1, 4, 9], 9, 12) == 28
    assert lctk.h_squared([1, 1, 4, 9], 9) == Fraction(1, 4)


def test_family():
    c = lctk.constants(4, 1)
    assert (c["ell"], c["v"], c["K"], c["tau"]) == (28, 124, 112, Fraction(5, 1092))
    assert lctk.inequality_report(4)["passes"]
    assert not lctk.inequality_report(3)["passes"]
    assert lctk.min_m(4, "newton")["m"] == 3
    assert lctk.min_m(4, "sigma")["m"] == 1
    run = lctk.certify_family(4, 1, "y^5", "0", seed=7, trials=5, jobs=2)
    assert run["summary"]["certified"] == 5
    assert all(t["certificate"]["conclusion"] == "certified" for t in run["trials"])
    assert run == lctk.certify_family(4, 1, "y^5", "0", seed=7, trials=5, jobs=1)


def test_product_certification():
    triple = {"factors": [{"poly": {"vars": ["x", "y"], "terms": [{"e": [1, 0], "c": "1"}]}, "mult": 3}]}
    cert = lctk.lct_certify(triple, {"n": 4, "m": 1, "tau": "1/2", "K": 3})
    assert cert["conclusion"] == "refuted"
    assert cert["value"] == Fraction(1, 3)


def test_errors():
    with pytest.raises(lctk.ParseError):
        lctk.lct("x^^2")
    with pytest.raises(lctk.DomainError):
        lctk.constants(0, 1)
    with pytest.raises(ValueError):
        lctk.min_m(4, "other")
