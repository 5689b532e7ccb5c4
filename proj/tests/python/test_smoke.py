"""Smoke tests for the python surface: worked examples end to end."""

import pytest

import boolring as br


def poly(text, n=None):
    return br.BoolPoly(text, n)


def test_arithmetic_basics():
    assert str(poly("x1 + x1", 1)) == "0"
    assert poly("x1", 1) * poly("x1", 1) == poly("x1", 1)
    f = poly("x1*x2*x3 + x3 + 1")
    g = poly("x1*x3 + 1", 3)
    assert f * g == poly("x3 + 1", 3)
    assert f.eval((1, 0, 1)) == 0
    assert f.eval((1, 1, 1)) == 1


def test_parse_errors():
    with pytest.raises(ValueError):
        br.BoolPoly("x1 x2")
    with pytest.raises(ValueError):
        br.BoolPoly("x9", 3)


def test_normal_form_and_membership():
    f = poly("x1*x2*x3 + x3 + 1")
    assert br.normal_form(poly("x1*x3 + 1", 3), f) == poly("x1*x3 + x3", 3)
    assert br.member(f, poly("x3 + 1", 3))
    assert not br.member(f, poly("x1*x3 + 1", 3))
    bits = br.equivalences(f, poly("x3 + 1", 3))
    assert len(bits) == 10 and all(bits)


def test_ideal_operations():
    f = poly("x1*x2*x3 + x3 + 1")
    h = poly("x3 + 1", 3)
    assert str(br.colon(f, h)) == "1"
    assert br.colon(h, f) == poly("x1*x2*x3 + 1", 3)
    assert br.ideal_sum(poly("x1", 2), poly("x2", 2)) == poly("x1*x2 + x1 + x2", 2)
    assert br.ideal_intersect(f, poly("x1*x3 + 1", 3)) == h


def test_defining_polynomial():
    gens = [poly("x1*x2 + x3", 3), poly("x1*x3 + x2", 3), poly("x3 + 1", 3)]
    assert br.defining_polynomial(gens) == poly("x1*x2*x3 + 1", 3)


def test_varieties_agree():
    f = poly("1 + x1*x5 + x2*x4 + x2*x4*x5")
    brute = br.variety(f, "brute")
    assert len(brute) == 12
    assert (1, 0, 0, 0, 1) in brute
    for method in ("explicit1", "explicit2", "mod2"):
        assert br.variety(f, method) == brute


def test_count_solutions():
    counted = br.count_solutions([poly("x1 + x2 + x2*x3")])
    assert counted.count == 4
    assert counted.d_terms == ["-10", "10", "-4"]
    assert br.count_solutions(br.pair_family(2)).count == 9
    with pytest.raises(RuntimeError):
        br.count_solutions([br.full_sum(6)], subset_guard=10)


def test_sat_and_fixtures():
    assert not br.sat([poly("x1", 1), poly("x1 + 1", 1)]).satisfiable
    assert br.sat(br.cyclic13(1)).satisfiable
    assert br.sat(br.cyclic13(2)).satisfiable
    report = br.sat(br.pair_family(17))
    assert report.satisfiable
    assert report.full_monomial_in_product
    assert report.odd_solution_count


def test_duality():
    f = poly("1 + x2 + x3 + x1*x2 + x1*x3 + x2*x3 + x1*x2*x3")
    pts = [t for t in br.variety(f)]
    assert pts == [(0, 0, 1), (0, 1, 0), (0, 1, 1)]
    g = br.inverse_variety(pts, 3)
    assert br.variety(g) == pts
    assert br.phi(poly("x1", 1)) == br.BoolPoly.one(1)
    assert br.pol([], 3) == br.BoolPoly.one(3)
    assert br.separator((1, 0)) == poly("x1 + x1*x2", 2)
    assert br.interpolation_nf([1], [(1, 0), (1, 1)], 2) == poly("x1", 2)
    assert br.full_sum(2) == poly("1 + x1 + x2 + x1*x2", 2)
    assert br.parity_odd(poly("x1*x2", 2))
    factors = br.factorize(poly("x1*x2*x3 + x3 + 1"))
    product = br.BoolPoly.one(3)
    for factor in factors:
        product = product * factor
    assert product == poly("x1*x2*x3 + x3 + 1")


def test_particular_solution():
    assert br.particular_solution([poly("x1 + 1", 1)]) == (1,)
    assert br.particular_solution([poly("x1", 1), poly("x1 + 1", 1)]) is None


def test_dimacs():
    n, polys = br.parse_dimacs("p cnf 2 2\n1 -2 0\n2 0\n")
    assert n == 2
    assert polys[0] == poly("x1*x2 + x2", 2)
    assert br.sat(polys, n=n).satisfiable
    assert br.stone_transform(1, [[1], [-1]]) == [poly("x1 + 1", 1), poly("x1", 1)]
