import random

import pytest

from interpforge import logic as L
from fol_gen import random_formula

SIG = L.Signature("arith", {"zero"}, {"S": 1, "plus": 2, "times": 2}, {"leq": 2})


def test_parse_eq():
    f = L.parse("(= (plus x zero) x)", SIG)
    assert f == L.Eq(L.Apply("plus", [L.Variable("x"), L.Constant("zero")]),
                     L.Variable("x"))


def test_parse_quantified_axiom():
    f = L.parse("(all x (not (= (S x) zero)))", SIG)
    assert f == L.Forall("x", L.Not(L.Eq(L.Apply("S", [L.Variable("x")]),
                                         L.Constant("zero"))))


def test_parse_arity_mismatch():
    with pytest.raises(L.LogicError):
        L.parse("(plus x)", SIG)


def test_parse_undeclared_symbol():
    with pytest.raises(L.LogicError):
        L.parse("(frob x)", SIG)


def test_parse_syntax_error():
    with pytest.raises(L.LogicError):
        L.parse("(= x", SIG)


def test_print_eq():
    assert L.to_sexpr(L.Eq(L.Variable("x"), L.Variable("x"))) == "(= x x)"


def test_print_forall_leq_numeral():
    two = L.Apply("S", [L.Apply("S", [L.Constant("zero")])])
    f = L.Forall("x", L.Rel("leq", [L.Variable("x"), two]))
    assert L.to_sexpr(f) == "(all x (leq x (S (S zero))))"


def test_free_variables_order():
    assert L.free_variables(L.parse("(= y x)", SIG)) == ["y", "x"]
    assert L.free_variables(L.parse("(all x (= x y))", SIG)) == ["y"]


def test_substitute_simple():
    f = L.parse("(= x y)", SIG)
    g = L.substitute(f, {"x": L.Constant("zero")})
    assert L.to_sexpr(g) == "(= zero y)"


def test_substitute_capture_avoiding():
    f = L.parse("(ex z (= z x))", SIG)
    g = L.substitute(f, {"x": L.Variable("z")})
    assert isinstance(g, L.Exists)
    assert g.var != "z"
    assert g.body == L.Eq(L.Variable(g.var), L.Variable("z"))


def test_fresh_variables():
    assert L.fresh_variables({"x"}, 2) == ["v1", "v2"]
    assert L.fresh_variables({"v1"}, 1) == ["v2"]
    assert L.fresh_variables(set(), 0) == []


def test_alpha_equal():
    a = L.parse("(all x (= x x))", SIG)
    b = L.parse("(all y (= y y))", SIG)
    c = L.parse("(all x (= x zero))", SIG)
    assert L.alpha_equal(a, b)
    assert not L.alpha_equal(a, c)


def test_alpha_equal_free_vars_matter():
    a = L.parse("(= x y)", SIG)
    b = L.parse("(= y x)", SIG)
    assert not L.alpha_equal(a, b)


def test_big_and_right_nested():
    ps = [L.Eq(L.Variable(v), L.Variable(v)) for v in "xyz"]
    f = L.big_and(ps)
    assert f == L.And(ps[0], L.And(ps[1], ps[2]))


def test_roundtrip_random():
    rng = random.Random(7)
    for _ in range(300):
        f = random_formula(rng, SIG)
        assert L.parse(L.to_sexpr(f), SIG) == f


def test_substitution_free_variable_law():
    rng = random.Random(11)
    for _ in range(200):
        f = random_formula(rng, SIG)
        image = L.Apply("plus", [L.Variable("p"), L.Constant("zero")])
        g = L.substitute(f, {"x": image})
        allowed = set(L.free_variables(f)) - {"x"}
        if "x" in L.free_variables(f):
            allowed |= {"p"}
        assert set(L.free_variables(g)) <= allowed


def test_alpha_equal_is_equivalence():
    rng = random.Random(13)
    fs = [random_formula(rng, SIG, depth=2) for _ in range(40)]
    for f in fs:
        assert L.alpha_equal(f, f)
    for f in fs:
        for g in fs:
            assert L.alpha_equal(f, g) == L.alpha_equal(g, f)


def test_fresh_variables_disjoint_large():
    avoid = {"v%d" % k for k in range(0, 1000, 2)}
    out = L.fresh_variables(avoid, 500)
    assert len(out) == len(set(out))
    assert not (set(out) & avoid)


def test_parse_hash_variable():
    # translated output uses names like x#1; they must round-trip
    f = L.parse("(= x#1 x#2)", SIG)
    assert L.to_sexpr(f) == "(= x#1 x#2)"
