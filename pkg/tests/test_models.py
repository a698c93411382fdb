import random

import pytest

from interpforge import logic as L
from interpforge import models as M
from interpforge import theories as T
from fol_gen import random_formula, random_sentence


def test_make_range_specs():
    assert M.make_range("strings_upto:2").elements == \
        ["0", "1", "00", "01", "10", "11"]
    assert M.make_range("strings_eps_upto:1").elements == ["", "0", "1"]
    assert M.make_range("nats_upto:3").elements == [0, 1, 2, 3]
    assert len(M.strings_upto(4)) == 2 ** 5 - 2
    with pytest.raises(M.EvalError):
        M.make_range("strings_upto:0")
    with pytest.raises(M.EvalError):
        M.make_range("nats_upto:-1")
    with pytest.raises(M.EvalError):
        M.make_range("floats:3")


def test_structures():
    assert M.get_structure("Naturals").functions["plus"](2, 3) == 5
    assert M.get_structure("BitStrings").functions["o"]("01", "1") == "011"
    assert M.BITSTRINGS.relations["pref"]("0", "01")
    assert not M.BITSTRINGS.relations["pref"]("1", "01")
    assert M.BITSTRINGS.relations["suff"]("1", "01")
    assert M.BITSTRINGS.relations["sub"]("1", "010")
    assert M.BITSTRINGS_EPS.constants["eps"] == ""
    with pytest.raises(M.EvalError):
        M.get_structure("Reals")


def test_relations_agree_with_segment_sets():
    strings = M.strings_upto(8).elements
    for y in strings:
        prefs, suffs, subs = T.segment_sets(y)
        for x in M.strings_upto(4).elements:
            assert M.BITSTRINGS.relations["pref"](x, y) == (x in prefs)
            assert M.BITSTRINGS.relations["suff"](x, y) == (x in suffs)
            assert M.BITSTRINGS.relations["sub"](x, y) == (x in subs)


def test_evaluate_basics():
    sig = T.ARITH
    rng = M.nats_upto(5)
    phi = L.parse_formula("(all x (= (plus x zero) x))", sig)
    assert M.evaluate(M.NATURALS, rng, phi)
    phi = L.parse_formula("(all x (= (times x x) x))", sig)
    assert not M.evaluate(M.NATURALS, rng, phi)
    phi = L.parse_formula("(= (plus x y) (S (S zero)))", sig)
    assert M.evaluate(M.NATURALS, rng, phi, {"x": 1, "y": 1})
    with pytest.raises(M.EvalError):
        M.evaluate(M.NATURALS, rng, phi, {"x": 1})


def test_atoms_exact_outside_range():
    # terms may leave the range; atoms still evaluate exactly
    sig = T.ARITH
    phi = L.parse_formula("(all x (leq x (times x x)))", sig)
    assert M.evaluate(M.NATURALS, M.nats_upto(5), phi)
    phi = L.parse_formula("(all x (ex y (= y (times x x))))", sig)
    assert not M.evaluate(M.NATURALS, M.nats_upto(5), phi)


def test_evaluate_schema_instance():
    inst = T.instantiate_schema(T.get_theory("ID"), "ID4", "01")
    assert M.evaluate(M.BITSTRINGS, M.strings_upto(3), inst)


def test_check_sentence():
    sig = T.ARITH_CORE
    q2 = L.parse_formula("(all x (not (= (S x) zero)))", sig)
    v = M.check_sentence(M.NATURALS, M.nats_upto(8), q2)
    assert v.status == "holds" and v.holds
    bad = L.parse_formula("(all x (ex y (= (S y) x)))", sig)
    v = M.check_sentence(M.NATURALS, M.nats_upto(8), bad)
    assert v.status == "fails"
    assert v.counterexample == {"x": 0}
    with pytest.raises(M.EvalError):
        M.check_sentence(M.NATURALS, M.nats_upto(8),
                         L.parse_formula("(= x x)", sig))


def test_counterexample_square():
    sig = T.ARITH
    phi = L.parse_formula("(all x (= (times x x) x))", sig)
    v = M.check_sentence(M.NATURALS, M.nats_upto(5), phi)
    assert v.status == "fails"
    assert v.counterexample == {"x": 2}


def test_budget():
    sig = T.ARITH
    phi = L.parse_formula(
        "(all x (all y (all z (= (plus x (plus y z)) (plus (plus x y) z)))))",
        sig)
    v = M.check_sentence(M.NATURALS, M.nats_upto(10), phi, budget=20)
    assert v.status == "budget-exceeded"
    v = M.check_sentence(M.NATURALS, M.nats_upto(10), phi, budget=10 ** 7)
    assert v.status == "holds"


def test_agrees_with_naive():
    rng = random.Random(11)
    checked = 0
    while checked < 200:
        if checked % 2 == 0:
            sig, st, qr = T.ARITH, M.NATURALS, M.nats_upto(rng.randrange(2, 6))
            vals = qr.elements
        else:
            sig, st, qr = T.BITS, M.BITSTRINGS, M.strings_upto(2)
            vals = qr.elements
        phi = random_formula(rng, sig, depth=rng.randrange(1, 4))
        env = {n: rng.choice(vals) for n in L.free_variables(phi)}
        assert M.evaluate(st, qr, phi, env) == \
            M.evaluate_naive(st, qr, phi, env)
        checked += 1


def test_existential_monotone():
    rng = random.Random(23)
    small = M.nats_upto(3)
    big = M.nats_upto(6)
    found = 0
    while found < 50:
        phi = random_formula(rng, T.ARITH, depth=2)
        closed = L.exists_many(L.free_variables(phi), phi)
        found += 1
        if M.evaluate(M.NATURALS, small, closed):
            assert M.evaluate(M.NATURALS, big, closed)


def test_tuple_range_grouping():
    # a width-2 range binds pairs of consecutive same-kind quantifiers
    sig = T.ARITH_CORE
    qr = M.QuantifierRange([(0, 1), (1, 2), (2, 3)], width=2)
    phi = L.parse_formula("(all x#1 (all x#2 (= (S x#1) x#2)))", sig)
    assert M.evaluate(M.NATURALS, qr, phi)
    phi = L.parse_formula("(ex x#1 (ex x#2 (= x#1 (S x#2))))", sig)
    assert not M.evaluate(M.NATURALS, qr, phi)
    phi = L.parse_formula(
        "(all x#1 (all x#2 (ex y#1 (ex y#2 (= (S x#1) y#2)))))", sig)
    assert M.evaluate(M.NATURALS, qr, phi)
    phi = L.parse_formula(
        "(all x#1 (all x#2 (ex y#1 (ex y#2 (= y#1 x#2)))))", sig)
    assert not M.evaluate(M.NATURALS, qr, phi)


def test_forced_witness_matches_enumeration():
    # the existential witness is pinned by equations; the shortcut must
    # still respect range membership
    sig = T.ARITH_CORE
    phi = L.parse_formula(
        "(ex y#1 (ex y#2 (and (= y#1 (S x#1)) (= y#2 (S x#2)))))", sig)
    qr = M.QuantifierRange([(0, 1), (1, 2), (5, 6)], width=2)
    assert M.evaluate(M.NATURALS, qr, phi, {"x#1": 0, "x#2": 1})
    assert not M.evaluate(M.NATURALS, qr, phi, {"x#1": 1, "x#2": 2})
    assert not M.evaluate(M.NATURALS, qr, phi, {"x#1": 5, "x#2": 6})


def test_per_variable_overrides():
    sig = T.ARITH
    qr = M.QuantifierRange([0, 1, 2], overrides={"y": M.nats_upto(9)})
    phi = L.parse_formula("(all x (ex y (= y (times x x))))", sig)
    assert M.evaluate(M.NATURALS, qr, phi)
    phi = L.parse_formula("(all y (leq y (S (S zero))))", sig)
    assert not M.evaluate(M.NATURALS, qr, phi)


def test_range_validation():
    with pytest.raises(M.EvalError):
        M.QuantifierRange([])
    with pytest.raises(M.EvalError):
        M.QuantifierRange([1, 1])


def test_memoization_consistency():
    # repeated nested occurrences of a shared subformula stay correct
    rng = random.Random(7)
    for _ in range(30):
        phi = random_sentence(rng, T.ARITH, depth=3)
        qr = M.nats_upto(3)
        assert M.evaluate(M.NATURALS, qr, phi) == \
            M.evaluate_naive(M.NATURALS, qr, phi)


def test_checker_survives_transient_formulas():
    # a long-lived checker must not serve stale cache entries when old
    # formula objects are garbage collected and their ids reused
    sig = T.BITS
    qr = M.strings_upto(3)
    checker = M.Checker(M.BITSTRINGS, qr)
    rng = random.Random(19)
    for _ in range(150):
        phi = random_sentence(rng, sig, depth=3)
        got = checker.check(phi).status
        want = "holds" if M.evaluate(M.BITSTRINGS, qr, phi) else "fails"
        assert got == want, L.to_sexpr(phi)
