"""Catalog of concrete relative translations between the catalog
theories, each packaged with its verification plan."""

from . import logic as L
from . import theories as T
from .logic import (And, Apply, Constant, Eq, Exists, Forall, Imp, Not, Or,
                    Rel, Variable, big_and, big_or, exists_many, forall_many)
from .translation import DefiningFormula, RelativeTranslation, compose


class InterpError(Exception):
    pass


def _v(name):
    return Variable(name)


def _names(base, n):
    return ["%s%d" % (base, i) for i in range(1, n + 1)]


def _top():
    return DefiningFormula(["x1"], Eq(_v("x1"), _v("x1")))


def _ident_const(name):
    return DefiningFormula(["y1"], Eq(_v("y1"), Constant(name)))


def _ident_fun(name, arity):
    xs = _names("x", arity)
    return DefiningFormula(xs + ["y1"],
                           Eq(_v("y1"), Apply(name, [_v(x) for x in xs])))


def _ident_rel(name, arity):
    xs = _names("x", arity)
    return DefiningFormula(xs, Rel(name, [_v(x) for x in xs]))


def _identity_parts(sig):
    rels = {r: _ident_rel(r, n) for r, n in sig.relations.items()}
    funs = {f: _ident_fun(f, n) for f, n in sig.functions.items()}
    cons = {c: _ident_const(c) for c in sig.constants}
    return rels, funs, cons


def _one_dim(source_sig, target_sig, domain=None, relations=None):
    """Identity-shaped translation with an optional domain and relation
    overrides."""
    rels, funs, cons = _identity_parts(source_sig)
    rels.update(relations or {})
    return RelativeTranslation(source_sig, target_sig, 1,
                               domain or _top(), rels, funs, cons)


def _guarded_rel(cls, rel_name):
    """x R y reread below the class: (y in C and x R y) or (y outside C
    and x = x)."""
    x, y = _v("x1"), _v("x2")
    in_c = cls.apply([y])
    return DefiningFormula(
        ["x1", "x2"],
        Or(And(in_c, Rel(rel_name, [x, y])),
           And(Not(in_c), Eq(x, x))))


# 4-tuple matrix translation pieces (row-major 2x2 matrices)

_NUM1 = T.S(T.ZERO)
_MAT_ZERO = (_NUM1, T.ZERO, _NUM1, _NUM1)
_MAT_ONE = (_NUM1, _NUM1, T.ZERO, _NUM1)
_MAT_ID = (_NUM1, T.ZERO, T.ZERO, _NUM1)


def _mat_terms(names):
    return [_v(n) for n in names]


def _mat_prod_terms(m, n):
    return [T.plus(T.times(m[0], n[0]), T.times(m[1], n[2])),
            T.plus(T.times(m[0], n[1]), T.times(m[1], n[3])),
            T.plus(T.times(m[2], n[0]), T.times(m[3], n[2])),
            T.plus(T.times(m[2], n[1]), T.times(m[3], n[3]))]


def _tuple_graph(entries):
    ys = _names("y", 4)
    return DefiningFormula(ys, big_and([Eq(_v(n), e)
                                        for n, e in zip(ys, entries)]))


def _concat_graph():
    xs, ys, zs = _names("x", 4), _names("y", 4), _names("z", 4)
    prod = _mat_prod_terms(_mat_terms(xs), _mat_terms(ys))
    body = big_and([Eq(_v(n), e) for n, e in zip(zs, prod)])
    return DefiningFormula(xs + ys + zs, body)


PSI_MAT_ZERO = _tuple_graph(_MAT_ZERO)
PSI_MAT_ONE = _tuple_graph(_MAT_ONE)
PSI_MAT_EPS = _tuple_graph(_MAT_ID)
PSI_MAT_CONCAT = _concat_graph()


# named matrix facts checked alongside the editor-axiom obligations

def _mat_lemmas():
    keps = T.get_class_formula("MatKeps")
    a = _names("a", 4)
    b = _names("b", 4)
    A = _mat_terms(a)
    B = _mat_terms(b)
    in_k = lambda m: keps.apply(m)

    def mat_eq(m, n):
        return big_and([Eq(p, q) for p, q in zip(m, n)])

    al = _mat_prod_terms(A, _MAT_ZERO)
    bl = _mat_prod_terms(B, _MAT_ZERO)
    ar = _mat_prod_terms(A, _MAT_ONE)
    br = _mat_prod_terms(B, _MAT_ONE)
    dj = forall_many(a + b, Imp(And(in_k(A), in_k(B)),
                                Not(mat_eq(al, br))))
    rc = forall_many(a + b, Imp(
        big_and([in_k(A), in_k(B), Not(mat_eq(A, B))]),
        And(Not(mat_eq(al, bl)), Not(mat_eq(ar, br)))))
    pd = forall_many(a, Imp(
        in_k(A),
        Or(mat_eq(A, list(_MAT_ID)),
           exists_many(b, And(in_k(B),
                              Or(mat_eq(A, bl), mat_eq(A, br)))))))
    return [("lemma:DJ", dj), ("lemma:RC", rc), ("lemma:PD", pd)]


class Plan:
    def __init__(self, structure_id, range_spec, schema_bounds=None,
                 extras=(), extras_range_spec=None):
        self.structure_id = structure_id
        self.range_spec = range_spec
        self.schema_bounds = dict(schema_bounds or {})
        self.extras = list(extras)       # (label, closed sentence)
        # extras may need a wider quantifier range than the main
        # obligations; None means they share range_spec
        self.extras_range_spec = extras_range_spec


class InterpretationEntry:
    def __init__(self, name, source, target, translation, plan):
        self.name = name
        self.source = source             # source theory name
        self.target = target             # target theory name
        self.translation = translation
        self.plan = plan

    def __repr__(self):
        return "InterpretationEntry(%r)" % self.name


_ORDER = ["id_in_idstar", "iq_in_iqstar", "id2_in_id", "id3_in_id2",
          "id4_in_id3", "id5_in_id4", "idstar_in_id5", "iqpp_in_iqp",
          "iqstar_in_iqpp", "wd_in_r", "idbar_in_iq2", "tceps_in_q2",
          "iq2_in_iq", "q2_in_q"]


def _build_entries():
    entries = {}

    def sig(theory_name):
        return T.get_theory(theory_name).signature

    def add(name, source, target, translation, plan):
        entries[name] = InterpretationEntry(name, source, target,
                                            translation, plan)

    strings3 = Plan("BitStrings", "strings_upto:3", {"bits": 3})
    nats12 = Plan("Naturals", "nats_upto:12", {"nat": 5})

    # prefix defined from concatenation
    x, y = _v("x1"), _v("x2")
    prefix_defn = DefiningFormula(
        ["x1", "x2"], T.expand_shorthand("prefix_def", [x, y]))
    add("id_in_idstar", "ID", "ID*",
        _one_dim(sig("ID"), sig("ID*"), relations={"pref": prefix_defn}),
        strings3)

    # order defined from addition
    leq_defn = DefiningFormula(
        ["x1", "x2"], T.expand_shorthand("leq_l", [x, y]))
    add("iq_in_iqstar", "IQ", "IQ*",
        _one_dim(sig("IQ"), sig("IQ*"), relations={"leq": leq_defn}),
        nats12)

    # domain restricted to the concatenation-closed atom-respecting class
    add("id2_in_id", "ID2", "ID",
        _one_dim(sig("ID2"), sig("ID"),
                 domain=T.get_class_formula("K_id2")),
        strings3)

    # suffix defined inside the prefix language
    add("id3_in_id2", "ID3", "ID2",
        _one_dim(sig("ID3"), sig("ID2"),
                 relations={"suff": T.get_class_formula("Suff_id3")}),
        strings3)

    # substring defined from prefix and suffix
    add("id4_in_id3", "ID4", "ID3",
        _one_dim(sig("ID4"), sig("ID3"),
                 relations={"sub": T.get_class_formula("Sub_id4")}),
        strings3)

    # suffix reread below the substring-closed class J
    add("id5_in_id4", "ID5", "ID4",
        _one_dim(sig("ID5"), sig("ID4"),
                 relations={"suff": _guarded_rel(
                     T.get_class_formula("J_id5"), "suff")}),
        strings3)

    # domain restricted to the suffix-absorbing class
    add("idstar_in_id5", "ID*", "ID5",
        _one_dim(sig("ID*"), sig("ID5"),
                 domain=T.get_class_formula("K_idstar")),
        strings3)

    # order reread below the well-behaved class G
    add("iqpp_in_iqp", "IQ++", "IQ+",
        _one_dim(sig("IQ++"), sig("IQ+"),
                 relations={"leq": _guarded_rel(
                     T.get_class_formula("G_iq"), "leq")}),
        nats12)

    # domain restricted to the doubly closed additive-absorption class
    add("iqstar_in_iqpp", "IQ*", "IQ++",
        _one_dim(sig("IQ*"), sig("IQ++"),
                 domain=T.get_class_formula("K_iqstar")),
        nats12)

    # strings as 2x2 matrices of naturals (4-dimensional)
    mat_prefix = T.get_class_formula("MatPrefix")
    wd_tau = RelativeTranslation(
        sig("WD"), sig("R"), 4,
        T.get_class_formula("MatJ"),
        relations={"pref": mat_prefix},
        functions={"o": PSI_MAT_CONCAT},
        constants={"zero": PSI_MAT_ZERO, "one": PSI_MAT_ONE})
    add("wd_in_r", "WD", "R", wd_tau,
        Plan("Naturals", "tuple_image:wd_in_r:strings_upto:4",
             {"bits": 3}))

    idbar_tau = RelativeTranslation(
        sig("IDbar"), sig("IQ2"), 4,
        T.get_class_formula("MatJ"),
        relations={"pref": mat_prefix},
        functions={"o": PSI_MAT_CONCAT},
        constants={"zero": PSI_MAT_ZERO, "one": PSI_MAT_ONE})
    add("idbar_in_iq2", "IDbar", "IQ2", idbar_tau,
        Plan("Naturals", "tuple_image:idbar_in_iq2:strings_upto:4",
             {"bits": 3}))

    # empty string included: domain is the hereditarily editor-respecting
    # class of unimodular tuples
    tceps_tau = RelativeTranslation(
        sig("TCeps"), sig("Q2"), 4,
        T.get_class_formula("I_tceps"),
        functions={"o": PSI_MAT_CONCAT},
        constants={"zero": PSI_MAT_ZERO, "one": PSI_MAT_ONE,
                   "eps": PSI_MAT_EPS})
    add("tceps_in_q2", "TCeps", "Q2", tceps_tau,
        Plan("Naturals", "tuple_image:tceps_in_q2:strings_eps_upto:3",
             extras=_mat_lemmas()))

    # domain restricted to the semiring-behaviour class N
    n_cls = T.get_class_formula("N_iq2")
    member_extras = [("member:N:%d" % k, n_cls.apply([T.numeral(k)]))
                     for k in range(11)]
    add("iq2_in_iq", "IQ2", "IQ",
        _one_dim(sig("IQ2"), sig("IQ"), domain=n_cls),
        Plan("Naturals", "nats_upto:8", {"nat": 5}, extras=member_extras,
             extras_range_spec="nats_upto:12"))

    # domain restricted to the comparability class M
    add("q2_in_q", "Q2", "Q",
        _one_dim(sig("Q2"), sig("Q"), domain=T.get_class_formula("M_q2")),
        Plan("Naturals", "nats_upto:10"))

    return entries


_ENTRIES = None


def _entries():
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = _build_entries()
    return _ENTRIES


def list_interpretations():
    return list(_ORDER)


def get_interpretation(name):
    if name not in _ORDER:
        raise InterpError("unknown interpretation %r" % name)
    return _entries()[name]


def pipeline(names):
    """Left-to-right composition of catalog translations."""
    names = list(names)
    if not names:
        raise InterpError("empty pipeline")
    taus = []
    for i, name in enumerate(names):
        entry = get_interpretation(name)
        if i > 0:
            prev = get_interpretation(names[i - 1])
            if prev.target != entry.source:
                raise InterpError(
                    "cannot chain %s (into %s) with %s (from %s)"
                    % (names[i - 1], prev.target, name, entry.source))
        taus.append(entry.translation)
    out = taus[0]
    for tau in taus[1:]:
        out = compose(out, tau)
    return out
