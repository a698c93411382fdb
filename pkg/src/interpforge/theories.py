"""Catalog of weak arithmetic and concatenation theories, their axiom
schemas, shorthands and named class formulas."""

from . import logic as L
from .logic import (And, Apply, Constant, Eq, Exists, Forall, Iff, Imp, Not,
                    Or, Rel, Signature, Variable, big_and, big_or)


class CatalogError(Exception):
    pass


# signatures

ARITH = Signature("arith", {"zero"}, {"S": 1, "plus": 2, "times": 2},
                  {"leq": 2})
ARITH_CORE = Signature("arith_core", {"zero"}, {"S": 1, "plus": 2, "times": 2})
BITS = Signature("bits", {"zero", "one"}, {"o": 2}, {"pref": 2})
BITS_CORE = Signature("bits_core", {"zero", "one"}, {"o": 2})
BITS_SUFF = Signature("bits_suff", {"zero", "one"}, {"o": 2},
                      {"pref": 2, "suff": 2})
BITS_SUFF_SUB = Signature("bits_suff_sub", {"zero", "one"}, {"o": 2},
                          {"pref": 2, "suff": 2, "sub": 2})
BITS_EPS = Signature("bits_eps", {"zero", "one", "eps"}, {"o": 2})


# term builders

ZERO = Constant("zero")
ONE = Constant("one")
EPS = Constant("eps")


def S(t):
    return Apply("S", [t])


def plus(a, b):
    return Apply("plus", [a, b])


def times(a, b):
    return Apply("times", [a, b])


def o(a, b):
    return Apply("o", [a, b])


def leq(a, b):
    return Rel("leq", [a, b])


def pref(a, b):
    return Rel("pref", [a, b])


def suff(a, b):
    return Rel("suff", [a, b])


def sub(a, b):
    return Rel("sub", [a, b])


def v(name):
    return Variable(name)


def neq(a, b):
    return Not(Eq(a, b))


def numeral(n):
    if n < 0:
        raise CatalogError("negative numeral")
    t = ZERO
    for _ in range(n):
        t = S(t)
    return t


def biteral(alpha, allow_empty=False):
    """Left-nested concatenation term for a bit string."""
    if alpha == "":
        if allow_empty:
            return EPS
        raise CatalogError("empty string has no name here")
    t = None
    for ch in alpha:
        if ch not in "01":
            raise CatalogError("bad bit %r" % ch)
        letter = ZERO if ch == "0" else ONE
        t = letter if t is None else o(t, letter)
    return t


def segment_sets(alpha):
    """Nonempty prefixes, suffixes and substrings of a nonempty string."""
    if not alpha:
        raise CatalogError("empty string")
    n = len(alpha)
    prefs = {alpha[:k] for k in range(1, n + 1)}
    suffs = {alpha[k:] for k in range(n)}
    subs = {alpha[i:j] for i in range(n) for j in range(i + 1, n + 1)}
    return prefs, suffs, subs


def _ordered(strings):
    return sorted(strings, key=lambda s: (len(s), s))


# shorthands

def _fresh_for(terms, count):
    avoid = set()
    for t in terms:
        avoid.update(L.free_variables(t))
    return L.fresh_variables(avoid, count)


def expand_shorthand(name, args):
    args = list(args)
    if name == "leq_l":
        x, y = args
        (z,) = _fresh_for(args, 1)
        return Exists(z, Eq(plus(v(z), x), y))
    if name == "lt_l":
        x, y = args
        (r,) = _fresh_for(args, 1)
        return Exists(r, And(neq(v(r), ZERO), Eq(plus(v(r), x), y)))
    if name == "subseq_s":
        x, y = args
        u, w = _fresh_for(args, 2)
        return Or(Eq(x, y),
                  Exists(u, Exists(w, big_or([
                      Eq(y, o(v(u), x)),
                      Eq(y, o(x, v(w))),
                      Eq(y, o(o(v(u), x), v(w)))]))))
    if name == "prefix_def":
        x, y = args
        (z,) = _fresh_for(args, 1)
        return Or(Eq(y, x), Exists(z, Eq(y, o(x, v(z)))))
    if name == "sub_def":
        x, y = args
        (u,) = _fresh_for(args, 1)
        return big_or([pref(x, y), suff(x, y),
                       Exists(u, And(pref(v(u), y), suff(x, v(u))))])
    raise CatalogError("unknown shorthand %r" % name)


# schemas

class Schema:
    def __init__(self, name, kind, params, generate, distinct=False):
        self.name = name
        self.kind = kind          # "nat" or "bits"
        self.params = params      # 1 or 2
        self.generate = generate
        self.distinct = distinct  # pair schemas over distinct parameters

    def instantiate(self, param):
        if self.params == 1:
            args = (param,)
        else:
            if not (isinstance(param, tuple) and len(param) == 2):
                raise CatalogError("schema %s takes a pair" % self.name)
            args = param
        for a in args:
            if self.kind == "nat":
                if not (isinstance(a, int) and a >= 0):
                    raise CatalogError("schema %s takes naturals" % self.name)
            else:
                if not (isinstance(a, str) and a and set(a) <= {"0", "1"}):
                    raise CatalogError(
                        "schema %s takes nonempty bit strings" % self.name)
        if self.distinct and args[0] == args[1]:
            raise CatalogError("schema %s needs distinct parameters"
                               % self.name)
        return self.generate(*args)

    def parameter_space(self, bound):
        """All admissible parameters with components within bound (value
        for naturals, length for strings)."""
        if self.kind == "nat":
            base = list(range(bound + 1))
        else:
            base = []
            for n in range(1, bound + 1):
                for k in range(2 ** n):
                    base.append(format(k, "0%db" % n))
        if self.params == 1:
            return base
        pairs = [(a, b) for a in base for b in base]
        if self.distinct:
            pairs = [p for p in pairs if p[0] != p[1]]
        return pairs


def _sch_r1(n, m):
    return Eq(plus(numeral(n), numeral(m)), numeral(n + m))


def _sch_r2(n, m):
    return Eq(times(numeral(n), numeral(m)), numeral(n * m))


def _sch_r3(n, m):
    return neq(numeral(n), numeral(m))


def _sch_r4(n):
    return Forall("x", Imp(leq(v("x"), numeral(n)),
                           big_or([Eq(v("x"), numeral(k))
                                   for k in range(n + 1)])))


def _sch_r5(n):
    return Forall("x", Or(leq(v("x"), numeral(n)), leq(numeral(n), v("x"))))


def _sch_iq3(n):
    return Forall("x", Iff(leq(v("x"), numeral(n)),
                           big_or([Eq(v("x"), numeral(k))
                                   for k in range(n + 1)])))


def _sch_iq3s(n):
    return Forall("x", Imp(expand_shorthand("leq_l", [v("x"), numeral(n)]),
                           big_or([Eq(v("x"), numeral(k))
                                   for k in range(n + 1)])))


def _sch_wd1(alpha, beta):
    return Eq(o(biteral(alpha), biteral(beta)), biteral(alpha + beta))


def _sch_wd2(alpha, beta):
    return neq(biteral(alpha), biteral(beta))


def _sch_wd3(alpha):
    prefs = _ordered(segment_sets(alpha)[0])
    return Forall("x", Iff(pref(v("x"), biteral(alpha)),
                           big_or([Eq(v("x"), biteral(g)) for g in prefs])))


def _sch_id4s(alpha):
    subs = _ordered(segment_sets(alpha)[2])
    return Forall("x", Imp(
        expand_shorthand("subseq_s", [v("x"), biteral(alpha)]),
        big_or([Eq(v("x"), biteral(g)) for g in subs])))


def _sch_suffix(alpha):
    suffs = _ordered(segment_sets(alpha)[1])
    return Forall("x", Iff(suff(v("x"), biteral(alpha)),
                           big_or([Eq(v("x"), biteral(g)) for g in suffs])))


def _sch_substring(alpha):
    subs = _ordered(segment_sets(alpha)[2])
    return Forall("x", Iff(sub(v("x"), biteral(alpha)),
                           big_or([Eq(v("x"), biteral(g)) for g in subs])))


SCH_R1 = Schema("R1", "nat", 2, _sch_r1)
SCH_R2 = Schema("R2", "nat", 2, _sch_r2)
SCH_R3 = Schema("R3", "nat", 2, _sch_r3, distinct=True)
SCH_R4 = Schema("R4", "nat", 1, _sch_r4)
SCH_R5 = Schema("R5", "nat", 1, _sch_r5)
SCH_IQ3 = Schema("IQ3", "nat", 1, _sch_iq3)
SCH_IQ3S = Schema("IQ3*", "nat", 1, _sch_iq3s)
SCH_WD1 = Schema("WD1", "bits", 2, _sch_wd1)
SCH_WD2 = Schema("WD2", "bits", 2, _sch_wd2, distinct=True)
SCH_WD3 = Schema("WD3", "bits", 1, _sch_wd3)
SCH_ID4 = Schema("ID4", "bits", 1, _sch_wd3)
SCH_ID4S = Schema("ID4*", "bits", 1, _sch_id4s)
SCH_SUFF = Schema("SUFF", "bits", 1, _sch_suffix)
SCH_SUB = Schema("SUB", "bits", 1, _sch_substring)


# finite axioms

def _forall(names, body):
    return L.forall_many(names, body)


x, y, z, w, u = v("x"), v("y"), v("z"), v("w"), v("u")

AX_Q1 = _forall("xy", Imp(neq(x, y), neq(S(x), S(y))))
AX_Q2 = Forall("x", neq(S(x), ZERO))
AX_Q3 = Forall("x", Or(Eq(x, ZERO), Exists("y", Eq(x, S(y)))))
AX_Q4 = Forall("x", Eq(plus(x, ZERO), x))
AX_Q5 = _forall("xy", Eq(plus(x, S(y)), S(plus(x, y))))
AX_Q6 = Forall("x", Eq(times(x, ZERO), ZERO))
AX_Q7 = _forall("xy", Eq(times(x, S(y)), plus(times(x, y), x)))

Q_AXIOMS = [("Q1", AX_Q1), ("Q2", AX_Q2), ("Q3", AX_Q3), ("Q4", AX_Q4),
            ("Q5", AX_Q5), ("Q6", AX_Q6), ("Q7", AX_Q7)]
IQ_AXIOMS = [("Q1", AX_Q1), ("Q2", AX_Q2), ("Q4", AX_Q4),
             ("Q5", AX_Q5), ("Q6", AX_Q6), ("Q7", AX_Q7)]

AX_ADD_ASSOC = _forall("xyz", Eq(plus(plus(x, y), z), plus(x, plus(y, z))))
AX_LEFT_DISTRIB = _forall("xyz",
                          Eq(times(x, plus(y, z)),
                             plus(times(x, y), times(x, z))))
AX_MUL_ASSOC = _forall("xyz", Eq(times(times(x, y), z), times(x, times(y, z))))
AX_ADD_COMM = _forall("xy", Eq(plus(x, y), plus(y, x)))
AX_MUL_COMM = _forall("xy", Eq(times(x, y), times(y, x)))
AX_RIGHT_CANCEL = _forall("xyz", Imp(Eq(plus(x, z), plus(y, z)), Eq(x, y)))
AX_NONNEG = _forall("xy", Imp(Eq(plus(x, y), ZERO),
                              And(Eq(x, ZERO), Eq(y, ZERO))))
AX_NO_ZERO_DIV = _forall("xy", Imp(Eq(times(x, y), ZERO),
                                   Or(Eq(x, ZERO), Eq(y, ZERO))))

RING_AXIOMS = [("I", AX_LEFT_DISTRIB), ("II", AX_ADD_ASSOC),
               ("III", AX_MUL_ASSOC), ("IV", AX_ADD_COMM),
               ("V", AX_MUL_COMM), ("VI", AX_RIGHT_CANCEL),
               ("VII", AX_NONNEG), ("VIII", AX_NO_ZERO_DIV)]

AX_ZERO_MIN = Forall("x", leq(ZERO, x))
AX_SUCC_MONO = _forall("xy", Imp(leq(x, y), leq(S(x), S(y))))

AX_TRICHOTOMY = _forall("xy", big_or([
    expand_shorthand("lt_l", [x, y]),
    Eq(x, y),
    expand_shorthand("lt_l", [y, x])]))

AX_D1 = _forall("xyz", Eq(o(o(x, y), z), o(x, o(y, z))))
AX_D2 = _forall("xy", Imp(neq(x, y), And(neq(o(x, ZERO), o(y, ZERO)),
                                         neq(o(x, ONE), o(y, ONE)))))
AX_D3 = _forall("xy", neq(o(x, ZERO), o(y, ONE)))
AX_D4 = Forall("x", Iff(pref(x, ZERO), Eq(x, ZERO)))
AX_D5 = Forall("x", Iff(pref(x, ONE), Eq(x, ONE)))
AX_D6 = _forall("xy", Iff(pref(x, o(y, ZERO)),
                          Or(Eq(x, o(y, ZERO)), pref(x, y))))
AX_D7 = _forall("xy", Iff(pref(x, o(y, ONE)),
                          Or(Eq(x, o(y, ONE)), pref(x, y))))

AX_IDBAR5 = _forall("xy", Imp(neq(x, y), And(neq(o(ZERO, x), o(ZERO, y)),
                                             neq(o(ONE, x), o(ONE, y)))))
AX_IDBAR6 = _forall("xy", neq(o(ZERO, x), o(ONE, y)))

AX_AT0 = _forall("xy", neq(o(x, y), ZERO))
AX_AT1 = _forall("xy", neq(o(x, y), ONE))

AX_ID5A = Forall("x", And(suff(ZERO, o(x, ZERO)), suff(ONE, o(x, ONE))))
AX_ID5B = _forall("xy", Imp(suff(x, y),
                            And(suff(o(x, ZERO), o(y, ZERO)),
                                suff(o(x, ONE), o(y, ONE)))))

ID_AXIOMS = [("ID1", AX_D1), ("ID2", AX_D2), ("ID3", AX_D3)]

AX_TC1 = _forall("xyz", Eq(o(x, o(y, z)), o(o(x, y), z)))
AX_TC2 = _forall("xyzw", Imp(
    Eq(o(x, y), o(z, w)),
    Or(And(Eq(x, z), Eq(y, w)),
       Exists("u", Or(And(Eq(z, o(x, u)), Eq(o(u, w), y)),
                      And(Eq(x, o(z, u)), Eq(o(u, y), w)))))))
AX_TC3 = _forall("xy", neq(o(x, y), ZERO))
AX_TC4 = _forall("xy", neq(o(x, y), ONE))
AX_TC5 = neq(ZERO, ONE)

AX_TC1E = Forall("x", And(Eq(o(EPS, x), x), Eq(o(x, EPS), x)))
AX_TC3E = _forall("xyzw", Imp(
    Eq(o(x, y), o(z, w)),
    Exists("u", Or(And(Eq(z, o(x, u)), Eq(o(u, w), y)),
                   And(Eq(x, o(z, u)), Eq(o(u, y), w))))))
AX_TC5E = _forall("xy", Imp(Eq(o(x, y), ZERO), Or(Eq(x, EPS), Eq(y, EPS))))
AX_TC7E = _forall("xy", Imp(Eq(o(x, y), ONE), Or(Eq(x, EPS), Eq(y, EPS))))


# theories

class Theory:
    def __init__(self, name, signature, axioms, schemas=()):
        self.name = name
        self.signature = signature
        self.axioms = list(axioms)      # (label, closed formula)
        self.schemas = list(schemas)
        for label, ax in self.axioms:
            if L.free_variables(ax):
                raise CatalogError("axiom %s of %s is not closed"
                                   % (label, name))

    def schema(self, name):
        for s in self.schemas:
            if s.name == name:
                return s
        raise CatalogError("theory %s has no schema %r" % (self.name, name))

    def __repr__(self):
        return "Theory(%r)" % self.name


def _build_catalog():
    cat = {}

    def add(t):
        cat[t.name] = t

    add(Theory("R", ARITH, [], [SCH_R1, SCH_R2, SCH_R3, SCH_R4, SCH_R5]))
    add(Theory("Q", ARITH_CORE, Q_AXIOMS))
    add(Theory("Q2", ARITH_CORE,
               Q_AXIOMS + RING_AXIOMS[:6] + [("trichotomy", AX_TRICHOTOMY)]))
    add(Theory("IQ", ARITH, IQ_AXIOMS, [SCH_IQ3]))
    add(Theory("IQ*", ARITH_CORE, IQ_AXIOMS, [SCH_IQ3S]))
    add(Theory("IQ+", ARITH,
               IQ_AXIOMS + [("add_assoc", AX_ADD_ASSOC),
                            ("left_distrib", AX_LEFT_DISTRIB),
                            ("mul_assoc", AX_MUL_ASSOC)],
               [SCH_IQ3]))
    add(Theory("IQ++", ARITH,
               cat["IQ+"].axioms + [("zero_min", AX_ZERO_MIN),
                                    ("succ_mono", AX_SUCC_MONO)],
               [SCH_IQ3]))
    add(Theory("IQ2", ARITH, IQ_AXIOMS + RING_AXIOMS, [SCH_IQ3]))
    add(Theory("WD", BITS, [], [SCH_WD1, SCH_WD2, SCH_WD3]))
    add(Theory("D", BITS,
               [("D1", AX_D1), ("D2", AX_D2), ("D3", AX_D3), ("D4", AX_D4),
                ("D5", AX_D5), ("D6", AX_D6), ("D7", AX_D7)]))
    add(Theory("ID", BITS, ID_AXIOMS, [SCH_ID4]))
    add(Theory("ID*", BITS_CORE, ID_AXIOMS, [SCH_ID4S]))
    add(Theory("IDbar", BITS,
               ID_AXIOMS + [("IDbar5", AX_IDBAR5), ("IDbar6", AX_IDBAR6)],
               [SCH_ID4]))
    add(Theory("IDbar*", BITS_CORE,
               ID_AXIOMS + [("IDbar5", AX_IDBAR5), ("IDbar6", AX_IDBAR6)],
               [SCH_ID4S]))
    add(Theory("ID2", BITS,
               ID_AXIOMS + [("AT0", AX_AT0), ("AT1", AX_AT1)], [SCH_ID4]))
    add(Theory("ID3", BITS_SUFF, cat["ID2"].axioms, [SCH_ID4, SCH_SUFF]))
    add(Theory("ID4", BITS_SUFF_SUB, cat["ID2"].axioms,
               [SCH_ID4, SCH_SUFF, SCH_SUB]))
    add(Theory("ID5", BITS_SUFF_SUB,
               cat["ID2"].axioms + [("ID5a", AX_ID5A), ("ID5b", AX_ID5B)],
               [SCH_ID4, SCH_SUFF, SCH_SUB]))
    add(Theory("TC", BITS_CORE,
               [("TC1", AX_TC1), ("TC2", AX_TC2), ("TC3", AX_TC3),
                ("TC4", AX_TC4), ("TC5", AX_TC5)]))
    add(Theory("TCeps", BITS_EPS,
               [("TC1e", AX_TC1E), ("TC2e", AX_TC1), ("TC3e", AX_TC3E),
                ("TC4e", neq(ZERO, EPS)), ("TC5e", AX_TC5E),
                ("TC6e", neq(ONE, EPS)), ("TC7e", AX_TC7E),
                ("TC8e", neq(ZERO, ONE))]))
    return cat


_CATALOG = _build_catalog()


def theory_names():
    return list(_CATALOG)


def get_theory(name):
    if name not in _CATALOG:
        raise CatalogError("unknown theory %r" % name)
    return _CATALOG[name]


def instantiate_schema(theory, schema_name, param):
    return theory.schema(schema_name).instantiate(param)


# class formulas

class ClassFormula:
    def __init__(self, name, variables, body, signature):
        self.name = name
        self.variables = list(variables)
        self.body = body
        self.signature = signature
        if set(L.free_variables(body)) != set(self.variables):
            raise CatalogError(
                "class %s has free variables %r, expected %r"
                % (name, L.free_variables(body), self.variables))

    @property
    def arity(self):
        return len(self.variables)

    def apply(self, terms):
        """Membership formula for the given argument terms."""
        terms = list(terms)
        if len(terms) != self.arity:
            raise CatalogError("class %s takes %d arguments"
                               % (self.name, self.arity))
        return L.substitute(self.body, dict(zip(self.variables, terms)))


def _member(cls, *terms):
    return cls.apply(terms)


def _forall_in(names, cls_of, body):
    """forall names, (each in its class) -> body; cls_of maps name ->
    membership formula."""
    guard = big_and([cls_of[n] for n in names])
    return L.forall_many(names, Imp(guard, body))


def _exists_in(names, cls_of, body):
    guard = big_and([cls_of[n] for n in names])
    return L.exists_many(names, And(guard, body))


def _forall_rel(var, rel, bound, body):
    return Forall(var, Imp(Rel(rel, [v(var), bound]), body))


def _exists_rel(var, rel, bound, body):
    return Exists(var, And(Rel(rel, [v(var), bound]), body))


def _build_classes():
    classes = {}

    def add(name, variables, body, sig):
        classes[name] = ClassFormula(name, variables, body, sig)

    # letters-with-last-character class tower for the two atom sentences
    add("K1_id2", ["y"],
        big_or([Eq(y, ZERO), Eq(y, ONE),
                Exists("u", Or(Eq(y, o(u, ZERO)), Eq(y, o(u, ONE))))]),
        BITS)
    k1 = classes["K1_id2"]
    add("K2_id2", ["y"],
        And(_member(k1, y),
            Forall("x", Imp(_member(k1, x),
                            And(neq(o(x, y), ZERO), neq(o(x, y), ONE))))),
        BITS)
    k2 = classes["K2_id2"]
    add("K_id2", ["w"],
        And(_member(k2, w),
            Forall("z", Imp(_member(k2, z), _member(k2, o(z, w))))),
        BITS)

    # defined suffix relation: last-character analysis plus a well-behaved
    # prefix order below x
    cond1 = Or(Eq(y, x), Exists("u", Eq(y, o(u, x))))
    cond2 = _forall_rel("u", "pref", x, big_or([
        Eq(u, ZERO), Eq(u, ONE),
        _exists_rel("v", "pref", u,
                    Or(Eq(u, o(v("v"), ZERO)), Eq(u, o(v("v"), ONE))))]))
    cond3 = big_and([
        _forall_rel("z", "pref", x, pref(z, z)),
        _forall_rel("z", "pref", x,
                    _forall_rel("w", "pref", z,
                                _forall_rel("v", "pref", w, pref(v("v"), z)))),
        pref(x, x),
        _forall_rel("z", "pref", x,
                    _forall_rel("w", "pref", z, pref(w, x)))])
    add("Suff_id3", ["x", "y"], big_and([cond1, cond2, cond3]), BITS)

    # defined substring relation
    add("Sub_id4", ["x", "y"],
        big_or([pref(x, y), suff(x, y),
                _exists_rel("u", "pref", y, suff(x, u))]),
        BITS_SUFF)

    # substring-closed class on which the suffix relation is congruential
    j_body = big_and([
        sub(u, u),
        _forall_rel("w", "sub", u, sub(w, w)),
        _forall_rel("w", "sub", u,
                    _forall_rel("v0", "sub", w,
                                _forall_rel("v1", "sub", v("v0"),
                                            sub(v("v1"), w)))),
        _forall_rel("w", "sub", u, big_or([
            Eq(w, ZERO), Eq(w, ONE),
            _exists_rel("v", "sub", w,
                        Or(Eq(w, o(v("v"), ZERO)), Eq(w, o(v("v"), ONE))))])),
        _forall_rel("w", "sub", u,
                    Forall("x", Imp(Eq(w, o(x, ZERO)), suff(ZERO, w)))),
        _forall_rel("w", "sub", u,
                    Forall("x", Imp(Eq(w, o(x, ONE)), suff(ONE, w)))),
        _forall_rel("w", "sub", u,
                    _forall("xy", Imp(And(Eq(w, o(y, ZERO)), suff(x, y)),
                                      sub(o(x, ZERO), w)))),
        _forall_rel("w", "sub", u,
                    _forall("xy", Imp(And(Eq(w, o(y, ONE)), suff(x, y)),
                                      sub(o(x, ONE), w))))])
    add("J_id5", ["u"], j_body, BITS_SUFF_SUB)

    # suffix-absorption classes
    add("K1_idstar", ["u"], Forall("x", suff(u, o(x, u))), BITS_SUFF_SUB)
    k1s = classes["K1_idstar"]
    add("K_idstar", ["u"],
        And(_member(k1s, u),
            Forall("w", Imp(_member(k1s, w), _member(k1s, o(w, u))))),
        BITS_SUFF_SUB)

    # well-ordered-below class for the order relation
    add("G_iq", ["u"], big_and([
        leq(u, u),
        Forall("w", Imp(leq(w, u), leq(w, w))),
        Forall("w", Imp(leq(w, u),
                        Forall("v0", Imp(leq(v("v0"), w),
                                         Forall("v1", Imp(leq(v("v1"), v("v0")),
                                                          leq(v("v1"), w))))))),
        Forall("w", Imp(leq(w, u),
                        Or(Eq(w, ZERO),
                           Exists("v", And(leq(v("v"), w), Eq(w, S(v("v")))))))),
        Forall("w", Imp(leq(w, u),
                        Forall("x", Imp(Eq(w, S(x)), leq(ZERO, w))))),
        Forall("w", Imp(leq(w, u),
                        _forall("xy", Imp(And(Eq(w, S(y)), leq(x, y)),
                                          leq(S(x), w)))))]),
        ARITH)

    # additive-absorption classes and their double closure
    add("K1_iqstar", ["u"], Forall("x", leq(u, plus(x, u))), ARITH)
    k1q = classes["K1_iqstar"]
    add("Kplus_iqstar", ["u"],
        And(_member(k1q, u),
            Forall("x", Imp(_member(k1q, x), _member(k1q, plus(x, u))))),
        ARITH)
    kpq = classes["Kplus_iqstar"]
    add("K_iqstar", ["u"],
        And(_member(kpq, u),
            Forall("x", Imp(_member(kpq, x), _member(kpq, times(x, u))))),
        ARITH)

    # matrix classes; a 2x2 matrix is a 4-tuple (row-major)
    one = S(ZERO)

    def is_identity(m):
        return big_and([Eq(m[0], one), Eq(m[1], ZERO),
                        Eq(m[2], ZERO), Eq(m[3], one)])

    def unimodular(m):
        return Eq(times(m[0], m[3]), plus(one, times(m[1], m[2])))

    def mat_eq(m, n):
        return big_and([Eq(a, b) for a, b in zip(m, n)])

    def mat_prod(m, n):
        # entries of m*n as terms
        return [plus(times(m[0], n[0]), times(m[1], n[2])),
                plus(times(m[0], n[1]), times(m[1], n[3])),
                plus(times(m[2], n[0]), times(m[3], n[2])),
                plus(times(m[2], n[1]), times(m[3], n[3]))]

    def mat_prod_eq(m, n, r):
        return mat_eq(mat_prod(m, n), r)

    A = [v("a%d" % i) for i in range(1, 5)]
    B = [v("b%d" % i) for i in range(1, 5)]
    C = [v("c%d" % i) for i in range(1, 5)]

    add("MatK", ["a1", "a2", "a3", "a4"],
        And(Not(is_identity(A)), unimodular(A)), ARITH)
    add("MatKeps", ["a1", "a2", "a3", "a4"], unimodular(A), ARITH_CORE)
    # only the first entry matters; the rest occur vacuously so the class
    # has the full 4-tuple of designated variables
    add("MatJ", ["a1", "a2", "a3", "a4"],
        big_and([neq(A[0], ZERO)] + [Eq(e, e) for e in A[1:]]), ARITH)

    matk = classes["MatK"]
    in_k = lambda m: _member(matk, *m)
    witness = L.exists_many(
        ["c%d" % i for i in range(1, 5)],
        big_and([in_k(C)]
                + [leq(e, v("mb")) for e in A]
                + [leq(e, v("mb")) for e in C]
                + [mat_prod_eq(A, C, B)]))
    per_entry = []
    for i in range(4):
        largest = big_and([leq(B[j], B[i]) for j in range(4) if j != i])
        body = L.substitute(Or(mat_eq(A, B), witness), {"mb": B[i]})
        per_entry.append(And(largest, body))
    add("MatPrefix",
        ["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"],
        big_and([in_k(A), in_k(B), big_or(per_entry)]), ARITH)

    # editor-property class and its downward closure
    keps = classes["MatKeps"]
    in_ke = lambda m: _member(keps, *m)
    W = [v("w%d" % i) for i in range(1, 5)]
    X = [v("x%d" % i) for i in range(1, 5)]
    Y = [v("y%d" % i) for i in range(1, 5)]
    Z = [v("z%d" % i) for i in range(1, 5)]
    U = [v("u%d" % i) for i in range(1, 5)]
    editor_consequent = L.exists_many(
        [t.name for t in U],
        And(in_ke(U),
            Or(And(mat_prod_eq(X, U, Z), mat_prod_eq(U, W, Y)),
               And(mat_prod_eq(Z, U, X), mat_prod_eq(U, Y, W)))))
    editor_body = L.forall_many(
        [t.name for t in X] + [t.name for t in Z],
        L.forall_many(
            [t.name for t in Y],
            Imp(in_ke(Y),
                Imp(mat_eq(mat_prod(X, Y), mat_prod(Z, W)),
                    editor_consequent))))
    add("H_tceps", ["w1", "w2", "w3", "w4"],
        And(in_ke(W), editor_body), ARITH_CORE)

    h = classes["H_tceps"]
    prec_k = L.exists_many(
        [t.name for t in C],
        And(in_ke(C), mat_prod_eq(B, C, A)))
    add("I_tceps", ["a1", "a2", "a3", "a4"],
        And(_member(h, *A),
            L.forall_many([t.name for t in B],
                          Imp(prec_k, _member(h, *B)))),
        ARITH_CORE)

    # semiring-behaviour class tower for the arithmetic-only translation
    add("N0_iq2", ["u"], big_and([
        Eq(plus(ZERO, u), u),
        Forall("x", Imp(Eq(plus(x, u), ZERO), And(Eq(x, ZERO), Eq(u, ZERO)))),
        Forall("x", Eq(plus(S(x), u), S(plus(x, u)))),
        _forall("xy", Eq(plus(plus(x, y), u), plus(x, plus(y, u)))),
        _forall("xy", Imp(Eq(plus(x, u), plus(y, u)), Eq(x, y))),
        Eq(times(ZERO, u), ZERO)]),
        ARITH_CORE)
    n0 = classes["N0_iq2"]
    in_n0 = {"x": _member(n0, x)}
    add("N1_iq2", ["u"], big_and([
        _member(n0, u),
        _forall_in(["x"], in_n0, Eq(plus(x, u), plus(u, x))),
        _forall_in(["x"], in_n0,
                   Forall("y", Eq(times(x, plus(y, u)),
                                  plus(times(x, y), times(x, u))))),
        _forall_in(["x"], in_n0,
                   Imp(Eq(times(x, u), ZERO),
                       Or(Eq(x, ZERO), Eq(u, ZERO)))),
        _forall_in(["x"], in_n0, Eq(times(S(x), u), plus(times(x, u), u)))]),
        ARITH_CORE)
    n1 = classes["N1_iq2"]
    in_n1 = {"x": _member(n1, x), "y": _member(n1, y)}
    add("N2_iq2", ["u"], big_and([
        _member(n1, u),
        _forall_in(["x", "y"], in_n1,
                   Eq(times(times(x, y), u), times(x, times(y, u)))),
        _forall_in(["x"], in_n1, Eq(times(x, u), times(u, x)))]),
        ARITH_CORE)
    n2 = classes["N2_iq2"]
    add("N3_iq2", ["u"],
        And(_member(n2, u),
            Forall("x", Imp(_member(n2, x), _member(n2, plus(x, u))))),
        ARITH_CORE)
    n3 = classes["N3_iq2"]
    add("N_iq2", ["u"],
        And(_member(n3, u),
            Forall("x", Imp(_member(n3, x), _member(n3, times(x, u))))),
        ARITH_CORE)
    n = classes["N_iq2"]

    # order with class-members as witnesses, and the comparability tower
    add("leq_N", ["u", "w"],
        Exists("r", And(_member(n, v("r")), Eq(plus(u, v("r")), w))),
        ARITH_CORE)
    leqn = classes["leq_N"]
    add("M0_q2", ["u"], big_and([
        _member(n, u),
        Forall("w", Imp(_member(leqn, w, u), _member(n, w))),
        _forall("xy", Imp(And(_member(leqn, x, u), _member(leqn, y, u)),
                          Or(_member(leqn, x, y), _member(leqn, y, x))))]),
        ARITH_CORE)
    m0 = classes["M0_q2"]
    add("M1_q2", ["u"],
        And(_member(m0, u),
            Forall("x", Imp(_member(m0, x), _member(m0, plus(x, u))))),
        ARITH_CORE)
    m1 = classes["M1_q2"]
    add("M_q2", ["u"],
        And(_member(m1, u),
            Forall("x", Imp(_member(m1, x), _member(m1, times(x, u))))),
        ARITH_CORE)

    return classes


_CLASSES = _build_classes()


def class_names():
    return list(_CLASSES)


def get_class_formula(name):
    if name not in _CLASSES:
        raise CatalogError("unknown class %r" % name)
    return _CLASSES[name]
