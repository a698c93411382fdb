"""Random term/formula generation over a signature, for property tests."""

import random

from interpforge import logic as L


def random_term(rng, sig, vars_, depth):
    choices = ["var"] * 3
    if sig.constants:
        choices.append("const")
    if sig.functions and depth > 0:
        choices += ["app"] * 3
    kind = rng.choice(choices)
    if kind == "var":
        return L.Variable(rng.choice(vars_))
    if kind == "const":
        return L.Constant(rng.choice(sorted(sig.constants)))
    fun = rng.choice(sorted(sig.functions))
    n = sig.functions[fun]
    return L.Apply(fun, [random_term(rng, sig, vars_, depth - 1) for _ in range(n)])


def random_formula(rng, sig, vars_=None, depth=3):
    vars_ = list(vars_ or ["x", "y", "z"])
    if depth <= 0 or rng.random() < 0.3:
        if sig.relations and rng.random() < 0.5:
            rel = rng.choice(sorted(sig.relations))
            n = sig.relations[rel]
            return L.Rel(rel, [random_term(rng, sig, vars_, 1) for _ in range(n)])
        return L.Eq(random_term(rng, sig, vars_, 1),
                    random_term(rng, sig, vars_, 1))
    kind = rng.choice(["not", "and", "or", "imp", "iff", "all", "ex"])
    if kind == "not":
        return L.Not(random_formula(rng, sig, vars_, depth - 1))
    if kind in ("and", "or", "imp", "iff"):
        cls = {"and": L.And, "or": L.Or, "imp": L.Imp, "iff": L.Iff}[kind]
        return cls(random_formula(rng, sig, vars_, depth - 1),
                   random_formula(rng, sig, vars_, depth - 1))
    v = rng.choice(vars_ + ["w"])
    cls = L.Forall if kind == "all" else L.Exists
    return cls(v, random_formula(rng, sig, vars_ + [v], depth - 1))


def random_sentence(rng, sig, depth=3):
    f = random_formula(rng, sig, depth=depth)
    for v in reversed(L.free_variables(f)):
        f = L.Forall(v, f)
    return f


def corpus(seed, sig, count, depth=3):
    rng = random.Random(seed)
    return [random_formula(rng, sig, depth=depth) for _ in range(count)]
