"""m-dimensional relative translations between first-order languages:
formula translation, interpretation obligations, composition."""

from . import logic as L
from .logic import (And, Apply, Constant, Eq, Exists, Forall, Imp, Not,
                    Variable, big_and, exists_many, forall_many)


class TranslationError(Exception):
    pass


def copies(name, m):
    """The m target variables representing one source variable."""
    return ["%s#%d" % (name, i) for i in range(1, m + 1)]


class DefiningFormula:
    """A target formula with an ordered list of designated free
    variables."""

    def __init__(self, variables, body):
        self.variables = list(variables)
        self.body = body
        self._cache = {}
        if set(L.free_variables(body)) != set(self.variables):
            raise TranslationError(
                "defining formula has free variables %r, expected %r"
                % (L.free_variables(body), self.variables))

    def apply_names(self, names):
        names = tuple(names)
        if len(names) != len(self.variables):
            raise TranslationError("expected %d variables, got %d"
                                   % (len(self.variables), len(names)))
        # cached so identical instantiations share one node, which lets
        # the evaluator memoize across obligations
        if names not in self._cache:
            self._cache[names] = L.rename_free(
                self.body, dict(zip(self.variables, names)))
        return self._cache[names]


def _as_defn(value):
    if isinstance(value, DefiningFormula):
        return value
    if hasattr(value, "variables") and hasattr(value, "body"):
        return DefiningFormula(value.variables, value.body)
    variables, body = value
    return DefiningFormula(variables, body)


def default_equality(m):
    xs = ["x%d" % i for i in range(1, m + 1)]
    ys = ["y%d" % i for i in range(1, m + 1)]
    body = big_and([Eq(Variable(a), Variable(b)) for a, b in zip(xs, ys)])
    return DefiningFormula(xs + ys, body)


class RelativeTranslation:
    """Maps one source variable to m target variables; each source symbol
    has a defining target formula over designated variables (arguments
    first, value tuple last)."""

    def __init__(self, source, target, dimension, domain, relations=None,
                 functions=None, constants=None, equality=None):
        if dimension < 1:
            raise TranslationError("dimension must be >= 1")
        self.source = source
        self.target = target
        self.dimension = dimension
        self.domain = _as_defn(domain)
        self.relations = {k: _as_defn(d) for k, d in (relations or {}).items()}
        self.functions = {k: _as_defn(d) for k, d in (functions or {}).items()}
        self.constants = {k: _as_defn(d) for k, d in (constants or {}).items()}
        self.equality_is_default = equality is None
        self.equality = (default_equality(dimension) if equality is None
                         else _as_defn(equality))
        m = dimension
        self._check_arity("domain", self.domain, m)
        self._check_arity("equality", self.equality, 2 * m)
        for name, arity in source.relations.items():
            if name not in self.relations:
                raise TranslationError("relation %r has no defining formula"
                                       % name)
            self._check_arity(name, self.relations[name], m * arity)
        for name, arity in source.functions.items():
            if name not in self.functions:
                raise TranslationError("function %r has no defining formula"
                                       % name)
            self._check_arity(name, self.functions[name], m * (arity + 1))
        for name in source.constants:
            if name not in self.constants:
                raise TranslationError("constant %r has no defining formula"
                                       % name)
            self._check_arity(name, self.constants[name], m)
        for extra in (set(self.relations) - set(source.relations)) | \
                (set(self.functions) - set(source.functions)) | \
                (set(self.constants) - set(source.constants)):
            raise TranslationError("%r is not a source symbol" % extra)
        # composition chain; composed translations carry their parts so
        # that further composition is associative on the nose
        self.factors = [self]

    def _check_arity(self, what, defn, want):
        if len(defn.variables) != want:
            raise TranslationError(
                "%s formula has %d designated variables, expected %d"
                % (what, len(defn.variables), want))

    def domain_at(self, names):
        return self.domain.apply_names(names)


def _all_names(x):
    """Every variable name occurring in a term or formula, bound or
    free."""
    out = set()

    def term(t):
        if isinstance(t, Variable):
            out.add(t.name)
        elif isinstance(t, Apply):
            for a in t.args:
                term(a)

    def go(f):
        if isinstance(f, Eq):
            term(f.left)
            term(f.right)
        elif isinstance(f, L.Rel):
            for a in f.args:
                term(a)
        elif isinstance(f, Not):
            go(f.body)
        elif isinstance(f, L._Binary):
            go(f.left)
            go(f.right)
        elif isinstance(f, L._Quant):
            out.add(f.var)
            go(f.body)
        else:
            raise TranslationError("bad formula %r" % (f,))

    if isinstance(x, L.Term):
        term(x)
    else:
        go(x)
    return out


def _base_avoid(x, m):
    avoid = set()
    for name in _all_names(x):
        avoid.add(name)
        avoid.update(copies(name, m))
    return avoid


def _trans_term(t, value_vars, tau, avoid):
    m = tau.dimension
    if isinstance(t, Variable):
        return big_and([Eq(Variable(w), Variable(c))
                        for w, c in zip(value_vars, copies(t.name, m))])
    if isinstance(t, Constant):
        if t.name not in tau.constants:
            raise TranslationError("constant %r not translated" % t.name)
        return tau.constants[t.name].apply_names(value_vars)
    if isinstance(t, Apply):
        if t.fun not in tau.functions:
            raise TranslationError("function %r not translated" % t.fun)
        tuples = []
        for _ in t.args:
            fresh = L.fresh_variables(avoid, m)
            avoid.update(fresh)
            tuples.append(fresh)
        parts = [tau.domain_at(tup) for tup in tuples]
        parts += [_trans_term(a, tup, tau, avoid)
                  for a, tup in zip(t.args, tuples)]
        flat = [n for tup in tuples for n in tup]
        parts.append(tau.functions[t.fun].apply_names(flat + value_vars))
        return exists_many(flat, big_and(parts))
    raise TranslationError("bad term %r" % (t,))


def translate_term(t, value_vars, tau):
    """The formula stating that the value tuple denotes t; free variables
    are the value tuple plus the copies of t's variables."""
    value_vars = list(value_vars)
    if len(value_vars) != tau.dimension:
        raise TranslationError("expected %d value variables"
                               % tau.dimension)
    if len(set(value_vars)) != len(value_vars):
        raise TranslationError("value variables must be distinct")
    avoid = _base_avoid(t, tau.dimension) | set(value_vars)
    return _trans_term(t, value_vars, tau, avoid)


def _trans_atom(args, apply_defn, tau, avoid):
    """Atom arguments that are bare variables contribute their copies
    directly; compound arguments get a fresh existentially bound value
    tuple."""
    m = tau.dimension
    arg_names = []
    tuples = []
    parts = []
    for a in args:
        if isinstance(a, Variable):
            arg_names.append(copies(a.name, m))
        else:
            fresh = L.fresh_variables(avoid, m)
            avoid.update(fresh)
            arg_names.append(fresh)
            tuples.append((fresh, a))
    for tup, _ in tuples:
        parts.append(tau.domain_at(tup))
    for tup, a in tuples:
        parts.append(_trans_term(a, tup, tau, avoid))
    flat = [n for tup in arg_names for n in tup]
    parts.append(apply_defn(flat))
    body = big_and(parts)
    bound = [n for tup, _ in tuples for n in tup]
    return exists_many(bound, body)


def _trans_formula(phi, tau, avoid):
    m = tau.dimension
    if isinstance(phi, Eq):
        return _trans_atom([phi.left, phi.right],
                           tau.equality.apply_names, tau, avoid)
    if isinstance(phi, L.Rel):
        if phi.rel not in tau.relations:
            raise TranslationError("relation %r not translated" % phi.rel)
        return _trans_atom(list(phi.args),
                           tau.relations[phi.rel].apply_names, tau, avoid)
    if isinstance(phi, Not):
        return Not(_trans_formula(phi.body, tau, avoid))
    if isinstance(phi, L._Binary):
        return type(phi)(_trans_formula(phi.left, tau, avoid),
                         _trans_formula(phi.right, tau, avoid))
    if isinstance(phi, Forall):
        xs = copies(phi.var, m)
        return forall_many(xs, Imp(tau.domain_at(xs),
                                   _trans_formula(phi.body, tau, avoid)))
    if isinstance(phi, Exists):
        xs = copies(phi.var, m)
        return exists_many(xs, And(tau.domain_at(xs),
                                   _trans_formula(phi.body, tau, avoid)))
    raise TranslationError("bad formula %r" % (phi,))


def translate_formula(phi, tau):
    """Relativized translation; free variables are the copies of phi's
    free variables."""
    avoid = _base_avoid(phi, tau.dimension)
    return _trans_formula(phi, tau, avoid)


# obligations

KIND_DOMAIN = "DomainNonempty"
KIND_FUNCTION = "FunctionTotalUnique"
KIND_CONSTANT = "ConstantExistsUnique"
KIND_AXIOM = "AxiomTranslation"
KIND_SCHEMA = "SchemaInstanceTranslation"
KIND_EQUALITY = "EqualityAxiom"


class Obligation:
    def __init__(self, kind, label, sentence):
        self.kind = kind
        self.label = label
        self.sentence = sentence
        if L.free_variables(sentence):
            raise TranslationError("obligation %s is not closed" % label)

    def __repr__(self):
        return "Obligation(%r)" % self.label


def _exists_unique(tau, graph_at, arg_tuples):
    """Exists a domain value tuple satisfying the graph, and any two such
    tuples are translated-equal; arg_tuples are assumed already fixed."""
    m = tau.dimension
    flat_args = [n for tup in arg_tuples for n in tup]
    ys = copies("y", m)
    zs = copies("z", m)
    exist = exists_many(ys, big_and([tau.domain_at(ys),
                                     graph_at(flat_args + ys)]))
    unique = forall_many(ys, Imp(
        And(tau.domain_at(ys), graph_at(flat_args + ys)),
        forall_many(zs, Imp(
            And(tau.domain_at(zs), graph_at(flat_args + zs)),
            tau.equality.apply_names(ys + zs)))))
    return And(exist, unique)


def _function_obligation(tau, name, arity):
    m = tau.dimension
    arg_tuples = [copies("x%d" % (j + 1), m) for j in range(arity)]
    body = _exists_unique(tau, tau.functions[name].apply_names, arg_tuples)
    guard = big_and([tau.domain_at(tup) for tup in arg_tuples])
    flat = [n for tup in arg_tuples for n in tup]
    return forall_many(flat, Imp(guard, body))


def _constant_obligation(tau, name):
    return _exists_unique(tau, lambda names: tau.constants[name]
                          .apply_names(names), [])


def _equality_obligations(tau):
    m = tau.dimension
    xs, ys, zs = copies("x", m), copies("y", m), copies("z", m)
    eq = tau.equality.apply_names
    dom = tau.domain_at
    out = [
        ("refl", forall_many(xs, Imp(dom(xs), eq(xs + xs)))),
        ("sym", forall_many(xs + ys, Imp(
            big_and([dom(xs), dom(ys), eq(xs + ys)]), eq(ys + xs)))),
        ("trans", forall_many(xs + ys + zs, Imp(
            big_and([dom(xs), dom(ys), dom(zs), eq(xs + ys), eq(ys + zs)]),
            eq(xs + zs))))]
    for name in sorted(tau.source.relations):
        arity = tau.source.relations[name]
        olds = [copies("x%d" % (j + 1), m) for j in range(arity)]
        news = [copies("y%d" % (j + 1), m) for j in range(arity)]
        flat_old = [n for t in olds for n in t]
        flat_new = [n for t in news for n in t]
        guard = big_and([dom(t) for t in olds] + [dom(t) for t in news]
                        + [eq(o + n) for o, n in zip(olds, news)]
                        + [tau.relations[name].apply_names(flat_old)])
        out.append(("congr:%s" % name, forall_many(
            flat_old + flat_new,
            Imp(guard, tau.relations[name].apply_names(flat_new)))))
    for name in sorted(tau.source.functions):
        arity = tau.source.functions[name]
        olds = [copies("x%d" % (j + 1), m) for j in range(arity)]
        news = [copies("y%d" % (j + 1), m) for j in range(arity)]
        vs, ws = copies("v", m), copies("w", m)
        flat_old = [n for t in olds for n in t]
        flat_new = [n for t in news for n in t]
        guard = big_and(
            [dom(t) for t in olds] + [dom(t) for t in news]
            + [dom(vs), dom(ws)]
            + [eq(o + n) for o, n in zip(olds, news)]
            + [tau.functions[name].apply_names(flat_old + vs),
               tau.functions[name].apply_names(flat_new + ws)])
        out.append(("congr:%s" % name, forall_many(
            flat_old + flat_new + vs + ws, Imp(guard, eq(vs + ws)))))
    return out


def obligations(tau, source_theory, schema_bounds=None):
    """The proof obligations making tau an interpretation of the source
    theory, in canonical order."""
    if tau.source is not source_theory.signature and \
            tau.source.name != source_theory.signature.name:
        raise TranslationError(
            "translation source %r does not match theory signature %r"
            % (tau.source.name, source_theory.signature.name))
    bounds = dict(schema_bounds or {})
    m = tau.dimension
    out = []
    xs = copies("x", m)
    out.append(Obligation(KIND_DOMAIN, "DomainNonempty",
                          exists_many(xs, tau.domain_at(xs))))
    for name in sorted(tau.source.functions):
        out.append(Obligation(
            KIND_FUNCTION, "FunctionTotalUnique:%s" % name,
            _function_obligation(tau, name, tau.source.functions[name])))
    for name in sorted(tau.source.constants):
        out.append(Obligation(KIND_CONSTANT, "ConstantExistsUnique:%s" % name,
                              _constant_obligation(tau, name)))
    for label, axiom in source_theory.axioms:
        out.append(Obligation(KIND_AXIOM, "AxiomTranslation:%s" % label,
                              translate_formula(axiom, tau)))
    for schema in source_theory.schemas:
        bound = bounds.get(schema.kind)
        if bound is None:
            raise TranslationError("no %r bound for schema %s"
                                   % (schema.kind, schema.name))
        for param in schema.parameter_space(bound):
            if schema.params == 1:
                ptext = str(param)
            else:
                ptext = "%s,%s" % param
            out.append(Obligation(
                KIND_SCHEMA, "SchemaInstanceTranslation:%s:%s"
                % (schema.name, ptext),
                translate_formula(schema.instantiate(param), tau)))
    if not tau.equality_is_default:
        for label, sentence in _equality_obligations(tau):
            out.append(Obligation(KIND_EQUALITY, "EqualityAxiom:%s" % label,
                                  sentence))
    return out


# composition

def compose(tau1, tau2):
    """Translate tau1's defining formulas through tau2; the composed
    dimension is the product, coordinates flattened row-major (outer
    index varies slowest). Pushing goes through tau2's primitive factors
    one at a time, so any grouping of a chain yields identical defining
    formulas."""
    if tau1.target.name != tau2.source.name:
        raise TranslationError(
            "cannot compose: %r feeds %r" % (tau1.target.name,
                                             tau2.source.name))
    m2 = tau2.dimension

    def push(defn):
        body = defn.body
        names = list(defn.variables)
        for f in tau2.factors:
            body = translate_formula(body, f)
            names = [c for n in names for c in copies(n, f.dimension)]
        canon = ["d%d" % (i + 1) for i in range(len(names))]
        return DefiningFormula(canon,
                               L.rename_free(body, dict(zip(names, canon))))

    if tau1.equality_is_default and tau2.equality_is_default:
        equality = None
    elif tau1.equality_is_default:
        m = tau1.dimension * m2
        xs = ["x%d" % i for i in range(1, m + 1)]
        ys = ["y%d" % i for i in range(1, m + 1)]
        parts = []
        for i in range(tau1.dimension):
            seg = xs[i * m2:(i + 1) * m2] + ys[i * m2:(i + 1) * m2]
            parts.append(tau2.equality.apply_names(seg))
        equality = DefiningFormula(xs + ys, big_and(parts))
    else:
        equality = push(tau1.equality)
    out = RelativeTranslation(
        tau1.source, tau2.target, tau1.dimension * m2,
        push(tau1.domain),
        relations={k: push(d) for k, d in tau1.relations.items()},
        functions={k: push(d) for k, d in tau1.functions.items()},
        constants={k: push(d) for k, d in tau1.constants.items()},
        equality=equality)
    out.factors = list(tau1.factors) + list(tau2.factors)
    return out


# images of concrete elements under the symbol graphs

def _solve_graph(structure, body, inputs, output_names):
    """Solve a defining formula whose equations pin the outputs, given
    concrete input values."""
    from .models import eval_term
    conjuncts = []

    def flatten(f):
        if isinstance(f, And):
            flatten(f.left)
            flatten(f.right)
        else:
            conjuncts.append(f)

    flatten(body)
    known = dict(inputs)
    wanted = set(output_names)
    progress = True
    while progress and not wanted <= set(known):
        progress = False
        for c in conjuncts:
            if not isinstance(c, Eq):
                continue
            for lhs, rhs in ((c.left, c.right), (c.right, c.left)):
                if (isinstance(lhs, Variable) and lhs.name in wanted
                        and lhs.name not in known
                        and all(n in known
                                for n in L.free_variables(rhs))):
                    known[lhs.name] = eval_term(structure, rhs, known)
                    progress = True
    missing = wanted - set(known)
    if missing:
        raise TranslationError(
            "graph equations do not determine %r" % sorted(missing))
    return tuple(known[n] for n in output_names)


def _structure_for(signature):
    from . import models
    by_name = {"arith": models.NATURALS, "arith_core": models.NATURALS,
               "bits": models.BITSTRINGS, "bits_core": models.BITSTRINGS,
               "bits_suff": models.BITSTRINGS,
               "bits_suff_sub": models.BITSTRINGS,
               "bits_eps": models.BITSTRINGS_EPS}
    if signature.name not in by_name:
        raise TranslationError("no standard structure for signature %r"
                               % signature.name)
    return by_name[signature.name]


def symbol_image(tau, element, structure=None):
    """The target tuple denoting a concrete source element, computed by
    chasing the constant and function graphs."""
    if structure is None:
        structure = _structure_for(tau.target)
    m = tau.dimension

    def const(name):
        defn = tau.constants[name]
        return _solve_graph(structure, defn.body, {}, defn.variables)

    def fun(name, arg_tuples):
        defn = tau.functions[name]
        flat_args = []
        for tup in arg_tuples:
            flat_args.extend(tup)
        inputs = dict(zip(defn.variables[:len(flat_args)], flat_args))
        return _solve_graph(structure, defn.body, inputs,
                            defn.variables[len(flat_args):])

    if isinstance(element, str):
        if element == "":
            return const("eps")
        out = None
        for ch in element:
            letter = const("zero" if ch == "0" else "one")
            out = letter if out is None else fun("o", [out, letter])
        return out
    if isinstance(element, int) and element >= 0:
        out = const("zero")
        for _ in range(element):
            out = fun("S", [out])
        return out
    raise TranslationError("cannot build an image for %r" % (element,))
