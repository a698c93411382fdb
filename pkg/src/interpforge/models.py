"""Exact evaluation over infinite standard structures with quantifiers
restricted to finite ranges."""

from . import logic as L
from . import sl2
from .logic import (And, Apply, Constant, Eq, Exists, Forall, Iff, Imp, Not,
                    Or, Rel, Variable)


class EvalError(Exception):
    pass


class BudgetExceeded(Exception):
    pass


def _shortlex_strings(max_len, with_empty=False):
    out = [""] if with_empty else []
    for n in range(1, max_len + 1):
        for k in range(2 ** n):
            out.append(format(k, "0%db" % n))
    return out


class AmbientStructure:
    """Carrier with exact operations; `inverses` maps a function name to a
    partial inverse (argument position, result, other argument values) ->
    the unique carrier value at that position, or None."""

    def __init__(self, ident, constants, functions, relations,
                 inverses=None):
        self.id = ident
        self.constants = constants
        self.functions = functions
        self.relations = relations
        self.inverses = inverses or {}


def _is_suffix(a, b):
    return len(a) <= len(b) and b.endswith(a)


def _is_substring(a, b):
    return a in b


def _is_prefix(a, b):
    return len(a) <= len(b) and b.startswith(a)


def _concat_inverse_nonempty(pos, result, other):
    if len(result) <= len(other):
        return None
    if pos == 0:
        return result[:len(result) - len(other)] \
            if result.endswith(other) else None
    return result[len(other):] if result.startswith(other) else None


def _concat_inverse_eps(pos, result, other):
    if len(result) < len(other):
        return None
    if pos == 0:
        return result[:len(result) - len(other)] \
            if result.endswith(other) else None
    return result[len(other):] if result.startswith(other) else None


def _succ_inverse(pos, result, other):
    return result - 1 if result >= 1 else None


def _plus_inverse(pos, result, other):
    return result - other if result >= other else None


def _times_inverse(pos, result, other):
    if other == 0 or result % other != 0:
        return None
    return result // other


BITSTRINGS = AmbientStructure(
    "BitStrings",
    {"zero": "0", "one": "1"},
    {"o": lambda a, b: a + b},
    {"pref": _is_prefix, "suff": _is_suffix, "sub": _is_substring},
    inverses={"o": _concat_inverse_nonempty})

BITSTRINGS_EPS = AmbientStructure(
    "BitStringsEps",
    {"zero": "0", "one": "1", "eps": ""},
    {"o": lambda a, b: a + b},
    {"pref": _is_prefix, "suff": _is_suffix, "sub": _is_substring},
    inverses={"o": _concat_inverse_eps})

NATURALS = AmbientStructure(
    "Naturals",
    {"zero": 0},
    {"S": lambda n: n + 1, "plus": lambda a, b: a + b,
     "times": lambda a, b: a * b},
    {"leq": lambda a, b: a <= b},
    inverses={"S": _succ_inverse, "plus": _plus_inverse,
              "times": _times_inverse})

STRUCTURES = {s.id: s for s in (BITSTRINGS, BITSTRINGS_EPS, NATURALS)}


def get_structure(ident):
    if ident not in STRUCTURES:
        raise EvalError("unknown structure %r" % ident)
    return STRUCTURES[ident]


class QuantifierRange:
    """A finite, duplicate-free sequence of elements or of fixed-width
    tuples."""

    def __init__(self, elements, width=1, overrides=None):
        self.elements = list(elements)
        self.width = width
        self.overrides = dict(overrides or {})
        if not self.elements:
            raise EvalError("empty range")
        if len(set(self.elements)) != len(self.elements):
            raise EvalError("duplicate range elements")
        if width > 1:
            self.element_set = set(self.elements)
        else:
            self.element_set = set(self.elements)

    def __len__(self):
        return len(self.elements)


def strings_upto(max_len):
    if max_len < 1:
        raise EvalError("length bound must be >= 1")
    return QuantifierRange(_shortlex_strings(max_len))


def strings_eps_upto(max_len):
    if max_len < 1:
        raise EvalError("length bound must be >= 1")
    return QuantifierRange(_shortlex_strings(max_len, with_empty=True))


def nats_upto(bound):
    if bound < 0:
        raise EvalError("bound must be >= 0")
    return QuantifierRange(list(range(bound + 1)))


def tuple_image(translation, base):
    """The range of coordinate tuples denoting the base elements under a
    translation whose constant/function graphs are equation-solvable."""
    from .translation import symbol_image
    tuples = []
    for el in base.elements:
        tup = symbol_image(translation, el)
        if tup not in tuples:
            tuples.append(tup)
    if translation.dimension == 1:
        return QuantifierRange([t[0] for t in tuples])
    return QuantifierRange(tuples, width=translation.dimension)


def make_range(spec, get_interpretation=None):
    """Parse a textual range spec: strings_upto:L, strings_eps_upto:L,
    nats_upto:B, tuple_image:<interp>:<base spec>."""
    parts = spec.split(":")
    if parts[0] == "strings_upto" and len(parts) == 2:
        return strings_upto(int(parts[1]))
    if parts[0] == "strings_eps_upto" and len(parts) == 2:
        return strings_eps_upto(int(parts[1]))
    if parts[0] == "nats_upto" and len(parts) == 2:
        return nats_upto(int(parts[1]))
    if parts[0] == "tuple_image" and len(parts) >= 3:
        if get_interpretation is None:
            raise EvalError("tuple_image spec needs an interpretation lookup")
        entry = get_interpretation(parts[1])
        base = make_range(":".join(parts[2:]), get_interpretation)
        return tuple_image(entry.translation, base)
    raise EvalError("bad range spec %r" % spec)


def eval_term(structure, t, env):
    c = t.__class__
    if c is Variable:
        try:
            return env[t.name]
        except KeyError:
            raise EvalError("unassigned variable %r" % t.name)
    if c is Apply:
        f = structure.functions[t.fun]
        args = t.args
        if len(args) == 2:
            return f(eval_term(structure, args[0], env),
                     eval_term(structure, args[1], env))
        if len(args) == 1:
            return f(eval_term(structure, args[0], env))
        return f(*[eval_term(structure, a, env) for a in args])
    if c is Constant:
        return structure.constants[t.name]
    raise EvalError("bad term %r" % (t,))


def _term_evaluable(t, env):
    return all(name in env for name in L.free_variables(t))


class _Evaluator:
    def __init__(self, structure, range_, budget=None, exact_witness=False):
        self.structure = structure
        self.range = range_
        self.budget = budget
        # accept equation-forced existential witnesses outside the range
        # (term values are exact; only enumerated quantifiers truncate)
        self.exact_witness = exact_witness
        self.nodes = 0
        self._limit = budget if budget is not None else float("inf")
        self._free_cache = {}
        self._disjunct_cache = {}
        # id-keyed caches need the nodes kept alive, or a freed node's id
        # could be reused and hit a stale entry
        self._pinned = []
        self._canon_cache = {}
        self._canon_intern = {}
        # quantified-node memo: shared truth tables keyed by alpha shape
        self._shape_tables = {}
        # each node is compiled once, by id, into a closure on the
        # environment
        self._compiled = {}

    def _free(self, phi):
        key = id(phi)
        if key not in self._free_cache:
            self._pinned.append(phi)
            self._free_cache[key] = tuple(L.free_variables(phi))
        return self._free_cache[key]

    def _range_for(self, var):
        return self.range.overrides.get(var, self.range)

    def eval(self, phi, env):
        fn = self._compiled.get(id(phi))
        if fn is None:
            fn = self._compile(phi)
        return fn(env)

    def _compile(self, phi):
        self._pinned.append(phi)
        fn = self._build(phi)
        self._compiled[id(phi)] = fn
        return fn

    def _compile_term(self, t):
        c = t.__class__
        if c is Variable:
            name = t.name

            def var(env):
                try:
                    return env[name]
                except KeyError:
                    raise EvalError("unassigned variable %r" % name)

            return var
        if c is Apply:
            f = self.structure.functions[t.fun]
            args = [self._compile_term(a) for a in t.args]
            if len(args) == 2:
                a0, a1 = args
                return lambda env: f(a0(env), a1(env))
            if len(args) == 1:
                a0, = args
                return lambda env: f(a0(env))
            return lambda env: f(*[a(env) for a in args])
        if c is Constant:
            val = self.structure.constants[t.name]
            return lambda env: val
        raise EvalError("bad term %r" % (t,))

    def _build(self, phi):
        ev = self
        limit = self._limit
        c = phi.__class__
        if c is And:
            lf = self._compile(phi.left)
            rf = self._compile(phi.right)

            def conj(env):
                n = ev.nodes + 1
                ev.nodes = n
                if n > limit:
                    raise BudgetExceeded()
                return lf(env) and rf(env)

            return conj
        if c is Eq:
            lt = self._compile_term(phi.left)
            rt = self._compile_term(phi.right)

            def eq(env):
                n = ev.nodes + 1
                ev.nodes = n
                if n > limit:
                    raise BudgetExceeded()
                return lt(env) == rt(env)

            return eq
        if c is Imp:
            lf = self._compile(phi.left)
            rf = self._compile(phi.right)

            def imp(env):
                n = ev.nodes + 1
                ev.nodes = n
                if n > limit:
                    raise BudgetExceeded()
                return (not lf(env)) or rf(env)

            return imp
        if c is Forall or c is Exists:
            return self._build_quant(phi)
        if c is Or:
            lf = self._compile(phi.left)
            rf = self._compile(phi.right)

            def disj(env):
                n = ev.nodes + 1
                ev.nodes = n
                if n > limit:
                    raise BudgetExceeded()
                return lf(env) or rf(env)

            return disj
        if c is Not:
            bf = self._compile(phi.body)

            def neg(env):
                n = ev.nodes + 1
                ev.nodes = n
                if n > limit:
                    raise BudgetExceeded()
                return not bf(env)

            return neg
        if c is Iff:
            lf = self._compile(phi.left)
            rf = self._compile(phi.right)

            def iff(env):
                n = ev.nodes + 1
                ev.nodes = n
                if n > limit:
                    raise BudgetExceeded()
                return lf(env) == rf(env)

            return iff
        if c is Rel:
            r = self.structure.relations[phi.rel]
            args = [self._compile_term(a) for a in phi.args]
            if len(args) == 2:
                a0, a1 = args

                def rel2(env):
                    n = ev.nodes + 1
                    ev.nodes = n
                    if n > limit:
                        raise BudgetExceeded()
                    return r(a0(env), a1(env))

                return rel2

            def rel(env):
                n = ev.nodes + 1
                ev.nodes = n
                if n > limit:
                    raise BudgetExceeded()
                return r(*[a(env) for a in args])

            return rel
        raise EvalError("bad formula %r" % (phi,))

    def _canon(self, phi):
        """Alpha-canonical shape string plus the free variables in first
        occurrence order; alpha-copies of a subformula share memo
        entries."""
        key = id(phi)
        hit = self._canon_cache.get(key)
        if hit is not None:
            return hit
        self._pinned.append(phi)
        free = []
        slot = {}

        def term(t, bound):
            if isinstance(t, Variable):
                name = bound.get(t.name)
                if name is not None:
                    return name
                if t.name not in slot:
                    slot[t.name] = "f%d" % len(free)
                    free.append(t.name)
                return slot[t.name]
            if isinstance(t, Constant):
                return t.name
            return "(%s %s)" % (t.fun,
                                " ".join(term(a, bound) for a in t.args))

        def walk(f, bound, depth):
            if isinstance(f, Eq):
                return "(= %s %s)" % (term(f.left, bound),
                                      term(f.right, bound))
            if isinstance(f, Rel):
                return "(%s %s)" % (f.rel,
                                    " ".join(term(a, bound)
                                             for a in f.args))
            if isinstance(f, Not):
                return "(not %s)" % walk(f.body, bound, depth)
            if isinstance(f, (And, Or, Imp, Iff)):
                tag = {And: "and", Or: "or", Imp: "imp",
                       Iff: "iff"}[type(f)]
                return "(%s %s %s)" % (tag, walk(f.left, bound, depth),
                                       walk(f.right, bound, depth))
            tag = "all" if isinstance(f, Forall) else "ex"
            bound2 = dict(bound)
            bound2[f.var] = "b%d" % depth
            return "(%s %s)" % (tag, walk(f.body, bound2, depth + 1))

        shape = walk(phi, {}, 0)
        shape = self._canon_intern.setdefault(shape, shape)
        hit = (shape, tuple(free))
        self._canon_cache[key] = hit
        return hit

    def _quant_block(self, phi):
        """Collect the maximal run of same-kind quantifiers."""
        kind = type(phi)
        names = []
        body = phi
        while type(body) is kind:
            names.append(body.var)
            body = body.body
        return kind, names, body

    def _build_quant(self, phi):
        ev = self
        limit = self._limit
        kind, names, body = self._quant_block(phi)
        rng = self._range_for(names[0])
        w = rng.width
        if w > 1:
            usable = len(names) - (len(names) % w)
            if usable == 0:
                raise EvalError(
                    "quantifier block of %d variables under a width-%d "
                    "tuple range" % (len(names), w))
            groups = [names[i:i + w] for i in range(0, usable, w)]
            rest = names[usable:]
        else:
            groups = [[n] for n in names]
            rest = []
        if rest:
            inner = body
            for n in reversed(rest):
                inner = kind(n, inner)
            body = inner
        want = kind is Exists
        enum_main = self._make_enum(groups, body, want)
        if kind is Exists:
            djs = self._disjuncts(body) if isinstance(body, Or) else None
            if djs is not None:
                enum_djs = [self._make_enum(groups, d, True) for d in djs]

            def raw(env):
                forced = ev._try_forced(groups, body, env, rng)
                if forced is not None:
                    return forced
                if djs is not None:
                    # distribute the block over the disjunction so that
                    # equation-pinned branches are still solved, not
                    # scanned
                    for d, enum_d in zip(djs, enum_djs):
                        forced = ev._try_forced(groups, d, env, rng)
                        if forced is None:
                            forced = enum_d(env)
                        if forced:
                            return True
                    return False
                return enum_main(env)
        else:
            raw = enum_main
        # the truth of a quantified node depends only on its free
        # variables; alpha-copies share a table keyed by their values
        free = self._free(phi)
        if len(free) > 16:
            memo_names = None
        elif self.range.overrides:
            # per-variable ranges make alpha-copies inequivalent, so the
            # node gets a private table
            memo_names, table = free, {}
        else:
            shape, memo_names = self._canon(phi)
            table = self._shape_tables.setdefault(shape, {})
        if memo_names is None:
            def plain(env):
                n = ev.nodes + 1
                ev.nodes = n
                if n > limit:
                    raise BudgetExceeded()
                return raw(env)

            return plain

        def memoized(env):
            n = ev.nodes + 1
            ev.nodes = n
            if n > limit:
                raise BudgetExceeded()
            try:
                key = tuple([env[nm] for nm in memo_names])
            except KeyError as exc:
                raise EvalError("unassigned variable %r" % exc.args[0])
            hit = table.get(key)
            if hit is None:
                hit = raw(env)
                table[key] = hit
            return hit

        return memoized

    def _make_enum(self, groups, body, want):
        """Scan closure for a quantifier block: binds the groups in place
        (restoring shadowed values) and calls the compiled body."""
        bodyfn = self._compile(body)
        group_ranges = [self._range_for(g[0]) for g in groups]
        ngroups = len(groups)
        missing = object()

        def rec(i, env):
            if i == ngroups:
                return bodyfn(env)
            group = groups[i]
            rng_i = group_ranges[i]
            if rng_i.width > 1:
                saved = [env.get(n, missing) for n in group]
                out = not want
                for el in rng_i.elements:
                    for n, val in zip(group, el):
                        env[n] = val
                    if rec(i + 1, env) == want:
                        out = want
                        break
                for n, old in zip(group, saved):
                    if old is missing:
                        del env[n]
                    else:
                        env[n] = old
                return out
            name = group[0]
            saved = env.get(name, missing)
            out = not want
            for el in rng_i.elements:
                env[name] = el
                if rec(i + 1, env) == want:
                    out = want
                    break
            if saved is missing:
                del env[name]
            else:
                env[name] = saved
            return out

        return lambda env: rec(0, env)

    def _disjuncts(self, phi):
        key = id(phi)
        if key not in self._disjunct_cache:
            self._pinned.append(phi)
            out = []
            stack = [phi]
            while stack:
                f = stack.pop()
                if isinstance(f, Or):
                    stack.append(f.right)
                    stack.append(f.left)
                else:
                    out.append(f)
            self._disjunct_cache[key] = out
        return self._disjunct_cache[key]

    # existential blocks produced by the translation engine pin their bound
    # tuples with equations, possibly inside nested inner blocks; solve
    # them instead of scanning the range
    def _try_forced(self, groups, body, env, rng):
        names = [n for g in groups for n in g]
        conjuncts = []
        solvable = set(names)
        taken = set(env) | solvable

        def gather(f):
            if isinstance(f, And):
                gather(f.left)
                gather(f.right)
            elif isinstance(f, Exists):
                inner = f
                bound = []
                while isinstance(inner, Exists):
                    bound.append(inner.var)
                    inner = inner.body
                if any(n in taken for n in bound):
                    conjuncts.append(f)
                else:
                    solvable.update(bound)
                    taken.update(bound)
                    gather(inner)
            else:
                conjuncts.append(f)

        gather(body)
        values = {}
        # shadowed outer bindings must not leak into the solver
        known = {k: v for k, v in env.items() if k not in solvable}

        def assign(name, value):
            values[name] = value
            known[name] = value

        def invert(term, value):
            # peel invertible function applications until the single
            # unknown solvable variable is reached
            while True:
                if isinstance(term, Variable):
                    if term.name in solvable and term.name not in values:
                        assign(term.name, value)
                        return True
                    return False
                if not isinstance(term, Apply):
                    return False
                inverse = self.structure.inverses.get(term.fun)
                if inverse is None:
                    return False
                unknown = [i for i, a in enumerate(term.args)
                           if not _term_evaluable(a, known)]
                if len(unknown) != 1:
                    return False
                pos = unknown[0]
                other = None
                if len(term.args) == 2:
                    other = eval_term(self.structure, term.args[1 - pos],
                                      known)
                value = inverse(pos, value, other)
                if value is None:
                    return False
                term = term.args[pos]

        progress = True
        while progress:
            progress = False
            for c in conjuncts:
                if not isinstance(c, Eq):
                    continue
                for lhs, rhs in ((c.left, c.right), (c.right, c.left)):
                    if (isinstance(lhs, Variable) and lhs.name in solvable
                            and lhs.name not in values
                            and _term_evaluable(rhs, known)):
                        assign(lhs.name, eval_term(self.structure, rhs,
                                                   known))
                        progress = True
                    elif (not _term_evaluable(lhs, known)
                          and _term_evaluable(rhs, known)
                          and invert(lhs, eval_term(self.structure, rhs,
                                                    known))):
                        progress = True
        if any(n not in values for n in names):
            return None
        if not self.exact_witness:
            # the forced witness must lie in the quantifier range
            for group in groups:
                rng_i = self._range_for(group[0])
                if rng_i.width > 1:
                    el = tuple(values[n] for n in group)
                else:
                    el = values[group[0]]
                if el not in rng_i.element_set:
                    return False
        env2 = dict(env)
        for n in names:
            env2[n] = values[n]
        return self.eval(body, env2)


def evaluate(structure, range_, phi, assignment=None, budget=None,
             exact_witness=False):
    ev = _Evaluator(structure, range_, budget, exact_witness)
    return ev.eval(phi, dict(assignment or {}))


def evaluate_naive(structure, range_, phi, assignment=None):
    """Reference semantics: no short-circuit, no memoization, no
    grouping."""
    env = dict(assignment or {})

    def go(f, env):
        if isinstance(f, Eq):
            return (eval_term(structure, f.left, env)
                    == eval_term(structure, f.right, env))
        if isinstance(f, Rel):
            r = structure.relations[f.rel]
            return r(*[eval_term(structure, a, env) for a in f.args])
        if isinstance(f, Not):
            return not go(f.body, env)
        if isinstance(f, And):
            a = go(f.left, env)
            b = go(f.right, env)
            return a and b
        if isinstance(f, Or):
            a = go(f.left, env)
            b = go(f.right, env)
            return a or b
        if isinstance(f, Imp):
            a = go(f.left, env)
            b = go(f.right, env)
            return (not a) or b
        if isinstance(f, Iff):
            return go(f.left, env) == go(f.right, env)
        if isinstance(f, (Forall, Exists)):
            rng = range_.overrides.get(f.var, range_)
            if rng.width > 1:
                raise EvalError("naive evaluator is scalar-only")
            results = []
            for el in rng.elements:
                env2 = dict(env)
                env2[f.var] = el
                results.append(go(f.body, env2))
            return any(results) if isinstance(f, Exists) else all(results)
        raise EvalError("bad formula %r" % (f,))

    return go(phi, env)


class Verdict:
    def __init__(self, status, counterexample=None):
        self.status = status          # "holds", "fails", "budget-exceeded"
        self.counterexample = counterexample

    @property
    def holds(self):
        return self.status == "holds"

    def __repr__(self):
        if self.counterexample is not None:
            return "Verdict(%r, %r)" % (self.status, self.counterexample)
        return "Verdict(%r)" % self.status


class Checker:
    """Checks a batch of sentences over one structure and range; the
    truth memo for shared subformulas persists across sentences. The node
    budget applies per sentence."""

    def __init__(self, structure, range_, budget=None, exact_witness=False):
        self.ev = _Evaluator(structure, range_, budget, exact_witness)

    def check(self, phi):
        if L.free_variables(phi):
            raise EvalError("sentence expected, got free variables %r"
                            % L.free_variables(phi))
        self.ev.nodes = 0
        try:
            if self.ev.eval(phi, {}):
                return Verdict("holds")
            return Verdict("fails", _counterexample(self.ev, phi))
        except BudgetExceeded:
            return Verdict("budget-exceeded")


def check_sentence(structure, range_, phi, budget=None, exact_witness=False):
    return Checker(structure, range_, budget, exact_witness).check(phi)


def _counterexample(ev, phi):
    """Assignment to the outermost falsifying universal prefix."""
    witness = {}
    env = {}
    node = phi
    try:
        while isinstance(node, Forall):
            kind, names, body = ev._quant_block(node)
            rng = ev._range_for(names[0])
            if rng.width > 1 and len(names) >= rng.width:
                group, rest = names[:rng.width], names[rng.width:]
            else:
                group, rest = names[:1], names[1:]
            remaining = L.forall_many(rest, body)
            found = False
            for el in rng.elements:
                env2 = dict(env)
                if len(group) > 1:
                    for n, val in zip(group, el):
                        env2[n] = val
                else:
                    env2[group[0]] = el
                if not ev.eval(remaining, env2):
                    env = env2
                    for n in group:
                        witness[n] = env2[n]
                    found = True
                    break
            if not found:
                return witness
            node = remaining
    except BudgetExceeded:
        pass
    return witness
