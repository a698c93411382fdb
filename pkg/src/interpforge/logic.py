"""Single-sorted first-order logic with equality: AST, s-expressions,
substitution."""

import re


class LogicError(Exception):
    def __init__(self, message):
        super().__init__(message)
        self.message = message


RESERVED = {"=", "not", "and", "or", "imp", "iff", "all", "ex"}


class Signature:
    def __init__(self, name, constants=(), functions=None, relations=None):
        self.name = name
        self.constants = frozenset(constants)
        self.functions = dict(functions or {})
        self.relations = dict(relations or {})
        symbols = list(self.constants) + list(self.functions) + list(self.relations)
        if len(symbols) != len(set(symbols)):
            raise LogicError("signature %s has colliding symbols" % name)
        for s in symbols:
            if s in RESERVED:
                raise LogicError("symbol %r is reserved" % s)
        for s, k in list(self.functions.items()) + list(self.relations.items()):
            if not (isinstance(k, int) and k >= 1):
                raise LogicError("bad arity for %r" % s)

    def __repr__(self):
        return "Signature(%r)" % self.name


# terms

class Term:
    pass


class Variable(Term):
    __slots__ = ("name", "_hash")

    def __init__(self, name):
        if not name:
            raise LogicError("empty variable name")
        self.name = name
        self._hash = hash(("var", name))

    def __eq__(self, other):
        return isinstance(other, Variable) and self.name == other.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Variable(%r)" % self.name


class Constant(Term):
    __slots__ = ("name", "_hash")

    def __init__(self, name):
        self.name = name
        self._hash = hash(("const", name))

    def __eq__(self, other):
        return isinstance(other, Constant) and self.name == other.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Constant(%r)" % self.name


class Apply(Term):
    __slots__ = ("fun", "args", "_hash")

    def __init__(self, fun, args):
        self.fun = fun
        self.args = tuple(args)
        self._hash = hash(("apply", fun, self.args))

    def __eq__(self, other):
        return (isinstance(other, Apply) and self.fun == other.fun
                and self.args == other.args)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Apply(%r, %r)" % (self.fun, list(self.args))


# formulas

class Formula:
    pass


class Eq(Formula):
    __slots__ = ("left", "right", "_hash")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self._hash = hash(("eq", left, right))

    def __eq__(self, other):
        return (isinstance(other, Eq) and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Eq(%r, %r)" % (self.left, self.right)


class Rel(Formula):
    __slots__ = ("rel", "args", "_hash")

    def __init__(self, rel, args):
        self.rel = rel
        self.args = tuple(args)
        self._hash = hash(("rel", rel, self.args))

    def __eq__(self, other):
        return (isinstance(other, Rel) and self.rel == other.rel
                and self.args == other.args)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Rel(%r, %r)" % (self.rel, list(self.args))


class Not(Formula):
    __slots__ = ("body", "_hash")

    def __init__(self, body):
        self.body = body
        self._hash = hash(("not", body))

    def __eq__(self, other):
        return isinstance(other, Not) and self.body == other.body

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Not(%r)" % self.body


class _Binary(Formula):
    __slots__ = ("left", "right", "_hash")
    tag = None

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self._hash = hash((self.tag, left, right))

    def __eq__(self, other):
        return (type(other) is type(self) and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "%s(%r, %r)" % (type(self).__name__, self.left, self.right)


class And(_Binary):
    tag = "and"


class Or(_Binary):
    tag = "or"


class Imp(_Binary):
    tag = "imp"


class Iff(_Binary):
    tag = "iff"


class _Quant(Formula):
    __slots__ = ("var", "body", "_hash")
    tag = None

    def __init__(self, var, body):
        if not var:
            raise LogicError("empty bound variable name")
        self.var = var
        self.body = body
        self._hash = hash((self.tag, var, body))

    def __eq__(self, other):
        return (type(other) is type(self) and self.var == other.var
                and self.body == other.body)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "%s(%r, %r)" % (type(self).__name__, self.var, self.body)


class Forall(_Quant):
    tag = "all"


class Exists(_Quant):
    tag = "ex"


def big_and(parts):
    """Right-nested conjunction of a nonempty list."""
    parts = list(parts)
    if not parts:
        raise LogicError("empty conjunction")
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def big_or(parts):
    parts = list(parts)
    if not parts:
        raise LogicError("empty disjunction")
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def forall_many(names, body):
    for n in reversed(list(names)):
        body = Forall(n, body)
    return body


def exists_many(names, body):
    for n in reversed(list(names)):
        body = Exists(n, body)
    return body


# printing

def to_sexpr(x):
    if isinstance(x, Variable):
        return x.name
    if isinstance(x, Constant):
        return x.name
    if isinstance(x, Apply):
        return "(%s %s)" % (x.fun, " ".join(to_sexpr(a) for a in x.args))
    if isinstance(x, Eq):
        return "(= %s %s)" % (to_sexpr(x.left), to_sexpr(x.right))
    if isinstance(x, Rel):
        return "(%s %s)" % (x.rel, " ".join(to_sexpr(a) for a in x.args))
    if isinstance(x, Not):
        return "(not %s)" % to_sexpr(x.body)
    if isinstance(x, _Binary):
        return "(%s %s %s)" % (x.tag, to_sexpr(x.left), to_sexpr(x.right))
    if isinstance(x, _Quant):
        return "(%s %s %s)" % (x.tag, x.var, to_sexpr(x.body))
    raise LogicError("cannot print %r" % (x,))


# parsing

_TOKEN = re.compile(r"\s*(\(|\)|=|[a-zA-Z][a-zA-Z0-9_'#]*)")
_VAR = re.compile(r"[a-z][a-zA-Z0-9_'#]*$")


def _tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            rest = text[i:].lstrip()
            if not rest:
                break
            raise LogicError("syntax error at offset %d: %r" % (i, rest[:20]))
        toks.append((m.group(1), m.start(1)))
        i = m.end()
    return toks


class _Parser:
    def __init__(self, text, sig):
        self.toks = _tokenize(text)
        self.pos = 0
        self.sig = sig

    def peek(self):
        if self.pos >= len(self.toks):
            return None
        return self.toks[self.pos][0]

    def next(self):
        if self.pos >= len(self.toks):
            raise LogicError("unexpected end of input")
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, tok):
        t, at = self.next()
        if t != tok:
            raise LogicError("expected %r at offset %d, found %r" % (tok, at, t))

    def atom_term(self, tok, at):
        if tok in self.sig.constants:
            return Constant(tok)
        if tok in self.sig.functions or tok in self.sig.relations:
            raise LogicError("%r needs arguments (offset %d)" % (tok, at))
        if tok in RESERVED or not _VAR.match(tok):
            raise LogicError("bad variable name %r at offset %d" % (tok, at))
        return Variable(tok)

    def term(self):
        tok, at = self.next()
        if tok != "(":
            return self.atom_term(tok, at)
        fun, fat = self.next()
        if fun not in self.sig.functions:
            raise LogicError("undeclared function %r at offset %d" % (fun, fat))
        args = self.term_list()
        if len(args) != self.sig.functions[fun]:
            raise LogicError("%r expects %d arguments, got %d"
                             % (fun, self.sig.functions[fun], len(args)))
        return Apply(fun, args)

    def term_list(self):
        args = []
        while self.peek() != ")":
            if self.peek() is None:
                raise LogicError("unexpected end of input")
            args.append(self.term())
        self.next()
        return args

    def formula(self):
        tok, at = self.next()
        if tok != "(":
            raise LogicError("expected formula at offset %d, found %r" % (at, tok))
        head, hat = self.next()
        if head == "=":
            left = self.term()
            right = self.term()
            self.expect(")")
            return Eq(left, right)
        if head == "not":
            body = self.formula()
            self.expect(")")
            return Not(body)
        if head in ("and", "or", "imp", "iff"):
            cls = {"and": And, "or": Or, "imp": Imp, "iff": Iff}[head]
            left = self.formula()
            right = self.formula()
            self.expect(")")
            return cls(left, right)
        if head in ("all", "ex"):
            var, vat = self.next()
            if var in RESERVED or var == "(" or var == ")" or not _VAR.match(var):
                raise LogicError("bad bound variable %r at offset %d" % (var, vat))
            if (var in self.sig.constants or var in self.sig.functions
                    or var in self.sig.relations):
                raise LogicError("bound variable %r shadows a symbol" % var)
            body = self.formula()
            self.expect(")")
            return (Forall if head == "all" else Exists)(var, body)
        if head in self.sig.relations:
            args = self.term_list()
            if len(args) != self.sig.relations[head]:
                raise LogicError("%r expects %d arguments, got %d"
                                 % (head, self.sig.relations[head], len(args)))
            return Rel(head, args)
        raise LogicError("unknown formula head %r at offset %d" % (head, hat))


def parse_term(text, sig):
    p = _Parser(text, sig)
    t = p.term()
    if p.pos != len(p.toks):
        raise LogicError("trailing tokens after term")
    return t


def parse_formula(text, sig):
    p = _Parser(text, sig)
    f = p.formula()
    if p.pos != len(p.toks):
        raise LogicError("trailing tokens after formula")
    return f


def parse(text, sig):
    """Parse a term or a formula, deciding by the head token."""
    toks = _tokenize(text)
    if not toks:
        raise LogicError("empty input")
    if toks[0][0] != "(":
        return parse_term(text, sig)
    if len(toks) < 2:
        raise LogicError("unexpected end of input")
    head = toks[1][0]
    if head in RESERVED or head in sig.relations:
        return parse_formula(text, sig)
    return parse_term(text, sig)


# free variables, substitution

def free_variables(x):
    """Free variable names in first-occurrence order."""
    out = []
    seen = set()

    def term(t, bound):
        if isinstance(t, Variable):
            if t.name not in bound and t.name not in seen:
                seen.add(t.name)
                out.append(t.name)
        elif isinstance(t, Apply):
            for a in t.args:
                term(a, bound)

    def formula(f, bound):
        if isinstance(f, Eq):
            term(f.left, bound)
            term(f.right, bound)
        elif isinstance(f, Rel):
            for a in f.args:
                term(a, bound)
        elif isinstance(f, Not):
            formula(f.body, bound)
        elif isinstance(f, _Binary):
            formula(f.left, bound)
            formula(f.right, bound)
        elif isinstance(f, _Quant):
            formula(f.body, bound | {f.var})
        else:
            raise LogicError("bad formula %r" % (f,))

    if isinstance(x, Term):
        term(x, frozenset())
    else:
        formula(x, frozenset())
    return out


def term_variables(t):
    return free_variables(t)


def fresh_variables(avoid, count):
    """Deterministic fresh names v1, v2, ... skipping avoid."""
    if count < 0:
        raise LogicError("negative count")
    avoid = set(avoid)
    out = []
    k = 1
    while len(out) < count:
        name = "v%d" % k
        if name not in avoid:
            out.append(name)
            avoid.add(name)
        k += 1
    return out


def substitute_term(t, mapping):
    if isinstance(t, Variable):
        return mapping.get(t.name, t)
    if isinstance(t, Constant):
        return t
    if isinstance(t, Apply):
        return Apply(t.fun, [substitute_term(a, mapping) for a in t.args])
    raise LogicError("bad term %r" % (t,))


def substitute(phi, mapping):
    """Simultaneous capture-avoiding substitution of terms for free
    variables."""
    mapping = {k: v for k, v in mapping.items()}

    def go(f, mp):
        if isinstance(f, Eq):
            return Eq(substitute_term(f.left, mp), substitute_term(f.right, mp))
        if isinstance(f, Rel):
            return Rel(f.rel, [substitute_term(a, mp) for a in f.args])
        if isinstance(f, Not):
            return Not(go(f.body, mp))
        if isinstance(f, _Binary):
            return type(f)(go(f.left, mp), go(f.right, mp))
        if isinstance(f, _Quant):
            mp2 = {k: v for k, v in mp.items() if k != f.var}
            if not mp2:
                return type(f)(f.var, f.body)
            image_vars = set()
            for v in mp2.values():
                image_vars.update(free_variables(v))
            if f.var in image_vars:
                avoid = image_vars | set(free_variables(f.body)) | set(mp2)
                new = fresh_variables(avoid, 1)[0]
                mp2[f.var] = Variable(new)
                return type(f)(new, go(f.body, mp2))
            return type(f)(f.var, go(f.body, mp2))
        raise LogicError("bad formula %r" % (f,))

    return go(phi, mapping)


def rename_free(phi, name_map):
    """Rename free variables; values are names, not terms."""
    return substitute(phi, {k: Variable(v) for k, v in name_map.items()})


def alpha_equal(a, b):
    def terms(s, t, env_a, env_b):
        if isinstance(s, Variable) and isinstance(t, Variable):
            da = env_a.get(s.name, ("free", s.name))
            db = env_b.get(t.name, ("free", t.name))
            return da == db
        if isinstance(s, Constant) and isinstance(t, Constant):
            return s.name == t.name
        if isinstance(s, Apply) and isinstance(t, Apply):
            return (s.fun == t.fun and len(s.args) == len(t.args)
                    and all(terms(x, y, env_a, env_b)
                            for x, y in zip(s.args, t.args)))
        return False

    def go(f, g, env_a, env_b, depth):
        if type(f) is not type(g):
            return False
        if isinstance(f, Eq):
            return (terms(f.left, g.left, env_a, env_b)
                    and terms(f.right, g.right, env_a, env_b))
        if isinstance(f, Rel):
            return (f.rel == g.rel and len(f.args) == len(g.args)
                    and all(terms(x, y, env_a, env_b)
                            for x, y in zip(f.args, g.args)))
        if isinstance(f, Not):
            return go(f.body, g.body, env_a, env_b, depth)
        if isinstance(f, _Binary):
            return (go(f.left, g.left, env_a, env_b, depth)
                    and go(f.right, g.right, env_a, env_b, depth))
        if isinstance(f, _Quant):
            ea = dict(env_a)
            eb = dict(env_b)
            ea[f.var] = ("bound", depth)
            eb[g.var] = ("bound", depth)
            return go(f.body, g.body, ea, eb, depth + 1)
        return False

    if isinstance(a, Term) or isinstance(b, Term):
        return terms(a, b, {}, {})
    return go(a, b, {}, {}, 0)
