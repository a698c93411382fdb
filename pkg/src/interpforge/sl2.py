"""Exact 2x2 nonnegative matrix arithmetic and the bijection with binary
strings."""


class CodecError(Exception):
    pass


class Mat2:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        for e in (a, b, c, d):
            if e < 0:
                raise CodecError("negative entry")
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return "Mat2(%d, %d, %d, %d)" % self.entries()

    def __str__(self):
        return "%d,%d;%d,%d" % self.entries()


IDENTITY = Mat2(1, 0, 0, 1)
GEN0 = Mat2(1, 0, 1, 1)   # the letter 0
GEN1 = Mat2(1, 1, 0, 1)   # the letter 1


def mat_mul(x, y):
    return Mat2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d)


def det(x):
    return x.a * x.d - x.b * x.c


def parse_matrix(text):
    """Literal format "a,b;c,d"."""
    rows = text.strip().split(";")
    if len(rows) != 2:
        raise CodecError("expected two rows in %r" % text)
    nums = []
    for row in rows:
        cells = row.split(",")
        if len(cells) != 2:
            raise CodecError("expected two entries per row in %r" % text)
        for cell in cells:
            cell = cell.strip()
            if not cell.isdigit():
                raise CodecError("bad entry %r" % cell)
            nums.append(int(cell))
    return Mat2(*nums)


def encode(alpha):
    """Left-to-right product of generator matrices; "" maps to the
    identity."""
    m = IDENTITY
    for ch in alpha:
        if ch == "0":
            m = mat_mul(m, GEN0)
        elif ch == "1":
            m = mat_mul(m, GEN1)
        else:
            raise CodecError("bad bit %r" % ch)
    return m


def strip_last(m):
    """Split off the last letter: returns (rest, bit)."""
    if det(m) != 1:
        raise CodecError("determinant is %d, not 1" % det(m))
    if m == IDENTITY:
        raise CodecError("identity has no last letter")
    a, b, c, d = m.entries()
    if a >= b and c >= d:
        return Mat2(a - b, b, c - d, d), "0"
    if a <= b and c <= d:
        return Mat2(a, b - a, c, d - c), "1"
    raise CodecError("no branch applies to %s" % m)


def decode(m):
    if det(m) != 1:
        raise CodecError("determinant is %d, not 1" % det(m))
    bits = []
    while m != IDENTITY:
        m, bit = strip_last(m)
        bits.append(bit)
    return "".join(reversed(bits))


def is_atom(m, bound):
    """No factorization into two non-identity det-1 matrices with entries
    in [0, bound]."""
    if bound < 1:
        raise CodecError("bound must be >= 1")
    if det(m) != 1:
        raise CodecError("determinant is %d, not 1" % det(m))
    for x in enumerate_unimodular(bound):
        if x == IDENTITY:
            continue
        for y in enumerate_unimodular(bound):
            if y == IDENTITY:
                continue
            if mat_mul(x, y) == m:
                return False
    return True


def enumerate_unimodular(bound):
    """All nonnegative matrices with entries <= bound and det 1, in
    lexicographic entry order."""
    if bound < 1:
        raise CodecError("bound must be >= 1")
    out = []
    # a = 0 gives det = -b*c <= 0, so a starts at 1 and d is pinned
    for a in range(1, bound + 1):
        for b in range(bound + 1):
            for c in range(bound + 1):
                num = 1 + b * c
                if num % a == 0 and num // a <= bound:
                    out.append(Mat2(a, b, c, num // a))
    return out


def max_entry(m):
    return max(m.entries())


def mat_prefix(x, y):
    """x is y, or x times some non-identity det-1 matrix with entries (and
    x's entries) bounded by y's largest entry equals y."""
    for m in (x, y):
        if det(m) != 1:
            raise CodecError("determinant is %d, not 1" % det(m))
        if m == IDENTITY:
            raise CodecError("identity not allowed")
    if x == y:
        return True
    bound = max_entry(y)
    if max_entry(x) > bound:
        return False
    # the witness C, if any, is unique: C = x^-1 * y since det(x) = 1
    ca = x.d * y.a - x.b * y.c
    cb = x.d * y.b - x.b * y.d
    cc = x.a * y.c - x.c * y.a
    cd = x.a * y.d - x.c * y.b
    if min(ca, cb, cc, cd) < 0 or max(ca, cb, cc, cd) > bound:
        return False
    c = Mat2(ca, cb, cc, cd)
    return c != IDENTITY and mat_mul(x, c) == y
