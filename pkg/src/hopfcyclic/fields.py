"""
Exact coefficient fields: the rationals, prime fields, and the rational
function field Q(q) with q transcendental.

Elements are plain immutable values.  Rationals are ``gmpy2.mpq``; prime
field residues are :class:`ModP`; rational functions are :class:`RatFun`,
a canonical reduced ratio of integer polynomials in q.  Python ints mix
freely with every field.
"""

from fractions import Fraction
from math import gcd
import re

from gmpy2 import mpq, mpz


class FieldError(ArithmeticError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class ZeroDenominator(DivisionByZero):
    pass


# ---------------------------------------------------------------------------
# dense integer polynomials in q: tuples of ints, constant term first,
# no trailing zeros, () is the zero polynomial

def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def pneg(a):
    return tuple(-x for x in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def pscale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def _content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def _primitive(a):
    g = _content(a)
    if g == 0:
        return ()
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def _prem(a, b):
    """Pseudo-remainder of a by b over the integers."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = list(_trim(r))
    return tuple(r)


def pgcd(a, b):
    """Primitive gcd of two integer polynomials, positive leading coefficient."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    if len(a) < len(b):
        a, b = b, a
    a, b = _primitive(a), _primitive(b)
    while b:
        if len(b) == 1:
            return (1,)
        a, b = b, _primitive(_prem(a, b))
    return a


def pdivexact(a, b):
    """Quotient a / b, which must be exact over the integers."""
    if not a:
        return ()
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    quo = [0] * (len(a) - db)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        if lr % lb:
            raise ArithmeticError("inexact polynomial division")
        c = lr // lb
        shift = len(r) - 1 - db
        quo[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        r = list(_trim(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(quo)


def _order(a):
    for i, x in enumerate(a):
        if x:
            return i
    return len(a)


def pstr(a, var="q"):
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if i == 0:
            body = str(c)
        else:
            mon = var if i == 1 else "%s^%d" % (var, i)
            body = mon if c == 1 else "%d*%s" % (c, mon)
        terms.append((sign, body))
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += " %s %s" % (sign, body)
    return s


# ---------------------------------------------------------------------------

class RatFun:
    """
    Element of Q(q): num/den with integer coefficients, coprime, the pair
    primitive, den with positive leading coefficient; zero is 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=(1,), _canonical=False):
        if not _canonical:
            num, den = ratfun_normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # coercion -------------------------------------------------------------
    @staticmethod
    def coerce(x):
        if isinstance(x, RatFun):
            return x
        if isinstance(x, (int, type(mpz(0)))):
            x = int(x)
            return RatFun((x,) if x else (), (1,), True)
        if isinstance(x, (Fraction, type(mpq(0)))):
            n, d = int(x.numerator), int(x.denominator)
            return RatFun((n,) if n else (), (d,), True)
        if isinstance(x, ModP):
            raise FieldMismatch("cannot mix Q(q) with GF(%d)" % x.p)
        raise TypeError("cannot coerce %r into Q(q)" % (x,))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFun(padd(self.num, o.num), self.den)
        return RatFun(padd(pmul(self.num, o.den), pmul(o.num, self.den)),
                      pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFun(pneg(self.num), self.den, True)

    def __sub__(self, other):
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RatFun.coerce(other) - self

    def __mul__(self, other):
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not o.num:
            return RatFun((), (1,), True)
        if o.den == (1,) and len(o.num) == 1 and self.den == (1,) \
                and len(self.num) == 1:
            return RatFun((self.num[0] * o.num[0],), (1,), True)
        return RatFun(pmul(self.num, o.num), pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero in Q(q)")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RatFun.coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = RatFun((1,), (1,), True)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # comparison -----------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        try:
            o = RatFun.coerce(other)
        except (TypeError, FieldMismatch):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.den == (1,) and len(self.num) <= 1:
                self._hash = hash(self.num[0] if self.num else 0)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def __str__(self):
        if self.den == (1,):
            return pstr(self.num)
        return "(%s)/(%s)" % (pstr(self.num), pstr(self.den))

    def __repr__(self):
        return "RatFun(%s)" % self


def ratfun_normalize(num, den):
    """Canonical form of num/den for integer coefficient tuples."""
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDenominator("zero denominator")
    if not num:
        return (), (1,)
    v = min(_order(num), _order(den))
    if v:
        num, den = num[v:], den[v:]
    if len(den) > 1 and len(num) > 1:
        if _order(den) == len(den) - 1 or _order(num) == len(num) - 1:
            # a monomial side shares at most a power of q, already removed
            pass
        else:
            g = pgcd(num, den)
            if len(g) > 1:
                num, den = pdivexact(num, g), pdivexact(den, g)
    c = gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


# ---------------------------------------------------------------------------

class ModP:
    """Residue modulo a prime p, stored in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.p = p
        self.v = int(v) % p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatch("GF(%d) vs GF(%d)" % (self.p, other.p))
            return other.v
        if isinstance(other, (int, type(mpz(0)))):
            return int(other)
        if isinstance(other, (RatFun, Fraction, type(mpq(0)))):
            raise FieldMismatch("cannot mix GF(%d) with %r" % (self.p, other))
        raise TypeError(other)

    def __add__(self, other):
        return ModP(self.v + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return ModP(self.v - self._other(other), self.p)

    def __rsub__(self, other):
        return ModP(self._other(other) - self.v, self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __mul__(self, other):
        return ModP(self.v * self._other(other), self.p)

    __rmul__ = __mul__

    def inverse(self):
        if not self.v:
            raise DivisionByZero("inverse of zero in GF(%d)" % self.p)
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other) % self.p
        if not o:
            raise DivisionByZero("division by zero in GF(%d)" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return ModP(self._other(other), self.p) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return ModP(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        try:
            return self.v == self._other(other) % self.p
        except (TypeError, FieldMismatch):
            return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return "ModP(%d, %d)" % (self.v, self.p)


# ---------------------------------------------------------------------------

class Field:
    """A coefficient field: coerces values and parses coefficient strings."""

    name = None
    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x):
        raise NotImplementedError

    def parse(self, s):
        return parse_scalar(s, self)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class RationalField(Field):
    name = "Q"

    def __call__(self, x):
        if isinstance(x, (ModP, RatFun)):
            if isinstance(x, RatFun) and x.is_constant():
                return mpq(x.num[0] if x.num else 0, x.den[0])
            raise FieldMismatch("%r is not rational" % (x,))
        return mpq(x)

    def contains(self, x):
        return isinstance(x, (int, type(mpq(0)), type(mpz(0)), Fraction))


class PrimeField(Field):
    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.characteristic = p
        self.name = "F%d" % p

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldMismatch("GF(%d) vs GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, (Fraction, type(mpq(0)))):
            d = int(x.denominator)
            if d % self.p == 0:
                raise DivisionByZero("%s has denominator divisible by %d"
                                     % (x, self.p))
            return ModP(int(x.numerator), self.p) / d
        if isinstance(x, RatFun):
            raise FieldMismatch("cannot map Q(q) into GF(%d)" % self.p)
        return ModP(x, self.p)

    def contains(self, x):
        return isinstance(x, ModP) and x.p == self.p


class RationalFunctionField(Field):
    name = "Q(q)"

    def __call__(self, x):
        return RatFun.coerce(x)

    @property
    def gen(self):
        return RatFun((0, 1), (1,), True)

    def contains(self, x):
        return isinstance(x, RatFun)


QQ = RationalField()
QQq = RationalFunctionField()


def GF(p):
    return PrimeField(p)


def field_from_name(name):
    """'Q', 'Q(q)', 'Fp' / 'GF(p)'."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name in ("Q(q)", "QQ(q)", "Qq"):
        return QQq
    m = re.fullmatch(r"(?:F|GF)\(?(\d+)\)?", name)
    if m:
        return GF(int(m.group(1)))
    raise ValueError("unknown field %r" % name)


def field_of(x):
    if isinstance(x, RatFun):
        return QQq
    if isinstance(x, ModP):
        return GF(x.p)
    return QQ


def arith(op, a, b=None):
    """Functional front end: op in {'add', 'mul', 'neg', 'inv'}."""
    if op in ("add", "mul"):
        fa, fb = field_of(a), field_of(b)
        if fa != fb and not (isinstance(a, int) or isinstance(b, int)):
            if {fa, fb} != {QQ, QQq}:
                raise FieldMismatch("%s vs %s" % (fa, fb))
        return a + b if op == "add" else a * b
    if op == "neg":
        return -a
    if op == "inv":
        if not a:
            raise DivisionByZero("inverse of zero")
        if isinstance(a, (RatFun, ModP)):
            return a.inverse()
        return 1 / mpq(a)
    raise ValueError(op)


# ---------------------------------------------------------------------------
# coefficient strings: integers, q, + - * / ^ and parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\*\*|[-+*/^()]))")


def _tokenize(s):
    pos, out = 0, []
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("bad coefficient string %r at %d" % (s, pos))
        num, var, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif var is not None:
            out.append(("q", None))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def parse_scalar(s, field=QQq):
    """Parse e.g. '-q^-2', '1/(q - q^-1)', '3/4' into ``field``."""
    toks = _tokenize(str(s))
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else (None, None)

    def take():
        t = toks[pos[0]]
        pos[0] += 1
        return t

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        val = term()
        if sign < 0:
            val = -val
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                val = val * rhs
            else:
                if not rhs:
                    raise DivisionByZero("division by zero in %r" % s)
                val = val / rhs
        return val

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            sign = 1
            if peek() == ("op", "-"):
                take()
                sign = -1
            kind, e = take()
            if kind != "num":
                raise ValueError("exponent must be an integer in %r" % s)
            base = base ** (sign * e)
        return base

    def atom():
        kind, v = take()
        if kind == "num":
            return field(v)
        if kind == "q":
            if not isinstance(field, RationalFunctionField):
                raise FieldMismatch("q used outside Q(q): %r" % s)
            return field.gen
        if v == "(":
            val = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses in %r" % s)
            return val
        if v == "-":
            return -atom()
        raise ValueError("unexpected token %r in %r" % (v, s))

    val = expr()
    if pos[0] != len(toks):
        raise ValueError("trailing tokens in %r" % s)
    return val


def scalar_str(x):
    """Serialized form used in reports."""
    if isinstance(x, RatFun):
        return str(x)
    return str(x)
