"""
Built-in Hopf algebras: group algebras kG, function algebras k^G, tensor
algebras T(V), Laurent polynomials k[z, z^-1], U_q(sl2) and A(SL_q(2)),
plus Hopf algebras read from presentation files.
"""

import json
from dataclasses import dataclass, field as dc_field
from itertools import permutations, product
from pathlib import Path

from .fields import QQ, QQq, field_from_name
from .hopf import (CapExceeded, Character, HopfAlgebra, HopfError,
                   ModularPair, check_modular_involution, counit_character,
                   lc_iadd, multiplicative_coaction, lc_tensor, as_tensor)
from .rewriting import Presentation

DATA = Path(__file__).parent / "data"


class InvalidGroupTable(HopfError):
    pass


# ---------------------------------------------------------------------------
# finite groups

class FiniteGroup:
    """Multiplication table on 0..n-1 with names; validated on build."""

    def __init__(self, names, table, name="G"):
        self.name = name
        self.names = list(names)
        self.table = [list(r) for r in table]
        n = len(self.names)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise InvalidGroupTable("table is not %d x %d" % (n, n))
        for r in self.table:
            for x in r:
                if not (0 <= x < n):
                    raise InvalidGroupTable("entry %r out of range" % (x,))
        ids = [e for e in range(n)
               if all(self.table[e][g] == g == self.table[g][e]
                      for g in range(n))]
        if not ids:
            raise InvalidGroupTable("no identity element")
        self.e = ids[0]
        self.inv = []
        for g in range(n):
            hs = [h for h in range(n) if self.table[g][h] == self.e
                  and self.table[h][g] == self.e]
            if not hs:
                raise InvalidGroupTable("%s has no inverse" % self.names[g])
            self.inv.append(hs[0])
        for a, b, c in product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != \
                    self.table[a][self.table[b][c]]:
                raise InvalidGroupTable(
                    "not associative at (%s, %s, %s)"
                    % (self.names[a], self.names[b], self.names[c]))

    @property
    def order(self):
        return len(self.names)

    def mul(self, a, b):
        return self.table[a][b]

    def is_abelian(self):
        n = self.order
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(n) for b in range(n))

    def center(self):
        n = self.order
        return [z for z in range(n)
                if all(self.table[z][g] == self.table[g][z]
                       for g in range(n))]

    def index(self, name):
        return self.names.index(name)


def cyclic_group(n):
    names = ["e"] + ["g" if k == 1 else "g^%d" % k for k in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(names, table, name="Z%d" % n)


def symmetric_group_3():
    perms = sorted(permutations(range(3)))

    def compose(p, r):
        # (p r)(i) = p(r(i))
        return tuple(p[r[i]] for i in range(3))

    def cyc(p):
        seen, parts = set(), []
        for i in range(3):
            if i in seen or p[i] == i:
                continue
            c, j = [], i
            while j not in seen:
                seen.add(j)
                c.append(str(j + 1))
                j = p[j]
            parts.append("(" + "".join(c) + ")")
        return "".join(parts) or "e"

    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[compose(p, r)] for r in perms] for p in perms]
    return FiniteGroup([cyc(p) for p in perms], table, name="S3")


BUILTIN_GROUPS = {
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "S3": symmetric_group_3,
}


def load_group(spec):
    """'Z3', 'S3', 'Zn' or a JSON file {"elements": [...], "table": [[...]]}."""
    if spec in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[spec]()
    if spec.startswith("Z") and spec[1:].isdigit():
        return cyclic_group(int(spec[1:]))
    data = json.loads(Path(spec).read_text())
    names = data["elements"]
    table = [[names.index(x) if isinstance(x, str) else x for x in row]
             for row in data["table"]]
    return FiniteGroup(names, table, name=data.get("name", Path(spec).stem))


class GroupAlgebra(HopfAlgebra):
    """kG: words are group element indices."""

    finite_dimensional = True
    cocommutative = True

    def __init__(self, group, field=QQ):
        super().__init__(field)
        self.group = group
        self.name = "group:%s" % group.name
        self.one_word = group.e
        self.commutative = group.is_abelian()

    def mul_words(self, a, b):
        return {self.group.mul(a, b): self.one_scalar}

    def coproduct_word(self, w):
        return {(w, w): self.one_scalar}

    def counit_word(self, w):
        return self.one_scalar

    def antipode_word(self, w):
        return {self.group.inv[w]: self.one_scalar}

    def factor(self, w):
        return None if w == self.group.e else (w, self.group.e)

    def basis_upto(self, D=0):
        return list(range(self.group.order))

    def word_str(self, w):
        return self.group.names[w]

    def g(self, name):
        return self.group.index(name)


class FunctionAlgebra(HopfAlgebra):
    """k^G on the delta-function basis; words are group indices."""

    finite_dimensional = True
    commutative = True

    def __init__(self, group, field=QQ):
        super().__init__(field)
        self.group = group
        self.name = "fungrp:%s" % group.name
        self.cocommutative = group.is_abelian()
        n = group.order
        self._fibres = {g: [(a, b) for a in range(n) for b in range(n)
                            if group.mul(a, b) == g] for g in range(n)}

    def mul_words(self, a, b):
        return {a: self.one_scalar} if a == b else {}

    def unit_element(self):
        return {g: self.one_scalar for g in range(self.group.order)}

    def one(self):
        return self.unit_element()

    def coproduct_word(self, w):
        return {ab: self.one_scalar for ab in self._fibres[w]}

    def counit_word(self, w):
        return self.one_scalar if w == self.group.e else self.field(0)

    def antipode_word(self, w):
        return {self.group.inv[w]: self.one_scalar}

    def basis_upto(self, D=0):
        return list(range(self.group.order))

    def word_str(self, w):
        return "d[%s]" % self.group.names[w]

    def evaluation(self, g):
        """The character f -> f(g)."""
        return Character(self, func=lambda w: 1 if w == g else 0,
                         name="ev_%s" % self.group.names[g])

    def prod_words(self, words):
        acc = self.unit_element()
        for w in words:
            acc = self.mul(acc, {w: self.one_scalar})
        return acc


class TensorAlgebra(HopfAlgebra):
    """
    T(V) with primitive generators v_0..v_{d-1}; words are tuples of
    letters.  With a weight cap, any product longer than the cap raises
    CapExceeded instead of being dropped.
    """

    cocommutative = True
    graded = True

    def __init__(self, dim, field=QQ, cap=None):
        super().__init__(field)
        self.dim = dim
        self.cap = cap
        self.name = "tensor:%d" % dim
        self.one_word = ()
        self.commutative = dim <= 1

    def mul_words(self, a, b):
        if self.cap is not None and len(a) + len(b) > self.cap:
            raise CapExceeded("weight %d exceeds cap %d"
                              % (len(a) + len(b), self.cap))
        return {a + b: self.one_scalar}

    def degree(self, w):
        return len(w)

    def coproduct_word(self, w):
        r = self._cache_delta.get(w)
        if r is not None:
            return r
        n = len(w)
        r = {}
        for mask in range(1 << n):
            left = tuple(w[i] for i in range(n) if mask >> i & 1)
            right = tuple(w[i] for i in range(n) if not mask >> i & 1)
            lc_iadd(r, {(left, right): self.one_scalar})
        self._cache_delta[w] = r
        return r

    def counit_word(self, w):
        return self.one_scalar if not w else self.field(0)

    def antipode_word(self, w):
        return {tuple(reversed(w)): self.field((-1) ** len(w))}

    def factor(self, w):
        return None if not w else ((w[0],), w[1:])

    def basis_upto(self, D):
        if self.cap is not None:
            D = min(D, self.cap)
        out = []
        for k in range(D + 1):
            out.extend(product(range(self.dim), repeat=k))
        return out

    def words_of_weight(self, k):
        return list(product(range(self.dim), repeat=k))

    def word_str(self, w):
        return "".join("v%d" % i for i in w) if w else "1"


class LaurentAlgebra(HopfAlgebra):
    """k[z, z^-1] with z grouplike; words are exponents."""

    commutative = True
    cocommutative = True

    def __init__(self, field=QQ):
        super().__init__(field)
        self.name = "laurent"
        self.one_word = 0

    def mul_words(self, a, b):
        return {a + b: self.one_scalar}

    def degree(self, w):
        return abs(w)

    def coproduct_word(self, w):
        return {(w, w): self.one_scalar}

    def counit_word(self, w):
        return self.one_scalar

    def antipode_word(self, w):
        return {-w: self.one_scalar}

    def factor(self, w):
        if w == 0:
            return None
        return (1, w - 1) if w > 0 else (-1, w + 1)

    def basis_upto(self, D):
        return list(range(-D, D + 1))

    def word_str(self, w):
        return "1" if w == 0 else ("z" if w == 1 else "z^%d" % w)


# ---------------------------------------------------------------------------
# U_q(sl2): basis s^l x^m y^n, words (l, m, n)

class UqSl2(HopfAlgebra):

    def __init__(self, field=QQq, q=None):
        super().__init__(field)
        self.name = "uqsl2"
        self.q = field.gen if q is None else field(q)
        self.one_word = (0, 0, 0)
        self.K, self.Ki = (1, 0, 0), (-1, 0, 0)
        self.x, self.y = (0, 1, 0), (0, 0, 1)
        q = self.q
        self._qinv = q ** -1
        self._c = (q - self._qinv) ** -1
        self._yx = {}
        self._pres = None

    def qpow(self, e):
        return self.q ** e

    def degree(self, w):
        return abs(w[0]) + w[1] + w[2]

    def _y_xm(self, m):
        """y x^m in the PBW basis."""
        out = {(0, m, 1): self.one_scalar}
        if m:
            cs = sum((self.qpow(-2 * j) for j in range(m)), self.field(0))
            cs2 = sum((self.qpow(2 * j) for j in range(m)), self.field(0))
            lc_iadd(out, {(1, m - 1, 0): -self._c * cs,
                          (-1, m - 1, 0): self._c * cs2})
        return out

    def yn_xm(self, n, m):
        key = (n, m)
        r = self._yx.get(key)
        if r is not None:
            return r
        if n == 0:
            r = {(0, m, 0): self.one_scalar}
        elif m == 0:
            r = {(0, 0, n): self.one_scalar}
        else:
            r = {}
            for (a, b, c), co in self.yn_xm(n - 1, m).items():
                # y s^a = q^{2a} s^a y
                f = co * self.qpow(2 * a)
                for (a2, b2, c2), co2 in self._y_xm(b).items():
                    lc_iadd(r, {(a + a2, b2, c2 + c): f * co2})
        self._yx[key] = r
        return r

    def mul_words(self, w1, w2):
        l, m, n = w1
        l2, m2, n2 = w2
        f = self.qpow(2 * l2 * (n - m))
        out = {}
        for (a, b, c), co in self.yn_xm(n, m2).items():
            # x^m s^a = q^{-2ma} s^a x^m
            lc_iadd(out, {(l + l2 + a, m + b, c + n2):
                          f * co * self.qpow(-2 * m * a)})
        return out

    def factor(self, w):
        l, m, n = w
        if l > 0:
            return self.K, (l - 1, m, n)
        if l < 0:
            return self.Ki, (l + 1, m, n)
        if m:
            return self.x, (0, m - 1, n)
        if n:
            return self.y, (0, 0, n - 1)
        return None

    def coproduct_gen(self, g):
        one, o = self.one_scalar, self.one_word
        if g == self.K:
            return {(self.K, self.K): one}
        if g == self.Ki:
            return {(self.Ki, self.Ki): one}
        if g == self.x:
            return {(self.x, self.K): one, (o, self.x): one}
        if g == self.y:
            return {(self.y, o): one, (self.Ki, self.y): one}
        raise KeyError(g)

    def counit_gen(self, g):
        return self.one_scalar if g in (self.K, self.Ki) else self.field(0)

    def antipode_gen(self, g):
        one = self.one_scalar
        if g == self.K:
            return {self.Ki: one}
        if g == self.Ki:
            return {self.K: one}
        if g == self.x:
            # -x s^-1
            return self.mul({self.x: -one}, {self.Ki: one})
        if g == self.y:
            return self.mul({self.K: -one}, {self.y: one})
        raise KeyError(g)

    def basis_upto(self, D):
        out = []
        for d in range(D + 1):
            for l in range(-d, d + 1):
                for m in range(d - abs(l) + 1):
                    out.append((l, m, d - abs(l) - m))
        return out

    def word_str(self, w):
        l, m, n = w
        parts = []
        for g, e in (("s", l), ("x", m), ("y", n)):
            if e == 1:
                parts.append(g)
            elif e:
                parts.append("%s^%d" % (g, e))
        return " ".join(parts) or "1"

    # presentation ----------------------------------------------------------
    @property
    def presentation(self):
        if self._pres is None:
            q, c = self.q, self._c
            rules = [
                (("x", "s"), {("s", "x"): q ** -2}),
                (("x", "S"), {("S", "x"): q ** 2}),
                (("y", "s"), {("s", "y"): q ** 2}),
                (("y", "S"), {("S", "y"): q ** -2}),
                (("y", "x"), {("x", "y"): 1, ("s",): -c, ("S",): c}),
            ]
            self._pres = Presentation(self.field, ["s", "S", "x", "y"], rules,
                                      inverses={"s": "S"}, name="uqsl2",
                                      weights={"s": 1, "S": 1, "x": 1,
                                               "y": 1})
        return self._pres

    def word_from_string(self, s):
        l = s.count("s") - s.count("S")
        return (l, s.count("x"), s.count("y"))

    def gen_word(self, g):
        return {"s": self.K, "S": self.Ki, "x": self.x, "y": self.y}[g]


# ---------------------------------------------------------------------------
# A(SL_q(2)): basis u^j v^k x^i and u^j v^k y^l, words (j, k, e) with
# e > 0 for x^e and e < 0 for y^-e

class ASLq2(HopfAlgebra):

    def __init__(self, field=QQq, q=None):
        super().__init__(field)
        self.name = "aslq2"
        self.q = field.gen if q is None else field(q)
        self.one_word = (0, 0, 0)
        self.u, self.v = (1, 0, 0), (0, 1, 0)
        self.x, self.y = (0, 0, 1), (0, 0, -1)
        self._xy = {}
        self._pres = None

    def qpow(self, e):
        return self.q ** e

    def degree(self, w):
        return w[0] + w[1] + abs(w[2])

    def _mixed(self, e1, e2):
        """X X' for X = x^e1 or y^-e1 and likewise X'."""
        if e1 >= 0 and e2 >= 0 or e1 <= 0 and e2 <= 0:
            return {(0, 0, e1 + e2): self.one_scalar}
        key = (e1, e2)
        r = self._xy.get(key)
        if r is not None:
            return r
        if e1 > 0:
            # x^i y^l = (1 + q^{-(2i-1)} uv) x^{i-1} y^{l-1}
            i, l = e1, -e2
            c = self.qpow(-(2 * i - 1))
        else:
            # y^l x^i = (1 + q^{2l-1} uv) y^{l-1} x^{i-1}
            l, i = -e1, e2
            c = self.qpow(2 * l - 1)
        sub = self._mixed(e1 - 1 if e1 > 0 else e1 + 1,
                          e2 + 1 if e2 < 0 else e2 - 1)
        r = dict(sub)
        for (j, k, e), co in sub.items():
            lc_iadd(r, {(j + 1, k + 1, e): c * co})
        self._xy[key] = r
        return r

    def mul_words(self, w1, w2):
        j, k, e = w1
        j2, k2, e2 = w2
        # X u^j2 v^k2 = q^{-e (j2 + k2)} u^j2 v^k2 X
        f = self.qpow(-e * (j2 + k2))
        out = {}
        for (a, b, c), co in self._mixed(e, e2).items():
            lc_iadd(out, {(j + j2 + a, k + k2 + b, c): f * co})
        return out

    def factor(self, w):
        j, k, e = w
        if j:
            return self.u, (j - 1, k, e)
        if k:
            return self.v, (0, k - 1, e)
        if e > 0:
            return self.x, (0, 0, e - 1)
        if e < 0:
            return self.y, (0, 0, e + 1)
        return None

    def coproduct_gen(self, g):
        one = self.one_scalar
        x, u, v, y = self.x, self.u, self.v, self.y
        return {
            x: {(x, x): one, (u, v): one},
            u: {(x, u): one, (u, y): one},
            v: {(v, x): one, (y, v): one},
            y: {(v, u): one, (y, y): one},
        }[g]

    def counit_gen(self, g):
        return self.one_scalar if g in (self.x, self.y) else self.field(0)

    def antipode_gen(self, g):
        one, q = self.one_scalar, self.q
        return {
            self.x: {self.y: one},
            self.y: {self.x: one},
            self.u: {self.u: -q},
            self.v: {self.v: -q ** -1},
        }[g]

    def basis_upto(self, D):
        out = []
        for d in range(D + 1):
            for j in range(d + 1):
                for k in range(d - j + 1):
                    r = d - j - k
                    out.append((j, k, r))
                    if r:
                        out.append((j, k, -r))
        return out

    def word_str(self, w):
        j, k, e = w
        parts = []
        for g, p in (("u", j), ("v", k), ("x", max(e, 0)), ("y", max(-e, 0))):
            if p == 1:
                parts.append(g)
            elif p:
                parts.append("%s^%d" % (g, p))
        return " ".join(parts) or "1"

    @property
    def presentation(self):
        if self._pres is None:
            q = self.q
            rules = [
                (("x", "u"), {("u", "x"): q ** -1}),
                (("x", "v"), {("v", "x"): q ** -1}),
                (("v", "u"), {("u", "v"): 1}),
                (("y", "u"), {("u", "y"): q}),
                (("y", "v"), {("v", "y"): q}),
                (("x", "y"), {(): 1, ("u", "v"): q ** -1}),
                (("y", "x"), {(): 1, ("u", "v"): q}),
            ]
            self._pres = Presentation(self.field, ["x", "u", "v", "y"], rules,
                                      name="aslq2")
        return self._pres

    def word_from_string(self, s):
        return (s.count("u"), s.count("v"), s.count("x") - s.count("y"))

    def gen_word(self, g):
        return {"x": self.x, "u": self.u, "v": self.v, "y": self.y}[g]


# ---------------------------------------------------------------------------
# presentation files

class PresentedHopfAlgebra(HopfAlgebra):
    """
    Hopf algebra from a presentation file; words are normal-form strings
    (tuples of generator names).  Products are computed by rewriting.
    """

    def __init__(self, presentation, coproduct, counit, antipode, name,
                 commutative=False, cocommutative=False, strategy="leftmost"):
        super().__init__(presentation.field)
        self.presentation = presentation
        self.name = name
        self.one_word = ()
        self.commutative = commutative
        self.cocommutative = cocommutative
        self.strategy = strategy
        self._copr = coproduct
        self._counit = counit
        self._anti = antipode

    def mul_words(self, a, b):
        return self.presentation.normalize({a + b: self.one_scalar},
                                           strategy=self.strategy)

    def degree(self, w):
        wt = self.presentation.weights
        return sum(wt.get(g, 1) for g in w)

    def factor(self, w):
        return None if not w else ((w[0],), w[1:])

    def coproduct_gen(self, g):
        return self._copr[g[0]]

    def counit_gen(self, g):
        return self._counit[g[0]]

    def antipode_gen(self, g):
        return self._anti[g[0]]

    def basis_upto(self, D):
        P = self.presentation
        out, frontier = [()], [()]
        for _ in range(D):
            nxt = []
            for w in frontier:
                for g in P.generators:
                    s = w + (g,)
                    if self.degree(s) <= D and P.is_normal(s):
                        nxt.append(s)
            out.extend(nxt)
            frontier = nxt
        return out

    def word_str(self, w):
        return " ".join(w) or "1"


def _parse_element(P, spec, tensor=False):
    """[[coef, word], ...] or [[coef, word, word], ...] into an element."""
    out = {}
    F = P.field
    for term in spec:
        c = F.parse(term[0]) if isinstance(term[0], str) else F(term[0])
        if tensor:
            k = (P.normalize(term[1]), P.normalize(term[2]))
            acc = {(): c}
            for part in k:
                acc = lc_tensor(acc, as_tensor(part))
            lc_iadd(out, acc)
        else:
            lc_iadd(out, P.normalize(term[1]), c)
    return out


def load_presentation_file(path, field=None):
    """Read a JSON presentation file into a PresentedHopfAlgebra."""
    data = json.loads(Path(path).read_text())
    F = field or field_from_name(data.get("field", "Q(q)"))
    gens = data["generators"]
    inverses = data.get("inverses", {})
    rules = []
    tmp = Presentation(F, gens, [], inverses=inverses)
    for r in data["rules"]:
        lhs = tmp.parse_word(r["lhs"])
        rhs = {}
        for c, w in r["rhs"]:
            lc_iadd(rhs, {tmp.parse_word(w): F.parse(c)})
        rules.append((lhs, rhs))
    P = Presentation(F, gens, rules, inverses=inverses,
                     name=data.get("name", Path(path).stem),
                     weights=data.get("weights"))
    P.require_confluent()
    copr = {g: _parse_element(P, data["coproduct"][g], tensor=True)
            for g in gens}
    counit = {g: F.parse(str(data["counit"][g])) for g in gens}
    anti = {g: _parse_element(P, data["antipode"][g]) for g in gens}
    flags = data.get("flags", {})
    return PresentedHopfAlgebra(P, copr, counit, anti,
                                name="file:%s" % P.name,
                                commutative=flags.get("commutative", False),
                                cocommutative=flags.get("cocommutative",
                                                        False))


# ---------------------------------------------------------------------------
# modular pairs and the catalog

def uq_pairs(H):
    eps = counit_character(H)
    return {
        "epsilon,s^-1": ModularPair(eps, H.Ki, label="(epsilon, s^-1)"),
        "epsilon,s": ModularPair(eps, H.K, label="(epsilon, s)"),
        "epsilon,1": ModularPair(eps, H.one_word, label="(epsilon, 1)"),
    }


def aslq2_delta(H):
    q = H.q
    return Character(H, {H.x: q, H.u: 0, H.v: 0, H.y: q ** -1}, name="delta")


def aslq2_pairs(H):
    return {
        "delta,1": ModularPair(aslq2_delta(H), H.one_word,
                               label="(delta, 1)"),
        "epsilon,1": ModularPair(counit_character(H), H.one_word,
                                 label="(epsilon, 1)"),
    }


def default_pairs(H):
    """Pairs advertised by each instance, keyed by CLI selector."""
    eps = counit_character(H)
    if isinstance(H, UqSl2):
        return uq_pairs(H)
    if isinstance(H, ASLq2):
        return aslq2_pairs(H)
    if isinstance(H, GroupAlgebra):
        out = {"epsilon,1": ModularPair(eps, H.one_word,
                                        label="(epsilon, 1)")}
        for z in H.group.center():
            if z != H.group.e:
                nm = H.group.names[z]
                out["epsilon,%s" % nm] = ModularPair(
                    eps, z, label="(epsilon, %s)" % nm)
        return out
    if isinstance(H, FunctionAlgebra):
        return {"epsilon,1": ModularPair(eps, H.unit_element(),
                                         label="(epsilon, 1)")}
    if isinstance(H, LaurentAlgebra):
        return {"epsilon,1": ModularPair(eps, 0, label="(epsilon, 1)"),
                "epsilon,z": ModularPair(eps, 1, label="(epsilon, z)")}
    if H.one_word is not None:
        return {"epsilon,1": ModularPair(eps, H.one_word,
                                         label="(epsilon, 1)")}
    return {}


# the involutive pair for each instance
INVOLUTIVE = {"uqsl2": "epsilon,s^-1", "aslq2": "delta,1"}


@dataclass
class InstanceSpec:
    name: str
    params: dict = dc_field(default_factory=dict)
    field: object = None
    pairs: dict = dc_field(default_factory=dict)


def build_instance(spec, check_pairs=True, D=2):
    """
    Build a Hopf algebra from an InstanceSpec or CLI-style name
    ('group:Z3', 'fungrp:S3', 'tensor:2', 'laurent', 'uqsl2', 'aslq2',
    'file:path.json').
    """
    if isinstance(spec, str):
        spec = InstanceSpec(spec)
    name, params, F = spec.name, dict(spec.params), spec.field
    kind, _, arg = name.partition(":")
    if kind == "group":
        H = GroupAlgebra(load_group(arg or params["group"]), F or QQ)
    elif kind == "fungrp":
        H = FunctionAlgebra(load_group(arg or params["group"]), F or QQ)
    elif kind == "tensor":
        H = TensorAlgebra(int(arg or params.get("dim", 1)), F or QQ,
                          cap=params.get("cap"))
    elif kind == "laurent":
        H = LaurentAlgebra(F or QQ)
    elif kind == "uqsl2":
        H = UqSl2(F or QQq, q=params.get("q"))
    elif kind == "aslq2":
        H = ASLq2(F or QQq, q=params.get("q"))
    elif kind == "file":
        H = load_presentation_file(arg, F)
    else:
        raise ValueError("unknown instance %r" % name)
    pairs = default_pairs(H)
    spec.pairs = {}
    for key, pair in pairs.items():
        rep = check_modular_involution(H, pair, D) if check_pairs else None
        spec.pairs[key] = {"pair": pair,
                           "involutive": None if rep is None else rep.passed}
    H.spec = spec
    return H


def pair_for(H, selector):
    """Look up an advertised pair by selector such as 'delta,1'."""
    pairs = default_pairs(H)
    if selector not in pairs:
        raise KeyError("instance %s has no pair %r (available: %s)"
                       % (H.name, selector, ", ".join(pairs)))
    return pairs[selector]


# ---------------------------------------------------------------------------
# the Laurent coaction on A(SL_q(2))

def laurent_on_aslq2(A=None, H=None):
    """beta(x) = x(x)z, beta(u) = u(x)z^-1, beta(v) = v(x)z, beta(y) = y(x)z^-1."""
    A = A or ASLq2()
    H = H or LaurentAlgebra(A.field)
    one = A.one_scalar
    gen_beta = {A.x: {(A.x, 1): one}, A.u: {(A.u, -1): one},
                A.v: {(A.v, 1): one}, A.y: {(A.y, -1): one}}
    return multiplicative_coaction(A, H, gen_beta, name="laurent_on_aslq2")


def builtin_coaction(name):
    if name == "laurent_on_aslq2":
        return laurent_on_aslq2()
    raise KeyError(name)


def verify_s2_conjugation(H, D):
    """S^2(w) = s w s^-1 on U_q(sl2) words of degree <= D."""
    from .report import CheckReport
    from .hopf import lc_equal
    rep = CheckReport("s2_conjugation", details={"D": D})
    one = H.one_scalar
    for w in H.basis_upto(D):
        rep.checked += 1
        lhs = H.antipode(H.antipode_word(w))
        rhs = H.mul(H.mul({H.K: one}, {w: one}), {H.Ki: one})
        if not lc_equal(lhs, rhs):
            rep.fail(witness=H.word_str(w), lhs=H.format(lhs),
                     rhs=H.format(rhs))
    return rep
