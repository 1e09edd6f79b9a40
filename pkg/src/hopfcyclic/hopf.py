"""
Hopf algebras over a PBW-type basis, Sweedler calculus, the twisted
antipodes S_sigma and S~_sigma, modular pairs, comodule algebras and
twisted traces.

Elements are dicts ``word -> nonzero scalar``; tensor elements are dicts
``tuple of words -> scalar``.  Words are hashable normal-form labels
chosen by each instance.
"""

from .report import CheckReport


class HopfError(ValueError):
    pass


class CapExceeded(HopfError):
    pass


class NotGrouplike(HopfError):
    pass


class InvalidPair(HopfError):
    pass


class UnknownGenerator(HopfError):
    pass


class NonInvertibleInverse(HopfError):
    pass


# ---------------------------------------------------------------------------
# linear combinations

def lc_iadd(acc, elem, c=None):
    """acc += c * elem in place; zero coefficients are removed."""
    for k, v in elem.items():
        if c is not None:
            v = c * v
        s = acc.get(k)
        s = v if s is None else s + v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def lc_add(*elems):
    out = {}
    for e in elems:
        lc_iadd(out, e)
    return out


def lc_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = -v if s is None else s - v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def lc_scale(elem, c):
    if not c:
        return {}
    return {k: c * v for k, v in elem.items()}


def lc_apply(f, elem):
    """Linear extension of f: key -> element."""
    out = {}
    for k, c in elem.items():
        lc_iadd(out, f(k), c)
    return out


def lc_tensor(a, b):
    """a (x) b for tensor elements (keys are tuples)."""
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k)
            v = ca * cb
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def lc_equal(a, b):
    return not lc_sub(a, b)


def as_tensor(elem):
    """Element of H as a length-one tensor element."""
    return {(w,): c for w, c in elem.items()}


# ---------------------------------------------------------------------------

class Algebra:
    """
    An associative unital algebra over ``field`` with a normal-form basis.

    Subclasses provide ``mul_words``, ``one_word``, ``degree``,
    ``basis_upto`` and ``factor`` (a word as a product of generator words,
    used to extend multiplicative maps).
    """

    name = "algebra"
    one_word = None
    finite_dimensional = False
    graded = False

    def __init__(self, field):
        self.field = field
        self.one_scalar = field(1)
        self._cache_mul = {}

    # to override -------------------------------------------------------
    def mul_words(self, a, b):
        raise NotImplementedError

    def degree(self, w):
        return 0

    def basis_upto(self, D):
        raise NotImplementedError

    def factor(self, w):
        """Split w = g * rest with g a generator word; None for the unit."""
        raise NotImplementedError

    def word_str(self, w):
        return str(w)

    # derived -----------------------------------------------------------
    def one(self):
        if self.one_word is None:
            raise NotImplementedError("unit is not a basis word")
        return {self.one_word: self.one_scalar}

    def mul_w(self, a, b):
        key = (a, b)
        r = self._cache_mul.get(key)
        if r is None:
            r = self.mul_words(a, b)
            self._cache_mul[key] = r
        return r

    def mul(self, x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                lc_iadd(out, self.mul_w(a, b), ca * cb)
        return out

    def prod_words(self, words):
        """Element of the ordered product of words."""
        acc = self.one()
        for w in words:
            acc = self.mul(acc, {w: self.one_scalar})
        return acc

    def word(self, w, c=None):
        return {w: self.one_scalar if c is None else c}

    def tmul(self, s, t):
        """Componentwise product in the tensor power algebra."""
        out = {}
        for ks, cs in s.items():
            for kt, ct in t.items():
                acc = {(): cs * ct}
                for a, b in zip(ks, kt):
                    acc = lc_tensor(acc, as_tensor(self.mul_w(a, b)))
                    if not acc:
                        break
                lc_iadd(out, acc)
        return out

    def is_commutative_upto(self, D):
        B = self.basis_upto(D)
        for a in B:
            for b in B:
                if not lc_equal(self.mul_w(a, b), self.mul_w(b, a)):
                    return False, (a, b)
        return True, None

    def unit_element(self):
        return self.one()

    def format(self, elem):
        if not elem:
            return "0"
        return " + ".join("(%s)*%s" % (c, self.word_str(w))
                          for w, c in elem.items())

    def format_tensor(self, elem):
        if not elem:
            return "0"
        return " + ".join(
            "(%s)*%s" % (c, " (x) ".join(self.word_str(w) for w in k)
                         if k else "1")
            for k, c in elem.items())


class HopfAlgebra(Algebra):
    """
    Hopf algebra whose coproduct, counit and antipode are given on
    generators (``coproduct_gen``, ``counit_gen``, ``antipode_gen``) and
    extended (anti)multiplicatively.  Instances with closed formulas may
    override ``coproduct_word`` etc. directly.
    """

    commutative = False
    cocommutative = False

    def __init__(self, field):
        super().__init__(field)
        self._cache_delta = {}
        self._cache_S = {}
        self._cache_eps = {}
        self._cache_delta_n = {}

    def coproduct_gen(self, g):
        raise NotImplementedError

    def counit_gen(self, g):
        raise NotImplementedError

    def antipode_gen(self, g):
        raise NotImplementedError

    # extended structure maps ---------------------------------------------
    def coproduct_word(self, w):
        r = self._cache_delta.get(w)
        if r is not None:
            return r
        f = self.factor(w)
        if f is None:
            r = {(w, w): self.one_scalar}
        else:
            g, rest = f
            if rest == self.one_word:
                r = self.coproduct_gen(g)
            else:
                r = self.tmul(self.coproduct_gen(g), self.coproduct_word(rest))
        self._cache_delta[w] = r
        return r

    def counit_word(self, w):
        r = self._cache_eps.get(w)
        if r is not None:
            return r
        f = self.factor(w)
        if f is None:
            r = self.one_scalar
        else:
            g, rest = f
            r = self.counit_gen(g) * self.counit_word(rest)
        self._cache_eps[w] = r
        return r

    def antipode_word(self, w):
        r = self._cache_S.get(w)
        if r is not None:
            return r
        f = self.factor(w)
        if f is None:
            r = {w: self.one_scalar}
        else:
            g, rest = f
            if rest == self.one_word:
                r = self.antipode_gen(g)
            else:
                r = self.mul(self.antipode_word(rest), self.antipode_gen(g))
        self._cache_S[w] = r
        return r

    # on elements ---------------------------------------------------------
    def coproduct(self, x):
        return lc_apply(self.coproduct_word, x)

    def counit(self, x):
        s = self.field(0)
        for w, c in x.items():
            e = self.counit_word(w)
            if e:
                s = s + c * e
        return s

    def antipode(self, x):
        return lc_apply(self.antipode_word, x)

    def iterated_coproduct_word(self, w, n):
        """Delta^(n): H -> H^{(x) n}; n = 1 is the identity."""
        if n < 1:
            raise ValueError("n must be >= 1")
        key = (w, n)
        r = self._cache_delta_n.get(key)
        if r is not None:
            return r
        if n == 1:
            r = {(w,): self.one_scalar}
        elif n == 2:
            r = self.coproduct_word(w)
        else:
            # (Delta (x) id^{n-2}) Delta^(n-1), splitting the first leg
            r = {}
            for k, c in self.iterated_coproduct_word(w, n - 1).items():
                for k1, c1 in self.coproduct_word(k[0]).items():
                    lc_iadd(r, {k1 + k[1:]: c * c1})
        self._cache_delta_n[key] = r
        return r

    def iterated_coproduct(self, x, n):
        return lc_apply(lambda w: self.iterated_coproduct_word(w, n), x)

    def is_grouplike(self, w):
        return (lc_equal(self.coproduct_word(w), {(w, w): self.one_scalar})
                and self.counit_word(w) == 1)


# ---------------------------------------------------------------------------

class Character:
    """
    Algebra map H -> k.  Built from values on generator words and extended
    multiplicatively, or from an explicit function on words.
    """

    def __init__(self, H, gen_values=None, func=None, name="delta"):
        self.H = H
        self.name = name
        self.gen_values = dict(gen_values or {})
        self._func = func
        self._cache = {}

    def word(self, w):
        r = self._cache.get(w)
        if r is not None:
            return r
        if self._func is not None:
            r = self.H.field(self._func(w))
        else:
            f = self.H.factor(w)
            if f is None:
                r = self.H.one_scalar
            else:
                g, rest = f
                if g not in self.gen_values:
                    raise UnknownGenerator("character undefined on %s"
                                           % self.H.word_str(g))
                r = self.H.field(self.gen_values[g]) * self.word(rest)
        self._cache[w] = r
        return r

    __call__ = word

    def on(self, x):
        s = self.H.field(0)
        for w, c in x.items():
            v = self.word(w)
            if v:
                s = s + c * v
        return s


def counit_character(H):
    return Character(H, func=H.counit_word, name="epsilon")


def sigma_element(H, sigma):
    """A grouplike given as a basis word or as an element, as an element."""
    if isinstance(sigma, dict):
        return sigma
    return {sigma: H.one_scalar}


def is_grouplike_element(H, x):
    x = sigma_element(H, x)
    dx = H.coproduct(x)
    xx = lc_tensor(as_tensor(x), as_tensor(x))
    return lc_equal(dx, xx) and H.counit(x) == 1


class ModularPair:
    """A character delta and a grouplike sigma (a basis word or an element)."""

    def __init__(self, delta, sigma, label=None):
        self.delta = delta
        self.sigma = sigma
        self.H = delta.H
        self.sigma_elem = sigma_element(self.H, sigma)
        self.label = label or "(%s, %s)" % (delta.name,
                                            self.H.format(self.sigma_elem))

    def check_basic(self, D=2):
        """Grouplike, character and delta(sigma) = 1 checks."""
        H = self.H
        rep = CheckReport("modular_pair_basic")
        rep.checked += 1
        if not is_grouplike_element(H, self.sigma_elem):
            rep.fail(kind="not_grouplike", witness=H.format(self.sigma_elem))
        rep.checked += 1
        if self.delta.on(self.sigma_elem) != 1:
            rep.fail(kind="delta_sigma",
                     value=str(self.delta.on(self.sigma_elem)))
        rep.checked += 1
        if self.delta.on(H.unit_element()) != 1:
            rep.fail(kind="delta_unit")
        B = H.basis_upto(D)
        for a in B:
            for b in B:
                if H.degree(a) + H.degree(b) > D:
                    continue
                rep.checked += 1
                lhs = self.delta.on(H.mul_w(a, b))
                if lhs != self.delta(a) * self.delta(b):
                    rep.fail(kind="not_multiplicative",
                             witness=(H.word_str(a), H.word_str(b)))
        return rep

    def __repr__(self):
        return "ModularPair%s" % self.label


def sigma_antipode(H, x, sigma):
    """S_sigma(h) = sigma S(h)."""
    sig = sigma_element(H, sigma)
    if not is_grouplike_element(H, sig):
        raise NotGrouplike(H.format(sig))
    return H.mul(sig, H.antipode(x))


def twisted_antipode_word(H, w, pair):
    """S~_sigma(w) = sigma * sum delta(w2) S(w1)."""
    acc = {}
    for (a, b), c in H.coproduct_word(w).items():
        d = pair.delta(b)
        if d:
            lc_iadd(acc, H.antipode_word(a), c * d)
    return H.mul(pair.sigma_elem, acc)


def twisted_antipode(H, x, pair):
    return lc_apply(lambda w: twisted_antipode_word(H, w, pair), x)


def check_modular_involution(H, pair, D):
    """S~_sigma^2 = id on every basis word of degree <= D."""
    rep = CheckReport("modular_involution", details={"D": D,
                                                      "pair": pair.label})
    basic = pair.check_basic(min(D, 2))
    rep.merge(basic)
    for w in H.basis_upto(D):
        rep.checked += 1
        st = twisted_antipode_word(H, w, pair)
        st2 = twisted_antipode(H, st, pair)
        if not lc_equal(st2, {w: H.one_scalar}):
            rep.fail(witness=H.word_str(w), value=H.format(st2))
    return rep


# ---------------------------------------------------------------------------
# Hopf axioms

def check_hopf_axioms(H, D):
    """Coassociativity, counit, antipode and bialgebra laws up to degree D."""
    rep = CheckReport("hopf_axioms", details={"instance": H.name, "D": D})
    one = H.one_scalar
    B = H.basis_upto(D)
    unit = H.unit_element()
    for w in B:
        d = H.coproduct_word(w)
        left = {}
        for (a, b), c in d.items():
            for k, c1 in H.coproduct_word(a).items():
                lc_iadd(left, {k + (b,): c * c1})
        right = {}
        for (a, b), c in d.items():
            for k, c1 in H.coproduct_word(b).items():
                lc_iadd(right, {(a,) + k: c * c1})
        rep.checked += 1
        if not lc_equal(left, right):
            rep.fail(axiom="coassociativity", witness=H.word_str(w))
        l1, r1 = {}, {}
        for (a, b), c in d.items():
            e = H.counit_word(a)
            if e:
                lc_iadd(l1, {b: c * e})
            e = H.counit_word(b)
            if e:
                lc_iadd(r1, {a: c * e})
        rep.checked += 1
        if not (lc_equal(l1, {w: one}) and lc_equal(r1, {w: one})):
            rep.fail(axiom="counit", witness=H.word_str(w))
        sl, sr = {}, {}
        for (a, b), c in d.items():
            lc_iadd(sl, H.mul(H.antipode_word(a), {b: one}), c)
            lc_iadd(sr, H.mul({a: one}, H.antipode_word(b)), c)
        target = lc_scale(unit, H.counit_word(w))
        rep.checked += 1
        if not (lc_equal(sl, target) and lc_equal(sr, target)):
            rep.fail(axiom="antipode", witness=H.word_str(w))
    for a in B:
        for b in B:
            if H.degree(a) + H.degree(b) > D:
                continue
            ab = H.mul_w(a, b)
            rep.checked += 1
            if not lc_equal(H.coproduct(ab),
                            H.tmul(H.coproduct_word(a), H.coproduct_word(b))):
                rep.fail(axiom="coproduct_multiplicative",
                         witness=(H.word_str(a), H.word_str(b)))
            rep.checked += 1
            if H.counit(ab) != H.counit_word(a) * H.counit_word(b):
                rep.fail(axiom="counit_multiplicative",
                         witness=(H.word_str(a), H.word_str(b)))
    return rep


def check_sigma_antipode_identities(H, sigma, D):
    """The four listed properties of S_sigma on words up to degree D."""
    sig = sigma_element(H, sigma)
    rep = CheckReport("sigma_antipode_identities",
                      details={"sigma": H.format(sig), "D": D})
    one = H.one_scalar
    B = H.basis_upto(D)

    def Ss(x):
        return sigma_antipode(H, x, sigma)

    rep.checked += 1
    if not lc_equal(Ss(H.unit_element()), sig):
        rep.fail(identity="S_sigma(1) = sigma")
    for w in B:
        x = {w: one}
        rep.checked += 2
        if H.counit(Ss(x)) != H.counit_word(w):
            rep.fail(identity="counit", witness=H.word_str(w))
        lhs = H.coproduct(Ss(x))
        rhs = {}
        for (a, b), c in H.coproduct_word(w).items():
            lc_iadd(rhs, lc_tensor(as_tensor(Ss({b: one})),
                                   as_tensor(Ss({a: one}))), c)
        if not lc_equal(lhs, rhs):
            rep.fail(identity="coproduct flip", witness=H.word_str(w))
    for a in B:
        for b in B:
            if H.degree(a) + H.degree(b) > D:
                continue
            rep.checked += 1
            # S_sigma(ab) = S_sigma(b) S(a)
            lhs = Ss(H.mul_w(a, b))
            rhs = H.mul(Ss({b: one}), H.antipode_word(a))
            if not lc_equal(lhs, rhs):
                rep.fail(identity="anti-multiplicativity",
                         witness=(H.word_str(a), H.word_str(b)))
    return rep


def check_flags(H, D):
    """Compare the commutative / cocommutative flags with direct tests."""
    rep = CheckReport("flags", details={"instance": H.name, "D": D})
    comm, wit = H.is_commutative_upto(D)
    rep.details["commutative"] = comm
    rep.checked += 1
    if comm != H.commutative:
        rep.fail(flag="commutative", witness=str(wit))
    cocomm = True
    for w in H.basis_upto(D):
        d = H.coproduct_word(w)
        flipped = {(b, a): c for (a, b), c in d.items()}
        if not lc_equal(d, flipped):
            cocomm = False
            wit = H.word_str(w)
            break
    rep.details["cocommutative"] = cocomm
    rep.checked += 1
    if cocomm != H.cocommutative:
        rep.fail(flag="cocommutative", witness=str(wit))
    return rep


# ---------------------------------------------------------------------------
# comodule algebras and traces

class CoactionStructure:
    """
    Right coaction beta: A -> A (x) H making A a comodule algebra.
    ``beta_word`` returns a dict (a_word, h_word) -> scalar.
    """

    def __init__(self, A, H, beta_word, name="coaction"):
        self.A = A
        self.H = H
        self._beta = beta_word
        self.name = name
        self._cache = {}

    def beta_word(self, a):
        r = self._cache.get(a)
        if r is None:
            r = self._beta(a)
            self._cache[a] = r
        return r

    def beta(self, x):
        return lc_apply(self.beta_word, x)

    def mul_AH(self, s, t):
        """Product in the tensor product algebra A (x) H."""
        out = {}
        for (a, h), c in s.items():
            for (a2, h2), c2 in t.items():
                pa = self.A.mul_w(a, a2)
                ph = self.H.mul_w(h, h2)
                for wa, ca in pa.items():
                    for wh, ch in ph.items():
                        lc_iadd(out, {(wa, wh): c * c2 * ca * ch})
        return out


def trivial_coaction(A, H):
    one = H.one_word
    return CoactionStructure(A, H, lambda a: {(a, one): A.one_scalar},
                             name="trivial")


def self_coaction(H):
    return CoactionStructure(H, H, H.coproduct_word, name="comultiplication")


def multiplicative_coaction(A, H, gen_beta, name="coaction"):
    """beta given on A's generators, extended as an algebra map."""
    cache = {}

    def beta(a):
        r = cache.get(a)
        if r is not None:
            return r
        f = A.factor(a)
        if f is None:
            r = {(a, H.one_word): A.one_scalar}
        else:
            g, rest = f
            r = co.mul_AH(gen_beta[g], beta(rest))
        cache[a] = r
        return r

    co = CoactionStructure(A, H, beta, name=name)
    return co


def check_comodule_axioms(c, D):
    A, H = c.A, c.H
    rep = CheckReport("comodule_axioms", details={"coaction": c.name, "D": D})
    one = A.one_scalar
    B = A.basis_upto(D)
    for a in B:
        b = c.beta_word(a)
        left = {}
        for (a0, h), co in b.items():
            for (h1, h2), c1 in H.coproduct_word(h).items():
                lc_iadd(left, {(a0, h1, h2): co * c1})
        right = {}
        for (a0, h), co in b.items():
            for (a00, h0), c1 in c.beta_word(a0).items():
                lc_iadd(right, {(a00, h0, h): co * c1})
        rep.checked += 1
        if not lc_equal(left, right):
            rep.fail(axiom="coassociativity", witness=A.word_str(a))
        cu = {}
        for (a0, h), co in b.items():
            e = H.counit_word(h)
            if e:
                lc_iadd(cu, {a0: co * e})
        rep.checked += 1
        if not lc_equal(cu, {a: one}):
            rep.fail(axiom="counit", witness=A.word_str(a))
    for a in B:
        for b in B:
            if A.degree(a) + A.degree(b) > D:
                continue
            rep.checked += 1
            lhs = c.beta(A.mul_w(a, b))
            rhs = c.mul_AH(c.beta_word(a), c.beta_word(b))
            if not lc_equal(lhs, rhs):
                rep.fail(axiom="algebra_map",
                         witness=(A.word_str(a), A.word_str(b)))
    return rep


class TraceFunctional:
    """Linear functional on A given on basis words."""

    def __init__(self, A, func, name="Tr"):
        self.A = A
        self._func = func
        self.name = name

    def word(self, a):
        return self.A.field(self._func(a))

    __call__ = word

    def on(self, x):
        s = self.A.field(0)
        for w, c in x.items():
            v = self.word(w)
            if v:
                s = s + c * v
        return s


def check_trace_properties(t, c, pair, D):
    """delta-trace and sigma-invariance on words of degree <= D."""
    A = c.A
    rep = CheckReport("trace_properties",
                      details={"trace": t.name, "pair": pair.label, "D": D})
    B = A.basis_upto(D)
    is_delta = True
    for a in B:
        for b in B:
            if A.degree(a) + A.degree(b) > D:
                continue
            rep.checked += 1
            lhs = t.on(A.mul_w(a, b))
            rhs = A.field(0)
            for (a0, h), co in c.beta_word(a).items():
                d = pair.delta(h)
                if d:
                    rhs = rhs + co * d * t.on(A.mul_w(b, a0))
            if lhs != rhs:
                is_delta = False
                rep.fail(property="delta_trace",
                         witness=(A.word_str(a), A.word_str(b)))
    is_inv = True
    for a in B:
        rep.checked += 1
        lhs = {}
        for (a0, h), co in c.beta_word(a).items():
            v = t.word(a0)
            if v:
                lc_iadd(lhs, {h: co * v})
        rhs = lc_scale(pair.sigma_elem, t.word(a))
        if not lc_equal(lhs, rhs):
            is_inv = False
            rep.fail(property="sigma_invariance", witness=A.word_str(a))
    rep.details["is_delta_trace"] = is_delta
    rep.details["is_sigma_invariant"] = is_inv
    return rep
