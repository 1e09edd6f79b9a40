"""
(Co)cyclic modules as lazy word-level operators, the maps between them,
and the identity verifiers.

A level-n element is a dict ``key -> scalar`` where a key is a tuple of
factor words.  Level 0 of the Hopf cyclic module is k, with key ().
"""

from itertools import product

from .hopf import (HopfError, InvalidPair, check_modular_involution,
                   counit_character, lc_apply, lc_equal, lc_iadd, lc_scale,
                   lc_sub, ModularPair)
from .report import CheckReport


class NotCocommutative(HopfError):
    pass


class NotCommutative(HopfError):
    pass


class TraceAxiomsFail(HopfError):
    pass


class InvolutionFails(HopfError):
    pass


# ---------------------------------------------------------------------------
# helpers on tensor keys

def _unit_elem(A):
    return A.unit_element()


def insert_at(key, pos, elem):
    """Insert the element elem as a new factor before position pos."""
    return {key[:pos] + (w,) + key[pos:]: c for w, c in elem.items()}


def replace_at(key, pos, elem):
    return {key[:pos] + (w,) + key[pos + 1:]: c for w, c in elem.items()}


def words_upto(A, D, nfactors):
    """Tensor words of nfactors basis words, total degree <= D."""
    if A.finite_dimensional:
        B = A.basis_upto(0)
        return list(product(B, repeat=nfactors))
    by_deg = {}
    for w in A.basis_upto(D):
        by_deg.setdefault(A.degree(w), []).append(w)
    out = []

    def rec(prefix, budget, left):
        if left == 0:
            out.append(prefix)
            return
        for d in range(budget + 1):
            for w in by_deg.get(d, ()):
                rec(prefix + (w,), budget - d, left - 1)

    rec((), D, nfactors)
    return out


def words_of_weight(A, w, nfactors, exclude=None):
    """Tensor words whose factor degrees sum to exactly w."""
    by_deg = {}
    for x in A.basis_upto(w):
        if exclude is not None and x == exclude:
            continue
        by_deg.setdefault(A.degree(x), []).append(x)
    out = []

    def rec(prefix, budget, left):
        if left == 0:
            if budget == 0:
                out.append(prefix)
            return
        for d in range(budget + 1):
            for x in by_deg.get(d, ()):
                rec(prefix + (x,), budget - d, left - 1)

    rec((), w, nfactors)
    return out


# ---------------------------------------------------------------------------
# cyclic (homological) modules

class CyclicModule:
    """
    Base class.  Subclasses implement face_word(i, n, key) for i = 0..n,
    degen_word(i, n, key) for i = 0..n and tau_word(n, key), each returning
    an element of the appropriate level.
    """

    kind = "cyclic"
    is_cyclic = True
    name = "cyclic module"
    offset = 0          # level n has n + offset tensor factors

    def __init__(self, A):
        self.A = A
        self.field = A.field

    def nfactors(self, n):
        return n + self.offset

    # linear extensions ---------------------------------------------------
    def face(self, i, n, x):
        return lc_apply(lambda k: self.face_word(i, n, k), x)

    def degen(self, i, n, x):
        return lc_apply(lambda k: self.degen_word(i, n, k), x)

    def tau(self, n, x, power=1):
        for _ in range(power):
            x = lc_apply(lambda k: self.tau_word(n, k), x)
        return x

    def b(self, n, x):
        """Hochschild boundary: sum (-1)^i face_i, level n -> n - 1."""
        out = {}
        for i in range(n + 1):
            lc_iadd(out, self.face(i, n, x), self.field(-1) ** i)
        return out

    def b_prime(self, n, x):
        out = {}
        for i in range(n):
            lc_iadd(out, self.face(i, n, x), self.field(-1) ** i)
        return out

    def lam(self, n, x):
        return lc_scale(self.tau(n, x), self.field(-1) ** n)

    def norm(self, n, x):
        out, y = dict(x), x
        for _ in range(n):
            y = self.lam(n, y)
            lc_iadd(out, y)
        return out

    def extra_degeneracy(self, n, x):
        """s = tau_{n+1} sigma_n: level n -> n + 1."""
        return self.tau(n + 1, self.degen(n, n, x))

    def connes_B(self, n, x, normalized=True):
        """B = (1 - lambda) s N: level n -> n + 1."""
        y = self.extra_degeneracy(n, self.norm(n, x))
        out = lc_sub(y, self.lam(n + 1, y))
        return self.project(n + 1, out) if normalized else out

    # degenerate words ----------------------------------------------------
    def is_degenerate(self, n, key):
        raise NotImplementedError

    def project(self, n, x):
        """Image in the normalized quotient (drop degenerate keys)."""
        return {k: c for k, c in x.items() if not self.is_degenerate(n, k)}

    def spanning(self, n, D):
        return words_upto(self.A, D, self.nfactors(n))

    def unit_word_or_none(self):
        return self.A.one_word


class HopfCyclicModule(CyclicModule):
    """~H^(delta, sigma): level n = H^{(x) n}, level 0 = k."""

    name = "hopf_cyclic"

    def __init__(self, H, pair):
        super().__init__(H)
        self.H = H
        self.pair = pair
        self.sigma = pair.sigma_elem
        self.name = "~H^%s(%s)" % (pair.label, H.name)
        self._tau = {}

    def face_word(self, i, n, key):
        H = self.H
        if i == 0:
            e = H.counit_word(key[0])
            return {key[1:]: e} if e else {}
        if i == n:
            d = self.pair.delta(key[-1])
            return {key[:-1]: d} if d else {}
        return {key[:i - 1] + (w,) + key[i + 1:]: c
                for w, c in H.mul_w(key[i - 1], key[i]).items()}

    def degen_word(self, i, n, key):
        return insert_at(key, i, _unit_elem(self.H))

    def tau_word(self, n, key):
        if n == 0:
            return {key: self.field(1)}
        r = self._tau.get(key)
        if r is not None:
            return r
        H, delta = self.H, self.pair.delta
        # states: (first-leg product word or None, second legs) -> coef
        states = {(None, ()): self.field(1)}
        for j, h in enumerate(key):
            last = j == n - 1
            new = {}
            for (p, tail), c in states.items():
                for (a, b), c1 in H.coproduct_word(h).items():
                    cc = c * c1
                    if last:
                        d = delta(b)
                        if not d:
                            continue
                        cc = cc * d
                        t2 = tail
                    else:
                        t2 = tail + (b,)
                    prods = {a: self.field(1)} if p is None else H.mul_w(p, a)
                    for w, c2 in prods.items():
                        lc_iadd(new, {(w, t2): cc * c2})
            states = new
        r = {}
        for (p, tail), c in states.items():
            sp = H.mul(self.sigma, H.antipode_word(p))
            for w, c2 in sp.items():
                lc_iadd(r, {(w,) + tail: c * c2})
        self._tau[key] = r
        return r

    def is_degenerate(self, n, key):
        u = self.H.one_word
        if u is None:
            raise NotImplementedError("unit is not a basis word")
        return u in key


def build_hopf_cyclic(H, pair, unchecked=False, D=2):
    """The cyclic module ~H^(delta, sigma); the pair is checked unless asked."""
    if not unchecked:
        rep = check_modular_involution(H, pair, D)
        if not rep.passed:
            raise InvalidPair("%s is not a modular pair in involution: %s"
                              % (pair.label, rep.failures[:1]))
    return HopfCyclicModule(H, pair)


def bh(H, unchecked=False):
    """BH = ~H^(epsilon, 1)."""
    pair = ModularPair(counit_character(H), H.unit_element()
                       if H.one_word is None else H.one_word,
                       label="(epsilon, 1)")
    return build_hopf_cyclic(H, pair, unchecked=unchecked)


class PathSpace(CyclicModule):
    """
    EH, the path space of ~H^(delta, 1): level n = H^{(x)(n+1)}.  The
    cyclic operator t_n exists for cocommutative H with delta = epsilon.
    """

    offset = 1

    def __init__(self, H, delta=None, cyclic=False):
        super().__init__(H)
        self.H = H
        self.delta = delta or counit_character(H)
        self.is_cyclic = cyclic
        self.name = "EH(%s)" % H.name
        self._t = {}

    def face_word(self, i, n, key):
        H = self.H
        if i == n:
            d = self.delta(key[n])
            return {key[:n]: d} if d else {}
        return {key[:i] + (w,) + key[i + 2:]: c
                for w, c in H.mul_w(key[i], key[i + 1]).items()}

    def degen_word(self, i, n, key):
        return insert_at(key, i + 1, _unit_elem(self.H))

    def tau_word(self, n, key):
        if not self.is_cyclic:
            raise NotCocommutative("t_n needs a cocommutative Hopf algebra")
        if n == 0:
            return {key: self.field(1)}
        r = self._t.get(key)
        if r is not None:
            return r
        H = self.H
        one = self.field(1)
        # (h0 h1' ... hn') (x) S(h1'' ... hn'') (x) h1''' (x) ... (x) h_{n-1}'''
        states = {((key[0],), None, ()): one}
        for j in range(1, n + 1):
            legs = 2 if j == n else 3
            new = {}
            for (pw, mw, tail), c in states.items():
                for k, c1 in H.iterated_coproduct_word(key[j], legs).items():
                    for w1, c2 in H.mul_w(pw[0], k[0]).items():
                        mids = ({k[1]: one} if mw is None
                                else H.mul_w(mw, k[1]))
                        for w2, c3 in mids.items():
                            t2 = tail + ((k[2],) if legs == 3 else ())
                            lc_iadd(new, {((w1,), w2, t2): c * c1 * c2 * c3})
            states = new
        r = {}
        for (pw, mw, tail), c in states.items():
            for w, c1 in H.antipode_word(mw).items():
                lc_iadd(r, {(pw[0], w) + tail: c * c1})
        self._t[key] = r
        return r

    def is_degenerate(self, n, key):
        return self.H.one_word in key[1:]

    def contraction(self, n, x):
        """s(h0 (x) ... (x) hn) = 1 (x) h0 (x) ... (x) hn."""
        return lc_apply(lambda k: insert_at(k, 0, _unit_elem(self.H)), x)

    def augmentation(self, x):
        """EH_0 = H -> k via delta."""
        return self.delta.on({k[0]: c for k, c in x.items()})


def build_path_space(H, cyclic=None, delta=None):
    """EH; cyclic structure requested explicitly or when H is cocommutative."""
    if cyclic is None:
        cyclic = H.cocommutative and delta is None
    if cyclic and not H.cocommutative:
        raise NotCocommutative("%s is not cocommutative" % H.name)
    return PathSpace(H, delta=delta, cyclic=cyclic)


def check_contraction(E, n_max, D=2):
    """
    Extra degeneracy s(h) = 1 (x) h: delta_0 s = id, delta_i s = s delta_{i-1}
    (1 <= i <= n + 1), the augmentation step at level 0, and the chain
    homotopy form b s + s b = id in positive levels.
    """
    rep = CheckReport("path_space_contraction",
                      details={"n_max": n_max, "D": D})
    one = E.field(1)
    for n in range(n_max + 1):
        for key in E.spanning(n, D):
            x = {key: one}
            sx = E.contraction(n, x)
            rep.checked += 1
            if not lc_equal(E.face(0, n + 1, sx), x):
                rep.fail(identity="d0 s = id", n=n, witness=_wstr(E.A, key))
            for i in range(1, n + 2):
                lhs = E.face(i, n + 1, sx)
                if n == 0:
                    if i == 1:
                        a = E.augmentation(x)
                        rhs = lc_scale(as_level0(E), a)
                    else:
                        continue
                else:
                    rhs = E.contraction(n - 1, E.face(i - 1, n, x))
                rep.checked += 1
                if not lc_equal(lhs, rhs):
                    rep.fail(identity="d%d s = s d%d" % (i, i - 1), n=n,
                             witness=_wstr(E.A, key))
            if n >= 1:
                h = lc_sub(E.b(n + 1, sx), {})
                lc_iadd(h, E.contraction(n - 1, E.b(n, x)))
                rep.checked += 1
                if not lc_equal(h, x):
                    rep.fail(identity="b s + s b = id", n=n,
                             witness=_wstr(E.A, key))
    return rep


def as_level0(E):
    """The contraction of 1 in k: the unit of H at level 0."""
    return {(w,): c for w, c in _unit_elem(E.H).items()}


class AlgebraCyclicModule(CyclicModule):
    """C_*(A): level n = A^{(x)(n+1)}, tau the cyclic rotation."""

    offset = 1

    def __init__(self, A):
        super().__init__(A)
        self.name = "C(%s)" % A.name

    def face_word(self, i, n, key):
        A = self.A
        if i < n:
            return {key[:i] + (w,) + key[i + 2:]: c
                    for w, c in A.mul_w(key[i], key[i + 1]).items()}
        return {(w,) + key[1:n]: c
                for w, c in A.mul_w(key[n], key[0]).items()}

    def degen_word(self, i, n, key):
        return insert_at(key, i + 1, _unit_elem(self.A))

    def tau_word(self, n, key):
        return {key[-1:] + key[:-1]: self.field(1)}

    def is_degenerate(self, n, key):
        return self.A.one_word in key[1:]


def build_algebra_cyclic(A):
    return AlgebraCyclicModule(A)


# ---------------------------------------------------------------------------
# cocyclic modules

class CocyclicModule:
    """
    Cofaces coface_word(i, n, key): level n -> n + 1 for i = 0..n+1,
    codegeneracies codegen_word(i, n, key): level n -> n - 1 for
    i = 0..n-1, and tau_word(n, key).
    """

    kind = "cocyclic"
    is_cyclic = True
    offset = 0
    name = "cocyclic module"

    def __init__(self, H):
        self.H = H
        self.A = H
        self.field = H.field

    def nfactors(self, n):
        return n + self.offset

    def coface(self, i, n, x):
        return lc_apply(lambda k: self.coface_word(i, n, k), x)

    def codegen(self, i, n, x):
        return lc_apply(lambda k: self.codegen_word(i, n, k), x)

    def tau(self, n, x, power=1):
        for _ in range(power):
            x = lc_apply(lambda k: self.tau_word(n, k), x)
        return x

    def spanning(self, n, D):
        return words_upto(self.H, D, self.nfactors(n))

    def coboundary(self, n, x):
        out = {}
        for i in range(n + 2):
            lc_iadd(out, self.coface(i, n, x), self.field(-1) ** i)
        return out


def _delta_legs(H, h, legs):
    """Iterated coproduct as (keys, coef) pairs; legs >= 1."""
    return H.iterated_coproduct_word(h, legs).items()


class ConnesMoscoviciModule(CocyclicModule):
    """
    H_(delta, sigma) on levels H^{(x) n}: d_0 prepends 1, d_i applies the
    coproduct to h_i, d_{n+1} appends sigma, s_i applies epsilon to h_{i+1}
    and tau(h_1 .. h_n) = Delta^{n-1}(S~(h_1)) . (h_2 (x) .. (x) h_n (x) sigma).
    """

    def __init__(self, H, pair):
        super().__init__(H)
        self.pair = pair
        self.name = "CM%s(%s)" % (pair.label, H.name)
        self._tau = {}

    def coface_word(self, i, n, key):
        H = self.H
        if i == 0:
            return insert_at(key, 0, _unit_elem(H))
        if i == n + 1:
            return insert_at(key, n, self.pair.sigma_elem)
        return {key[:i - 1] + k + key[i:]: c
                for k, c in H.coproduct_word(key[i - 1]).items()}

    def codegen_word(self, i, n, key):
        e = self.H.counit_word(key[i])
        return {key[:i] + key[i + 1:]: e} if e else {}

    def tau_word(self, n, key):
        if n == 0:
            return {key: self.field(1)}
        r = self._tau.get(key)
        if r is not None:
            return r
        from .hopf import twisted_antipode_word
        H = self.H
        st = twisted_antipode_word(H, key[0], self.pair)
        right = {}
        rest = key[1:]
        for w, c in self.pair.sigma_elem.items():
            right[rest + (w,)] = c
        r = {}
        for w, c in st.items():
            for k, c1 in H.iterated_coproduct_word(w, n).items():
                for k2, c2 in right.items():
                    acc = {(): c * c1 * c2}
                    for a, b in zip(k, k2):
                        nxt = {}
                        for t, ct in acc.items():
                            for p, cp in H.mul_w(a, b).items():
                                lc_iadd(nxt, {t + (p,): ct * cp})
                        acc = nxt
                        if not acc:
                            break
                    lc_iadd(r, acc)
        self._tau[key] = r
        return r


def build_cm_cocyclic(H, pair=None):
    if pair is None:
        pair = ModularPair(counit_character(H), H.unit_element()
                           if H.one_word is None else H.one_word,
                           label="(epsilon, 1)")
    return ConnesMoscoviciModule(H, pair)


class CommutativeCocyclic(CocyclicModule):
    """
    Cocyclic structure on EH = H^{(x)(n+1)} for commutative H:
    d_i applies the coproduct to h_i (0 <= i <= n), d_{n+1} appends 1,
    s_i applies epsilon to h_{i + shift}, and
    tau(h_0 .. h_n) = h_0' (x) h_0'' S(h_1^(n)) h_2 (x) .. (x) h_0^(n+1) S(h_1').
    ``reverse`` flips the Sweedler order of h_1's legs.
    """

    offset = 1

    def __init__(self, H, shift=1, reverse=False):
        super().__init__(H)
        self.shift = shift
        self.reverse = reverse
        self.name = "EH^cocyclic(%s)" % H.name
        self._tau = {}

    def coface_word(self, i, n, key):
        H = self.H
        if i == n + 1:
            return insert_at(key, n + 1, _unit_elem(H))
        return {key[:i] + k + key[i + 1:]: c
                for k, c in H.coproduct_word(key[i]).items()}

    def codegen_word(self, i, n, key):
        j = i + self.shift
        e = self.H.counit_word(key[j])
        return {key[:j] + key[j + 1:]: e} if e else {}

    def tau_word(self, n, key):
        if n == 0:
            return {key: self.field(1)}
        r = self._tau.get(key)
        if r is not None:
            return r
        H = self.H
        one = self.field(1)
        r = {}
        h0, h1 = key[0], key[1]
        rest = key[2:]
        for k0, c0 in H.iterated_coproduct_word(h0, n + 1).items():
            for k1, c1 in H.iterated_coproduct_word(h1, n).items():
                legs = k1 if self.reverse else tuple(reversed(k1))
                # factor j (1..n) gets h0^(j+1) S(legs[j-1]) h_{j+1}
                acc = {(k0[0],): c0 * c1}
                for j in range(1, n + 1):
                    f = H.mul({k0[j]: one}, H.antipode_word(legs[j - 1]))
                    if j < n:
                        f = H.mul(f, {rest[j - 1]: one})
                    nxt = {}
                    for t, ct in acc.items():
                        for w, cw in f.items():
                            lc_iadd(nxt, {t + (w,): ct * cw})
                    acc = nxt
                    if not acc:
                        break
                lc_iadd(r, acc)
        self._tau[key] = r
        return r


def build_commutative_cocyclic(H, shift=1, reverse=False):
    if not H.commutative:
        raise NotCommutative("%s is not commutative" % H.name)
    return CommutativeCocyclic(H, shift=shift, reverse=reverse)


# ---------------------------------------------------------------------------
# identity verifiers

def _wstr(A, key):
    def one(w):
        try:
            return A.word_str(w)
        except (IndexError, TypeError, KeyError):
            return str(w)
    return " (x) ".join(one(w) for w in key) if key else "1"


def _check(rep, lhs, rhs, identity, n, A, key):
    rep.checked += 1
    if not lc_equal(lhs, rhs):
        rep.fail(identity=identity, n=n, witness=_wstr(A, key))
        rep.details.setdefault("failed_identities", [])
        if identity not in rep.details["failed_identities"]:
            rep.details["failed_identities"].append(identity)
        return False
    return True


def verify_cyclic_axioms(m, n_max, D=2, cyclic=None, keys=None):
    """
    Simplicial (or cosimplicial) identities and, when the module is
    cyclic, the relations tying tau to the faces and degeneracies, on all
    spanning words of levels 0..n_max.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if cyclic is None:
        cyclic = m.is_cyclic
    if m.kind == "cocyclic":
        return _verify_cocyclic(m, n_max, D, cyclic, keys)
    rep = CheckReport("cyclic_axioms", details={"module": m.name,
                                                "n_max": n_max, "D": D})
    one = m.field(1)
    A = m.A
    for n in range(n_max + 1):
        for key in (keys(n) if keys else m.spanning(n, D)):
            x = {key: one}
            F = {i: m.face(i, n, x) for i in range(n + 1)} if n else {}
            G = {j: m.degen(j, n, x) for j in range(n + 1)}
            # simplicial identities
            for j in range(n + 1) if n >= 2 else ():
                for i in range(j):
                    _check(rep, m.face(i, n - 1, F[j]),
                           m.face(j - 1, n - 1, m.face(i, n, x)),
                           "d%d d%d = d%d d%d" % (i, j, j - 1, i), n, A, key)
            for j in range(n + 1):
                for i in range(j + 1):
                    _check(rep, m.degen(i, n + 1, G[j]),
                           m.degen(j + 1, n + 1, G[i]),
                           "s%d s%d = s%d s%d" % (i, j, j + 1, i), n, A, key)
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = m.face(i, n + 1, G[j])
                    if i < j:
                        rhs = m.degen(j - 1, n - 1, F[i])
                    elif i in (j, j + 1):
                        rhs = x
                    else:
                        rhs = m.degen(j, n - 1, F[i - 1])
                    _check(rep, lhs, rhs, "d%d s%d" % (i, j), n, A, key)
            if not cyclic:
                continue
            T = m.tau(n, x)
            _check(rep, m.tau(n, T, power=n), x, "tau^(n+1) = id",
                   n, A, key)
            for i in range(1, n + 1):
                _check(rep, m.face(i, n, T), m.tau(n - 1, F[i - 1]),
                       "d%d tau = tau d%d" % (i, i - 1), n, A, key)
            if n >= 1:
                _check(rep, m.face(0, n, T), F[n], "d0 tau = d_n",
                       n, A, key)
            for i in range(1, n + 1):
                _check(rep, m.degen(i, n, T), m.tau(n + 1, G[i - 1]),
                       "s%d tau = tau s%d" % (i, i - 1), n, A, key)
            _check(rep, m.degen(0, n, T), m.tau(n + 1, G[n], power=2),
                   "s0 tau = tau^2 s_n", n, A, key)
    return rep


def _verify_cocyclic(m, n_max, D, cyclic, keys=None):
    rep = CheckReport("cocyclic_axioms", details={"module": m.name,
                                                  "n_max": n_max, "D": D})
    one = m.field(1)
    A = m.A
    for n in range(n_max + 1):
        for key in (keys(n) if keys else m.spanning(n, D)):
            x = {key: one}
            d = {i: m.coface(i, n, x) for i in range(n + 2)}
            s = {i: m.codegen(i, n, x) for i in range(n)}
            for j in range(n + 3):
                for i in range(min(j, n + 2)):
                    if j - 1 > n + 1:
                        continue
                    _check(rep, m.coface(j, n + 1, d[i]),
                           m.coface(i, n + 1, d[j - 1]),
                           "d%d d%d = d%d d%d" % (j, i, i, j - 1), n, A, key)
            for j in range(n - 1):
                for i in range(j + 1):
                    _check(rep, m.codegen(j, n - 1, s[i]),
                           m.codegen(i, n - 1, s[j + 1]),
                           "s%d s%d = s%d s%d" % (j, i, i, j + 1), n, A, key)
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = m.codegen(j, n + 1, d[i])
                    if i < j:
                        rhs = m.coface(i, n - 1, s[j - 1])
                    elif i in (j, j + 1):
                        rhs = x
                    else:
                        rhs = m.coface(i - 1, n - 1, s[j])
                    _check(rep, lhs, rhs, "s%d d%d" % (j, i), n, A, key)
            if not cyclic:
                continue
            T = m.tau(n, x)
            _check(rep, m.tau(n, T, power=n), x, "tau^(n+1) = id", n, A, key)
            for i in range(1, n + 2):
                _check(rep, m.tau(n + 1, d[i]), m.coface(i - 1, n, T),
                       "tau d%d = d%d tau" % (i, i - 1), n, A, key)
            _check(rep, m.tau(n + 1, d[0]), d[n + 1], "tau d0 = d_(n+1)",
                   n, A, key)
            for i in range(1, n):
                _check(rep, m.tau(n - 1, s[i]), m.codegen(i - 1, n, T),
                       "tau s%d = s%d tau" % (i, i - 1), n, A, key)
            if n >= 1:
                _check(rep, m.tau(n - 1, s[0]),
                       m.codegen(n - 1, n, m.tau(n, T)),
                       "tau s0 = s_(n-1) tau^2", n, A, key)
    return rep


# ---------------------------------------------------------------------------
# maps

class CyclicMap:
    """Per-level linear map between two (co)cyclic modules."""

    def __init__(self, source, target, word_map, name="map",
                 level_shift=0):
        self.source = source
        self.target = target
        self._f = word_map
        self.name = name
        self._cache = {}

    def word(self, n, key):
        r = self._cache.get((n, key))
        if r is None:
            r = self._f(n, key)
            self._cache[(n, key)] = r
        return r

    def __call__(self, n, x):
        return lc_apply(lambda k: self.word(n, k), x)


def verify_cyclic_map(f, n_max, D=2, with_tau=True, keys=None):
    """f commutes with every operator on spanning words of the source."""
    src, tgt = f.source, f.target
    rep = CheckReport("cyclic_map", details={"map": f.name, "n_max": n_max,
                                             "D": D})
    one = src.field(1)
    A = src.A
    co = src.kind == "cocyclic"
    for n in range(n_max + 1):
        for key in (keys(n) if keys else src.spanning(n, D)):
            x = {key: one}
            fx = f(n, x)
            if co:
                for i in range(n + 2):
                    _check(rep, f(n + 1, src.coface(i, n, x)),
                           tgt.coface(i, n, fx), "f d%d = d%d f" % (i, i),
                           n, A, key)
                for i in range(n):
                    _check(rep, f(n - 1, src.codegen(i, n, x)),
                           tgt.codegen(i, n, fx), "f s%d = s%d f" % (i, i),
                           n, A, key)
            else:
                for i in range(n + 1) if n else ():
                    _check(rep, f(n - 1, src.face(i, n, x)),
                           tgt.face(i, n, fx), "f d%d = d%d f" % (i, i),
                           n, A, key)
                for i in range(n + 1):
                    _check(rep, f(n + 1, src.degen(i, n, x)),
                           tgt.degen(i, n, fx), "f s%d = s%d f" % (i, i),
                           n, A, key)
            if with_tau:
                _check(rep, f(n, src.tau(n, x)), tgt.tau(n, fx),
                       "f tau = tau f", n, A, key)
    return rep


def map_gamma(trace, coaction, pair, check=True, D=2):
    """
    gamma: C_*(A) -> ~H^(delta, sigma),
    a_0 (x) .. (x) a_n -> sum Tr(a_0 a_1^(0) .. a_n^(0)) a_1^(1) (x) .. (x) a_n^(1).
    """
    from .hopf import check_trace_properties
    A, H = coaction.A, coaction.H
    if check:
        rep = check_trace_properties(trace, coaction, pair, D)
        if not rep.passed:
            raise TraceAxiomsFail("%s fails: %s" % (trace.name,
                                                    rep.failures[:1]))
    src = AlgebraCyclicModule(A)
    tgt = HopfCyclicModule(H, pair)

    def f(n, key):
        states = {((key[0],), ()): A.field(1)}
        for a in key[1:]:
            new = {}
            for (pw, tail), c in states.items():
                for (a0, h), c1 in coaction.beta_word(a).items():
                    for w, c2 in A.mul_w(pw[0], a0).items():
                        lc_iadd(new, {((w,), tail + (h,)): c * c1 * c2})
            states = new
        out = {}
        for (pw, tail), c in states.items():
            t = trace.word(pw[0])
            if t:
                lc_iadd(out, {tail: c * t})
        return out

    return CyclicMap(src, tgt, f, name="gamma")


def map_theta(H, sigma, check=True, D=2):
    """
    theta: ~H^(epsilon, sigma) -> C_*(H),
    h_1 (x) .. (x) h_n -> S_sigma(h_1' .. h_n') (x) h_1'' (x) .. (x) h_n''.
    """
    eps = counit_character(H)
    pair = ModularPair(eps, sigma)
    sig = pair.sigma_elem
    one = H.field(1)
    if check:
        rep = CheckReport("S_sigma_involution")
        for w in H.basis_upto(D):
            rep.checked += 1
            s2 = H.mul(sig, H.antipode(H.mul(sig, H.antipode_word(w))))
            if not lc_equal(s2, {w: one}):
                raise InvolutionFails("S_sigma^2 != id at %s"
                                      % H.word_str(w))
    src = HopfCyclicModule(H, pair)
    tgt = AlgebraCyclicModule(H)

    def f(n, key):
        states = {(None, ()): one}
        for h in key:
            new = {}
            for (p, tail), c in states.items():
                for (a, b), c1 in H.coproduct_word(h).items():
                    prods = {a: one} if p is None else H.mul_w(p, a)
                    for w, c2 in prods.items():
                        lc_iadd(new, {(w, tail + (b,)): c * c1 * c2})
            states = new
        out = {}
        for (p, tail), c in states.items():
            base = H.unit_element() if p is None else H.antipode_word(p)
            for w, c1 in H.mul(sig, base).items():
                lc_iadd(out, {(w,) + tail: c * c1})
        return out

    return CyclicMap(src, tgt, f, name="theta")


def indicator_trace(H, sigma):
    """Tr(x) = 1 on the basis word sigma and 0 on the other basis words."""
    from .hopf import TraceFunctional
    return TraceFunctional(H, lambda w: 1 if w == sigma else 0,
                           name="indicator(%s)" % H.word_str(sigma))


def check_gamma_theta(H, sigma, n_max, D=0, trace=None):
    """
    gamma theta = Tr(sigma) id on the levels of ~H^(epsilon, sigma), with
    gamma built from the comultiplication coaction of H on itself.
    """
    from .hopf import self_coaction
    trace = trace or indicator_trace(H, sigma)
    pair = ModularPair(counit_character(H), sigma)
    th = map_theta(H, sigma, D=max(D, 1))
    ga = map_gamma(trace, self_coaction(H), pair, D=max(D, 1))
    t_sigma = trace.on(pair.sigma_elem)
    rep = CheckReport("gamma_theta", details={"instance": H.name,
                                              "sigma": H.word_str(sigma),
                                              "Tr_sigma": t_sigma,
                                              "n_max": n_max, "D": D})
    one = H.field(1)
    for n in range(n_max + 1):
        for key in th.source.spanning(n, D):
            rep.checked += 1
            y = ga(n, th(n, {key: one}))
            if not lc_equal(y, {key: t_sigma} if t_sigma else {}):
                rep.fail(n=n, witness=_wstr(H, key), value=y)
    return rep


def projection_pi(H, E=None, B=None):
    """pi: EH -> BH, h_0 (x) .. (x) h_n -> epsilon(h_0) h_1 (x) .. (x) h_n."""
    E = E or build_path_space(H)
    B = B or bh(H, unchecked=True)

    def f(n, key):
        e = H.counit_word(key[0])
        return {key[1:]: e} if e else {}

    return CyclicMap(E, B, f, name="pi")


def psi_map(H, src=None, tgt=None):
    """psi: CM cocyclic module (epsilon, 1) -> EH, h -> 1 (x) h."""
    src = src or build_cm_cocyclic(H)
    tgt = tgt or build_commutative_cocyclic(H)
    return CyclicMap(src, tgt,
                     lambda n, key: insert_at(key, 0, _unit_elem(H)),
                     name="psi")


# ---------------------------------------------------------------------------
# Mac Lane isomorphism

class Bimodule:
    """H-bimodule given by left and right actions on basis words of M."""

    def __init__(self, H, words, left, right, word_str=str, name="M"):
        self.H = H
        self.field = H.field
        self.words = list(words)
        self._left = left
        self._right = right
        self.word_str = word_str
        self.name = name

    def left(self, h, m):
        return self._left(h, m)

    def right(self, m, h):
        return self._right(m, h)

    def right_elem(self, m, x):
        return lc_apply(lambda h: self.right(m, h), x)

    def tilde(self, h, m):
        """h > m = h'' m S(h')."""
        out = {}
        for (a, b), c in self.H.coproduct_word(h).items():
            for m2, c1 in self.left(b, m).items():
                lc_iadd(out, self.right_elem(m2, self.H.antipode_word(a)),
                        c * c1)
        return out


def regular_bimodule(H):
    return Bimodule(H, H.basis_upto(2), lambda h, m: H.mul_w(h, m),
                    lambda m, h: H.mul_w(m, h), word_str=H.word_str,
                    name=H.name)


def character_bimodule(H, left=None, right=None):
    """k with left action by one character and right action by another."""
    left = left or counit_character(H)
    right = right or counit_character(H)
    return Bimodule(H, ["1"], lambda h, m: {m: left(h)} if left(h) else {},
                    lambda m, h: {m: right(h)} if right(h) else {},
                    word_str=lambda m: "1", name="k")


class HochschildWithCoefficients(CyclicModule):
    """C_n(H, M) = M (x) H^{(x) n} with the Hochschild faces."""

    offset = 1
    is_cyclic = False

    def __init__(self, H, M):
        super().__init__(H)
        self.H, self.M = H, M
        self.name = "C(%s, %s)" % (H.name, M.name)

    def face_word(self, i, n, key):
        H, M = self.H, self.M
        if i == 0:
            return {(m,) + key[2:]: c
                    for m, c in M.right(key[0], key[1]).items()}
        if i == n:
            return {(m,) + key[1:n]: c
                    for m, c in M.left(key[n], key[0]).items()}
        return {key[:i] + (w,) + key[i + 2:]: c
                for w, c in H.mul_w(key[i], key[i + 1]).items()}

    def degen_word(self, i, n, key):
        return insert_at(key, i + 1, _unit_elem(self.H))

    def spanning(self, n, D):
        hs = words_upto(self.H, D, n)
        return [(m,) + k for m in self.M.words for k in hs]


class TwistedCoefficients(CyclicModule):
    """C_n(H; M~) = H^{(x) n} (x) M~ with the faces of the Mac Lane complex."""

    offset = 1
    is_cyclic = False

    def __init__(self, H, M):
        super().__init__(H)
        self.H, self.M = H, M
        self.name = "C(%s; %s~)" % (H.name, M.name)

    def face_word(self, i, n, key):
        H, M = self.H, self.M
        if i == 0:
            e = H.counit_word(key[0])
            return {key[1:]: e} if e else {}
        if i == n:
            return {key[:n - 1] + (m,): c
                    for m, c in M.tilde(key[n - 1], key[n]).items()}
        return {key[:i - 1] + (w,) + key[i + 1:]: c
                for w, c in H.mul_w(key[i - 1], key[i]).items()}

    def degen_word(self, i, n, key):
        return insert_at(key, i, _unit_elem(self.H))

    def spanning(self, n, D):
        hs = words_upto(self.H, D, n)
        return [k + (m,) for k in hs for m in self.M.words]


def maclane_theta(H, M):
    """
    theta(m (x) h_1 .. h_n) = h_1'' (x) .. (x) h_n'' (x) m h_1' .. h_n'
    and its inverse h_1 .. h_n (x) m -> m S(h_1' .. h_n') (x) h_1'' .. h_n''.
    """
    src = HochschildWithCoefficients(H, M)
    tgt = TwistedCoefficients(H, M)
    one = H.field(1)

    def expand(hs):
        states = {(None, ()): one}
        for h in hs:
            new = {}
            for (p, tail), c in states.items():
                for (a, b), c1 in H.coproduct_word(h).items():
                    prods = {a: one} if p is None else H.mul_w(p, a)
                    for w, c2 in prods.items():
                        lc_iadd(new, {(w, tail + (b,)): c * c1 * c2})
            states = new
        return states

    def fwd(n, key):
        m, hs = key[0], key[1:]
        out = {}
        for (p, tail), c in expand(hs).items():
            ms = {m: one} if p is None else M.right(m, p)
            for m2, c1 in ms.items():
                lc_iadd(out, {tail + (m2,): c * c1})
        return out

    def inv(n, key):
        hs, m = key[:-1], key[-1]
        out = {}
        for (p, tail), c in expand(hs).items():
            ms = ({m: one} if p is None
                  else M.right_elem(m, H.antipode_word(p)))
            for m2, c1 in ms.items():
                lc_iadd(out, {(m2,) + tail: c * c1})
        return out

    return (CyclicMap(src, tgt, fwd, name="maclane_theta"),
            CyclicMap(tgt, src, inv, name="maclane_theta_inv"))


def check_inverse_pair(f, g, n_max, D=2):
    """g f = id on the source of f and f g = id on its target."""
    rep = CheckReport("inverse_pair", details={"maps": [f.name, g.name],
                                               "n_max": n_max, "D": D})
    one = f.source.field(1)
    for n in range(n_max + 1):
        for mod, a, b in ((f.source, f, g), (f.target, g, f)):
            for key in mod.spanning(n, D):
                x = {key: one}
                rep.checked += 1
                if not lc_equal(b(n, a(n, x)), x):
                    rep.fail(composite="%s o %s" % (b.name, a.name), n=n,
                             witness=_wstr(mod.A, key))
    return rep
