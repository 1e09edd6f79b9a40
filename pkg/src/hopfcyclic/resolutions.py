"""
Free bimodule resolutions of Hopf algebras and their base changes.

A free H^e-module M_n (H^e = H (x) H^op) has named generators.  Elements
are dicts (generator, a, b) -> scalar meaning (a (x) b) . generator, and
H^e multiplies as (a (x) b)(a' (x) b') = aa' (x) b'b.  Differentials are
stored on generators as d_n: M_n -> M_{n-1} and extended H^e-linearly.
The augmentation M_0 = H^e -> H is mu(a (x) b) = ab.
"""

import json
import os
import re
from itertools import product

from .fields import parse_scalar
from .hopf import HopfError, lc_iadd, lc_equal
from .homology import ChainComplex
from .instances import build_instance
from .linalg import SparseMatrix
from .report import CheckReport

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


class ResolutionError(HopfError):
    pass


class UnknownGeneratorName(ResolutionError):
    pass


# ---------------------------------------------------------------------------
# H^e arithmetic

def he_act(H, coef, elem):
    """coef . elem for coef a dict (a, b) -> scalar in H^e."""
    out = {}
    for (a, b), c in coef.items():
        for (g, a2, b2), c2 in elem.items():
            for wa, ca in H.mul_w(a, a2).items():
                for wb, cb in H.mul_w(b2, b).items():
                    lc_iadd(out, {(g, wa, wb): c * c2 * ca * cb})
    return out


def he_mul(H, x, y):
    out = {}
    for (a, b), c in x.items():
        for (a2, b2), c2 in y.items():
            for wa, ca in H.mul_w(a, a2).items():
                for wb, cb in H.mul_w(b2, b).items():
                    lc_iadd(out, {(wa, wb): c * c2 * ca * cb})
    return out


def parse_h(H, text):
    """A word like 's^-1 x' as an element of H."""
    if text.strip() == "1":
        return H.one()
    gens = H.presentation.parse_word(text)
    return H.prod_words([H.gen_word(g) for g in gens])


def format_module(H, elem):
    if not elem:
        return "0"
    return " + ".join("(%s)*(%s (x) %s).%s" % (c, H.word_str(a),
                                               H.word_str(b), g)
                      for (g, a, b), c in sorted(elem.items(), key=str))


# ---------------------------------------------------------------------------
# resolution data

class Resolution:
    """
    gens[n]: ordered generator names of M_n; diffs[n][g]: d_n(g) as a
    module element of M_{n-1}.  ``errata`` lists the corrections applied.
    """

    def __init__(self, H, name, gens, diffs, errata=None, printed_index=None,
                 complete=False):
        self.H = H
        # complete: M_n = 0 above the top degree; otherwise truncated there
        self.complete = complete
        self.name = name
        self.gens = {n: list(v) for n, v in gens.items()}
        self.diffs = diffs
        self.errata = list(errata or [])
        self.printed_index = printed_index or {}
        self.N = max(self.gens)

    def rank(self, n):
        return len(self.gens.get(n, ()))

    def ranks(self):
        return [self.rank(n) for n in range(self.N + 1)]

    def basis_elem(self, g):
        w = self.H.one_word
        return {(g, w, w): self.H.one_scalar}

    def d(self, n, elem):
        """d_n applied to an element of M_n."""
        out = {}
        if n <= 0 or n > self.N:
            return out
        H = self.H
        for (g, a, b), c in elem.items():
            img = self.diffs[n][g]
            lc_iadd(out, he_act(H, {(a, b): c}, img))
        return out

    def mu(self, elem):
        out = {}
        for (g, a, b), c in elem.items():
            lc_iadd(out, self.H.mul_w(a, b), c)
        return out


def _term(H, text, field):
    parts = [p.strip() for p in text.split("|")]
    if len(parts) != 4:
        raise ResolutionError("bad term %r" % text)
    c, a, b, tgt = parts
    coef = parse_scalar(c, field)
    out = {}
    for wa, ca in parse_h(H, a).items():
        for wb, cb in parse_h(H, b).items():
            lc_iadd(out, {(wa, wb): coef * ca * cb})
    return out, tgt


def _resolve_name(name, data):
    ident = data.get("identifications", {})
    name = ident.get(name, name)
    alias = data.get("aliases", {}).get(name)
    if alias:
        return alias[1], alias[0]
    return name, "1"


def _fill(template, p):
    return (template.replace("(P0)", "(%d)" % p)
            .replace("(P1)", "(%d)" % (p + 1))
            .replace("(P2)", "(%d)" % (p + 2)))


def printed_tables(data, N):
    """
    Degree n -> {generator: [term strings]} for n = 1..N with families
    instantiated, plus the generator order per degree.
    """
    gens = {int(k): list(v) for k, v in data["generators"].items()}
    tables = {int(k): {g: list(t) for g, t in v.items()}
              for k, v in data["differentials"].items()}
    origin = {n: {g: ("explicit", n, g) for g in tables[n]} for n in tables}
    for fam in data.get("families", []):
        step, off = re.fullmatch(r"(\d+)p\+(\d+)", fam["degree"]).groups()
        step, off = int(step), int(off)
        p = fam["p_min"]
        while step * p + off <= N:
            n = step * p + off
            ident = data.get("identifications", {})
            gens[n] = [ident.get(_fill(g, p), _fill(g, p))
                       for g in fam["generators"]]
            tables[n] = {}
            origin[n] = {}
            for g, terms in fam["images"].items():
                name = ident.get(_fill(g, p), _fill(g, p))
                tables[n][name] = [_fill(t, p) for t in terms]
                origin[n][name] = ("family", fam["label"], g)
            p += 1
    n_top = min(N, max(tables))
    return ({n: gens[n] for n in range(n_top + 1)},
            {n: tables[n] for n in range(1, n_top + 1)},
            {n: origin[n] for n in range(1, n_top + 1)})


def apply_errata(tables, origin, errata):
    """
    Replace printed terms.  An erratum targets (family label or explicit
    degree, generator template, term index) and gives the corrected term
    template; family errata apply at every p.
    """
    applied = []
    for e in errata:
        hit = False
        for n, tab in tables.items():
            for g, terms in tab.items():
                o = origin[n][g]
                if e["where"] == "family":
                    match = o[0] == "family" and o[1] == e["label"] \
                        and o[2] == e["generator"]
                else:
                    match = o[0] == "explicit" and o[1] == e["degree"] \
                        and o[2] == e["generator"]
                if not match:
                    continue
                i = e["term"]
                if e["where"] == "family":
                    p = _family_p(n, e)
                    printed, corrected = _fill(e["printed"], p), \
                        _fill(e["corrected"], p)
                else:
                    printed, corrected = e["printed"], e["corrected"]
                if terms[i] != printed:
                    raise ResolutionError("erratum %s does not match %r"
                                          % (e["id"], terms[i]))
                terms[i] = corrected
                hit = True
        if hit:
            applied.append(e)
    return applied


def _family_p(n, e):
    step, off = re.fullmatch(r"(\d+)p\+(\d+)", e["degree_pattern"]).groups()
    return (n - int(off)) // int(step)


def load_errata(name):
    path = os.path.join(DATA_DIR, "resolution_errata.json")
    with open(path) as fh:
        data = json.load(fh)
    return [e for e in data["errata"] if e["resolution"] == name]


def read_resolution_data(name):
    path = os.path.join(DATA_DIR, "%s_resolution.json" % name)
    if not os.path.exists(path):
        raise ResolutionError("no resolution named %r" % name)
    with open(path) as fh:
        return json.load(fh)


def load_resolution(name, cap=None, H=None, errata=True):
    """
    Resolution shipped as data: 'uqsl2' (degrees 0..3) or 'aslq2'
    (periodic families, truncated at degree ``cap``, default 8).
    errata=False gives the transcription as printed.
    """
    data = read_resolution_data(name)
    return build_resolution(data, cap, H, load_errata(name) if errata else [])


def build_resolution(data, cap=None, H=None, errata=()):
    if H is None:
        H = build_instance(data["instance"], check_pairs=False)
    N = cap if cap is not None else (8 if data.get("families") else
                                     max(int(k) for k in data["generators"]))
    gens, tables, origin = printed_tables(data, N)
    applied = apply_errata(tables, origin, errata)
    diffs = {}
    field = H.field
    for n, tab in tables.items():
        diffs[n] = {}
        known = set(gens[n - 1])
        for g in gens[n]:
            if g not in tab:
                raise UnknownGeneratorName("%s has no image in degree %d"
                                           % (g, n))
            img = {}
            for t in tab[g]:
                coef, tgt = _term(H, t, field)
                tgt, sign = _resolve_name(tgt, data)
                if tgt not in known:
                    raise UnknownGeneratorName("%s is not a generator of "
                                               "M_%d" % (tgt, n - 1))
                lc_iadd(img, {(tgt, a, b): c for (a, b), c in coef.items()},
                        parse_scalar(sign, field))
            diffs[n][g] = img
    top = max(int(k) for k in data["generators"])
    r = Resolution(H, data["name"], gens, diffs, applied,
                   printed_index=data.get("index_note"),
                   complete=not data.get("families") and N >= top)
    r.tables = tables
    r.data = data
    return r


# ---------------------------------------------------------------------------
# verification

def d_squared_residuals(r):
    """(n, generator) -> d_{n-1} d_n (g), nonzero entries only."""
    out = {}
    for n in range(2, r.N + 1):
        for g in r.gens[n]:
            res = r.d(n - 1, r.diffs[n][g])
            if res:
                out[(n, g)] = res
    return out


def verify_resolution(r):
    rep = CheckReport("resolution_d_squared",
                      details={"resolution": r.name, "ranks": r.ranks(),
                               "errata_applied": [e["id"] for e in r.errata]})
    for g in r.gens.get(1, ()):
        rep.checked += 1
        m = r.mu(r.diffs[1][g])
        if m:
            rep.fail(identity="mu d_1 = 0", degree=1, generator=g,
                     residual=r.H.format(m))
    res = d_squared_residuals(r)
    for n in range(2, r.N + 1):
        for g in r.gens[n]:
            rep.checked += 1
            if (n, g) in res:
                rep.fail(identity="d_%d d_%d = 0" % (n - 1, n), degree=n,
                         generator=g,
                         residual=format_module(r.H, res[(n, g)]))
    return rep


# ---------------------------------------------------------------------------
# base change along a pair of characters

def base_change_complex(r, left, right, swap=False):
    """
    k (x)_{H^e} M_*: the coefficient a (x) b of a generator becomes
    left(a) right(b).  swap=True exchanges the two characters.
    """
    if swap:
        left, right = right, left
    H = r.H
    dims = r.ranks()
    diffs = {}
    for n in range(1, r.N + 1):
        idx = {g: i for i, g in enumerate(r.gens[n - 1])}
        cols = []
        for g in r.gens[n]:
            col = {}
            for (t, a, b), c in r.diffs[n][g].items():
                v = c * left.word(a) * right.word(b)
                if v:
                    lc_iadd(col, {idx[t]: v})
            cols.append(col)
        diffs[n] = SparseMatrix(dims[n - 1], dims[n], cols)
    labels = {n: list(r.gens[n]) for n in r.gens}
    return ChainComplex(H.field, dims, diffs, labels=labels)


def base_change_homology(r, left, right, n_max=None, swap=False):
    """
    Homology of the base-changed complex in degrees 0..n_max with
    representatives written on generator names.  A complete resolution
    gives 0 above its top degree; a truncated one is exact only below
    its cap, so asking for the cap degree or beyond raises.
    """
    C = base_change_complex(r, left, right, swap)
    valid = r.N if r.complete else r.N - 1
    if n_max is None:
        n_max = valid
    if n_max > valid and not r.complete:
        raise ResolutionError("degree %d needs a truncation cap above %d"
                              % (n_max, r.N))
    dims, reps = [], {}
    for n in range(n_max + 1):
        if n > r.N:
            dims.append(0)
            reps[n] = []
            continue
        h = C.homology(n, representatives=True)
        dims.append(h.dimension)
        names = r.gens[n]
        reps[n] = [{names[i]: c for i, c in sorted(v.items())}
                   for v in h.representatives]
    return {"dims": dims, "representatives": reps, "complex": C,
            "matrices": {n: C.diffs[n] for n in C.diffs}}


# ---------------------------------------------------------------------------
# the contracting homotopy of the U_q(sl2) resolution

def phi(H, a, b, n, ca=1, cb=1):
    """
    phi(a, b, n) = sum_{i<n} (ca a)^{n-1-i} (x) (cb b)^i in H^e for words
    a, b; phi(a, b, n) = 0 for n <= 0.
    """
    out = {}
    F = H.field
    for i in range(n):
        wa = H.prod_words([a] * (n - 1 - i))
        wb = H.prod_words([b] * i)
        c = F(ca) ** (n - 1 - i) * F(cb) ** i
        for x, cx in wa.items():
            for y, cy in wb.items():
                lc_iadd(out, {(x, y): c * cx * cy})
    return out


def qint(v, n):
    """The q-integer 1 + v + ... + v^(n-1)."""
    return sum((v ** j for j in range(n)), v * 0)


def omega(p):
    return 1 if p >= 0 else 0


class UqHomotopy:
    """
    S_{-1}: H -> M_0 and S_n: M_n -> M_{n+1} on s^l x^m y^n (x) b . e,
    extended linearly.  Every S_n is right H-linear, so the factor 1 (x) b
    multiplies the whole image, the e_s terms of S_0 included.
    """

    def __init__(self, r, printed=False):
        self.r = r
        self.printed = printed
        H = self.H = r.H
        self.F = H.field
        self.q = H.q
        self.one = H.one_word

    def t(self, a, b, c=1):
        return {(a, b): self.F(c)}

    def prod(self, *xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = he_mul(self.H, acc, x)
        return acc

    def s_minus1(self, h):
        o = self.one
        return {("1", o, w): c for w, c in h.items()}

    def _base(self, n, g, l, m, k):
        """S_n(s^l x^m y^k (x) 1 . g)."""
        H, q, o, F, t = self.H, self.q, self.one, self.F, self.t
        s, si, x, y = (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1)
        c = (q - q ** -1) ** -1
        out = {}

        def add(coef, gen, scale=1):
            lc_iadd(out, {(gen, a, b): v for (a, b), v in coef.items()},
                    F(scale))

        if n == 0:
            add(self.prod(t((l, m, 0), o), phi(H, y, y, k)), "e_y")
            add(self.prod(t((l, 0, 0), (0, 0, k)), phi(H, x, x, m)), "e_x")
            add(self.prod(t(o, (0, m, k)), phi(H, s, s, l)), "e_s", omega(l))
            add(self.prod(t(o, (0, m, k)), phi(H, si, si, -l), t(si, si)),
                "e_s", omega(l) - 1)
        elif n == 1 and g == "e_x":
            add(self.prod(t((l, m, 0), o), phi(H, y, y, k)), "e_x^e_y")
            if self.printed:
                if k >= 1:
                    f = (1 - q ** (2 * k)) * c / (1 - q ** 2)
                    add(self.prod(t((l, 0, 0), (0, 0, k - 1)),
                                  phi(H, x, x, m),
                                  lc_add2(t(si, si), t(o, o, q ** -2))),
                        "e_x^e_s", f)
                add(self.prod(t((l, m, 0), o), phi(H, y, y, k - 1),
                              lc_add2(t(si, si), t(o, o, q ** 2))),
                    "e_y^e_s", c)
            else:
                if k >= 1:
                    f = qint(q ** 2, k) * c * q ** -2
                    add(self.prod(t((l, 0, 0), (0, 0, k - 1)),
                                  lc_add2(t(si, si, q ** (2 * m - 2 * k + 2)),
                                          t(o, o)),
                                  phi(H, x, x, m, 1, q ** -2)),
                        "e_x^e_s", f)
                for i in range(k - 1):
                    fac = lc_add2(t(si, si, qint(q ** -2, i + 1)),
                                  t(o, o, q ** 2 * qint(q ** 2, i + 1)))
                    add(self.prod(t((l, m, k - 2 - i), (0, 0, i)), fac),
                        "e_y^e_s", c)
        elif n == 1 and g == "e_s":
            sign = 1 if self.printed else -1
            add(self.prod(t((l, m, 0), o), phi(H, y, y, k, 1, q ** 2)),
                "e_y^e_s", sign * q ** 2)
            add(self.prod(t((l, 0, 0), (0, 0, k)),
                          phi(H, x, x, m, 1, q ** -2)),
                "e_x^e_s", sign * q ** (2 * (k - 1)))
        elif n == 2 and g == "e_x^e_s":
            add(self.prod(t((l, m, 0), o), phi(H, y, y, k, 1, q ** 2)),
                "e_x^e_y^e_s")
        return out

    def S(self, n, elem):
        """S_n on an element of M_n; S_n = 0 for n >= 3."""
        H = self.H
        out = {}
        if n >= 3:
            return out
        for (g, a, b), c in elem.items():
            base = self._base(n, g, *a)
            lc_iadd(out, he_act(H, self.t(self.one, b), base), c)
        return out

    def check_at(self, n, xi):
        """(S d + d S)(xi) - xi for xi in M_n."""
        r = self.r
        if n == 0:
            lhs = self.s_minus1(r.mu(xi))
        else:
            lhs = self.S(n - 1, r.d(n, xi))
        lc_iadd(lhs, r.d(n + 1, self.S(n, xi)))
        lc_iadd(lhs, xi, self.F(-1))
        return lhs


def lc_add2(a, b):
    out = dict(a)
    lc_iadd(out, b)
    return out


def verify_homotopy_uqsl2(r, L=2, Dg=2, right_words=None, printed=False):
    """
    Checks S d + d S = id on s^l x^m y^n (x) b . e for every generator e,
    |l| <= L, m, n <= Dg and b in ``right_words`` (default 1, s^-1, x, y),
    in degrees 0..3, and mu S_{-1} = id on the same words.
    """
    if L < 1 or Dg < 1:
        raise ValueError("bounds must be at least 1")
    h = UqHomotopy(r, printed)
    H = r.H
    if right_words is None:
        right_words = [H.one_word, (-1, 0, 0), (0, 1, 0), (0, 0, 1)]
    rep = CheckReport("homotopy_Sd_plus_dS",
                      details={"resolution": r.name, "L": L, "Dg": Dg,
                               "formulas": "printed" if printed
                               else "corrected",
                               "right_words": [H.word_str(w)
                                               for w in right_words]})
    words = [(l, m, k) for l in range(-L, L + 1) for m in range(Dg + 1)
             for k in range(Dg + 1)]
    for w in words:
        rep.checked += 1
        back = r.mu(h.s_minus1({w: H.one_scalar}))
        if not lc_equal(back, {w: H.one_scalar}):
            rep.fail(identity="mu S_-1 = id", witness=H.word_str(w))
    for n in range(0, 4):
        for g in r.gens.get(n, ()):
            for w in words:
                for b in right_words:
                    rep.checked += 1
                    res = h.check_at(n, {(g, w, b): H.one_scalar})
                    if res:
                        rep.fail(identity="Sd + dS = id", degree=n,
                                 generator=g,
                                 witness="%s (x) %s" % (H.word_str(w),
                                                        H.word_str(b)),
                                 residual=format_module(H, res))
    for n in range(3, r.N + 1):
        for g in r.gens.get(n, ()):
            rep.checked += 1
            if h.S(n, r.basis_elem(g)):
                rep.fail(identity="S_n = 0 for n >= 3", generator=g)
    return rep


# ---------------------------------------------------------------------------
# bar resolution and comparison lifts

class BarResolution:
    """
    The bar resolution of H as a bimodule: B_n is free on the symbols
    [h_1|...|h_n] (tuples of basis words) with
    d[h_1|...|h_n] = (h_1 (x) 1)[h_2|...] + sum (-1)^i [..|h_i h_{i+1}|..]
                     + (-1)^n (1 (x) h_n)[..|h_{n-1}],
    and the right H-linear contraction s((a (x) b)[hs]) = (1 (x) b)[a|hs].
    """

    def __init__(self, H):
        self.H = H
        self.one = H.one_word

    def d(self, n, elem):
        H, o = self.H, self.one
        out = {}
        if n <= 0:
            return out
        for (hs, a, b), c in elem.items():
            img = {}
            lc_iadd(img, {(hs[1:], hs[0], o): H.one_scalar})
            for i in range(n - 1):
                for w, cw in H.mul_w(hs[i], hs[i + 1]).items():
                    lc_iadd(img, {(hs[:i] + (w,) + hs[i + 2:], o, o):
                                  (-1) ** (i + 1) * cw})
            lc_iadd(img, {(hs[:-1], o, hs[-1]): H.field((-1) ** n)})
            lc_iadd(out, he_act(H, {(a, b): c}, img))
        return out

    def s(self, elem):
        o = self.one
        out = {}
        for (hs, a, b), c in elem.items():
            lc_iadd(out, {((a,) + hs, o, b): c})
        return out

    def mu(self, elem):
        out = {}
        for (hs, a, b), c in elem.items():
            lc_iadd(out, self.H.mul_w(a, b), c)
        return out


def bar_resolution(H, N):
    """The bar resolution of a finite-dimensional H truncated at degree N."""
    B = BarResolution(H)
    basis = H.basis_upto(0)
    gens = {n: list(product(basis, repeat=n)) for n in range(N + 1)}
    diffs = {n: {g: B.d(n, {(g, H.one_word, H.one_word): H.one_scalar})
                 for g in gens[n]} for n in range(1, N + 1)}
    return Resolution(H, "bar", gens, diffs)


def extend(H, f, elem):
    """H^e-linear extension of a map f given on generators."""
    out = {}
    for (g, a, b), c in elem.items():
        lc_iadd(out, he_act(H, {(a, b): c}, f[g]))
    return out


def comparison_lift(r, n_max=None):
    """
    Chain map f: M_* -> Bar_* over the identity of H, built inductively by
    f_0(1) = [] and f_{n+1}(g) = s f_n d_{n+1}(g).  Returns the maps and a
    report of d^bar f_{n+1} = f_n d_{n+1} on generators.
    """
    H = r.H
    B = BarResolution(H)
    top = r.N if n_max is None else min(n_max, r.N)
    o = H.one_word
    f = {0: {g: {((), o, o): H.one_scalar} for g in r.gens[0]}}
    rep = CheckReport("comparison_lift",
                      details={"resolution": r.name, "n_max": top})
    for g in r.gens[0]:
        rep.checked += 1
        if not lc_equal(B.mu(f[0][g]), r.mu(r.basis_elem(g))):
            rep.fail(identity="mu f_0 = mu", generator=g)
    for n in range(1, top + 1):
        f[n] = {}
        for g in r.gens[n]:
            z = extend(H, f[n - 1], r.diffs[n][g])
            f[n][g] = B.s(z)
            rep.checked += 1
            lhs = B.d(n, f[n][g])
            if not lc_equal(lhs, z):
                rep.fail(identity="d f_%d = f_%d d_%d" % (n, n - 1, n),
                         generator=g)
    return f, rep


# ---------------------------------------------------------------------------
# an independent oracle: the periodic resolution of k over k[Z/m]

def periodic_cyclic_group_complex(m, field, N):
    """
    k (x)_{kG} P_* for the periodic resolution
    kG <-(g-1)- kG <-N- kG <-(g-1)- ...  of the trivial module, G = Z/m;
    the induced differentials are 0 in odd and m in even degrees.
    """
    dims = [1] * (N + 1)
    diffs = {}
    for n in range(1, N + 1):
        v = field(0) if n % 2 else field(m)
        diffs[n] = SparseMatrix(1, 1, [{0: v}] if v else [{}])
    return ChainComplex(field, dims, diffs)
