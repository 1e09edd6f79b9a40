"""
Homology of (co)cyclic modules: Hochschild complexes, the (b, B) and
cyclic bicomplexes, Karoubi-type comparisons and periodic cyclic
cohomology of commutative Hopf algebras through the dual cyclic module.
"""

from itertools import product

from .cyclic import CyclicModule, words_of_weight
from .hopf import CapExceeded, HopfError, lc_iadd, lc_sub
from .linalg import (SparseMatrix, block_matrix, homology_of_pair,
                     NotAComplex)
from .report import CheckReport


class NotTruncatable(HopfError):
    pass


class EulerMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# chain complexes

class ChainComplex:
    """
    Bounded complex C_0 <- C_1 <- ... <- C_N over a field.  ``diffs[n]`` is
    the matrix of d_n: C_n -> C_{n-1} (n = 1..N).  d^2 = 0 is checked on
    construction.
    """

    def __init__(self, field, dims, diffs, labels=None, check=True):
        self.field = field
        self.dims = list(dims)
        self.N = len(self.dims) - 1
        self.diffs = dict(diffs)
        self.labels = labels or {}
        for n in range(1, self.N + 1):
            d = self.diffs.setdefault(n, SparseMatrix(self.dims[n - 1],
                                                      self.dims[n]))
            if d.shape != (self.dims[n - 1], self.dims[n]):
                raise ValueError("d_%d has shape %s, expected %s"
                                 % (n, d.shape, (self.dims[n - 1],
                                                 self.dims[n])))
        if check:
            self.check_square_zero()
        self._homology = {}

    def d(self, n):
        if n <= 0 or n > self.N:
            return SparseMatrix(self.dims[n - 1] if n > 0 else 0,
                                self.dims[n] if n <= self.N else 0)
        return self.diffs[n]

    def check_square_zero(self):
        for n in range(2, self.N + 1):
            a, b = self.diffs[n - 1], self.diffs[n]
            for j, col in enumerate(b.cols):
                if col:
                    r = a.apply(col)
                    if r:
                        raise NotAComplex(j, {"degree": n, "residual": r})

    def incoming(self, n):
        if n + 1 <= self.N:
            return self.diffs[n + 1]
        return SparseMatrix(self.dims[n], 0)

    def outgoing(self, n):
        if n >= 1:
            return self.diffs[n]
        return SparseMatrix(0, self.dims[0])

    def homology(self, n, representatives=True):
        key = (n, representatives)
        r = self._homology.get(key)
        if r is None:
            r = homology_of_pair(self.incoming(n), self.outgoing(n),
                                 check=False, representatives=representatives)
            self._homology[key] = r
        return r

    def homology_dims(self, upto=None):
        upto = self.N if upto is None else upto
        return [self.homology(n, False).dimension for n in range(upto + 1)]

    def euler_check(self):
        chi_c = sum((-1) ** n * d for n, d in enumerate(self.dims))
        chi_h = sum((-1) ** n * h for n, h in enumerate(self.homology_dims()))
        if chi_c != chi_h:
            raise EulerMismatch("chi(C) = %d but chi(H) = %d"
                                % (chi_c, chi_h))
        return chi_c


# ---------------------------------------------------------------------------
# dual of a cocyclic module

class DualCyclicModule(CyclicModule):
    """
    The linear dual of a finite-dimensional cocyclic module, a cyclic
    module with faces d_i^T, degeneracies s_i^T and cyclic operator tau^T.
    Its homology is the cohomology of the cocyclic module.
    """

    def __init__(self, co):
        super().__init__(co.H)
        self.co = co
        self.offset = co.offset
        self.name = "dual(%s)" % co.name
        self._cache = {}
        if not co.H.finite_dimensional:
            raise NotTruncatable("dual needs a finite-dimensional algebra")

    def _keys(self, n):
        return list(product(self.co.H.basis_upto(0),
                            repeat=self.co.nfactors(n)))

    def _transposed(self, tag, i, n_src):
        """Transpose of a cocyclic operator acting on level n_src."""
        ck = (tag, i, n_src)
        t = self._cache.get(ck)
        if t is not None:
            return t
        co = self.co
        t = {}
        one = self.field(1)
        for w in self._keys(n_src):
            if tag == "d":
                img = co.coface(i, n_src, {w: one})
            elif tag == "s":
                img = co.codegen(i, n_src, {w: one})
            else:
                img = co.tau(n_src, {w: one})
            for k, c in img.items():
                t.setdefault(k, {})[w] = c
        self._cache[ck] = t
        return t

    def face_word(self, i, n, key):
        # d_i: C^{n-1} -> C^n, transposed
        return dict(self._transposed("d", i, n - 1).get(key, {}))

    def degen_word(self, i, n, key):
        # s_i: C^{n+1} -> C^n, transposed
        return dict(self._transposed("s", i, n + 1).get(key, {}))

    def tau_word(self, n, key):
        return dict(self._transposed("t", 0, n).get(key, {}))

    def is_degenerate(self, n, key):
        ck = ("degset", n)
        s = self._cache.get(ck)
        if s is None:
            s = degenerate_keys(self, n, self._keys(n - 1)) if n else set()
            self._cache[ck] = s
        return key in s


def degenerate_keys(m, n, lower_keys):
    """
    Keys spanned by the images of the degeneracies from level n - 1.
    Requires every image of a basis key to be a single key.
    """
    one = m.field(1)
    out = set()
    for key in lower_keys:
        for i in range(n):
            img = m.degen(i, n - 1, {key: one})
            if len(img) != 1:
                raise NotTruncatable("degenerate chains are not spanned "
                                     "by basis words")
            out.update(img)
    return out


# ---------------------------------------------------------------------------
# materialization

def level_keys(m, n, weight=None, normalized=True):
    """Basis keys of level n (of the given weight for graded modules)."""
    A = m.A
    k = m.nfactors(n)
    if isinstance(m, DualCyclicModule):
        keys = m._keys(n)
    elif weight is None:
        if not A.finite_dimensional:
            raise NotTruncatable("%s needs a weight for truncation" % A.name)
        keys = list(product(A.basis_upto(0), repeat=k))
    else:
        if not getattr(A, "graded", False):
            raise NotTruncatable("%s is not graded" % A.name)
        keys = words_of_weight(A, weight, k)
    if normalized:
        keys = [x for x in keys if not m.is_degenerate(n, x)]
    return keys


def materialize(op, src_keys, tgt_keys, drop=None):
    """
    Matrix of op (a function key -> element) from src_keys to tgt_keys.
    Keys outside tgt_keys are dropped when drop(key) holds, otherwise the
    image escaped the truncation and CapExceeded is raised.
    """
    idx = {k: i for i, k in enumerate(tgt_keys)}
    cols = []
    for k in src_keys:
        col = {}
        for t, c in op(k).items():
            i = idx.get(t)
            if i is None:
                if drop is not None and drop(t):
                    continue
                raise CapExceeded("image %r is outside the truncated basis"
                                  % (t,))
            col[i] = col.get(i, 0) + c
        cols.append({i: c for i, c in col.items() if c})
    return SparseMatrix(len(tgt_keys), len(src_keys), cols)


class NormalizedLevels:
    """Normalized bases and b, B matrices of a cyclic module, per weight."""

    def __init__(self, m, weight=None, normalized=True):
        self.m = m
        self.weight = weight
        self.normalized = normalized
        self._keys = {}

    def keys(self, n):
        r = self._keys.get(n)
        if r is None:
            r = level_keys(self.m, n, self.weight, self.normalized)
            self._keys[n] = r
        return r

    def _drop(self, n):
        if not self.normalized:
            return None
        return lambda k: self.m.is_degenerate(n, k)

    def b(self, n):
        """b: C_n -> C_{n-1}."""
        one = self.m.field(1)
        return materialize(lambda k: self.m.b(n, {k: one}), self.keys(n),
                           self.keys(n - 1), self._drop(n - 1))

    def B(self, n):
        """B: C_n -> C_{n+1}."""
        one = self.m.field(1)
        return materialize(
            lambda k: self.m.connes_B(n, {k: one}, normalized=False),
            self.keys(n), self.keys(n + 1), self._drop(n + 1))

    def op(self, n_src, n_tgt, f):
        one = self.m.field(1)
        return materialize(lambda k: f({k: one}), self.keys(n_src),
                           self.keys(n_tgt), self._drop(n_tgt))


def _weights(m, W):
    A = m.A
    if isinstance(m, DualCyclicModule) or A.finite_dimensional:
        return [None]
    if W is None:
        raise NotTruncatable("%s needs a weight cap" % A.name)
    if not getattr(A, "graded", False):
        raise NotTruncatable("%s: b does not preserve a grading" % A.name)
    return list(range(W + 1))


def hochschild_complex(m, N, weight=None, normalized=True):
    lv = NormalizedLevels(m, weight, normalized)
    dims = [len(lv.keys(n)) for n in range(N + 1)]
    diffs = {n: lv.b(n) for n in range(1, N + 1)}
    return ChainComplex(m.field, dims, diffs,
                        labels={n: lv.keys(n) for n in range(N + 1)})


def hochschild_homology(m, n_max, W=None, normalized=True,
                        representatives=False):
    """
    H_n of the b-complex for n <= n_max, summed over weights <= W for
    graded modules.  Returns a dict with dims and per-weight dims.
    """
    per_weight = {}
    total = [0] * (n_max + 1)
    reps = {}
    for w in _weights(m, W):
        C = hochschild_complex(m, n_max + 1, w, normalized)
        C.euler_check()
        dims = []
        for n in range(n_max + 1):
            h = C.homology(n, representatives)
            dims.append(h.dimension)
            if representatives and h.representatives:
                keys = C.labels[n]
                reps.setdefault(n, []).extend(
                    {keys[i]: c for i, c in v.items()}
                    for v in h.representatives)
        per_weight[w] = dims
        total = [a + b for a, b in zip(total, dims)]
    out = {"dims": total, "per_weight": per_weight,
           "bounds": {"n_max": n_max, "W": W}, "normalized": normalized}
    if representatives:
        out["representatives"] = reps
    return out


def bB_total_complex(m, N, weight=None):
    """Total complex of the normalized (b, B) bicomplex, degrees 0..N."""
    lv = NormalizedLevels(m, weight, True)
    dims_lv = [len(lv.keys(q)) for q in range(N + 1)]

    def parts(n):
        return [n - 2 * k for k in range(n // 2 + 1)]

    dims = [sum(dims_lv[q] for q in parts(n)) for n in range(N + 1)]
    bmat = {q: lv.b(q) for q in range(1, N + 1)}
    Bmat = {q: lv.B(q) for q in range(N)}
    diffs = {}
    for n in range(1, N + 1):
        src, tgt = parts(n), parts(n - 1)
        blocks = {}
        for j, q in enumerate(src):
            if q >= 1:
                blocks[(tgt.index(q - 1), j)] = bmat[q]
            if q + 1 in tgt:
                blocks[(tgt.index(q + 1), j)] = Bmat[q]
        diffs[n] = block_matrix([dims_lv[q] for q in tgt],
                                [dims_lv[q] for q in src], blocks)
    return ChainComplex(m.field, dims, diffs), lv


def cc_total_complex(m, N, weight=None):
    """Total complex of the unnormalized cyclic bicomplex CC, degrees 0..N."""
    lv = NormalizedLevels(m, weight, normalized=False)
    F = m.field
    dims_lv = [len(lv.keys(q)) for q in range(N + 1)]
    b = {q: lv.b(q) for q in range(1, N + 1)}
    bp = {q: lv.op(q, q - 1, lambda x, q=q: m.b_prime(q, x))
          for q in range(1, N + 1)}
    one_minus_lam = {q: lv.op(q, q, lambda x, q=q: lc_sub(x, m.lam(q, x)))
                     for q in range(N + 1)}
    norm = {q: lv.op(q, q, lambda x, q=q: m.norm(q, x))
            for q in range(N + 1)}
    for q in range(1, N + 1):
        # b (1 - lambda) = (1 - lambda) b' and b' N = N b
        if not (b[q] @ one_minus_lam[q] == one_minus_lam[q - 1] @ bp[q]):
            raise NotAComplex(q, "b(1 - lambda) != (1 - lambda)b'")
        if not (bp[q] @ norm[q] == norm[q - 1] @ b[q]):
            raise NotAComplex(q, "b'N != Nb")

    def cells(n):
        return [(p, n - p) for p in range(n + 1)]

    dims = [sum(dims_lv[q] for _, q in cells(n)) for n in range(N + 1)]
    diffs = {}
    for n in range(1, N + 1):
        src, tgt = cells(n), cells(n - 1)
        tidx = {c: i for i, c in enumerate(tgt)}
        blocks = {}
        for j, (p, q) in enumerate(src):
            if q >= 1:
                v = b[q] if p % 2 == 0 else -bp[q]
                blocks[(tidx[(p, q - 1)], j)] = v
            if p >= 1:
                h = one_minus_lam[q] if p % 2 == 1 else norm[q]
                blocks[(tidx[(p - 1, q)], j)] = h
        diffs[n] = block_matrix([dims_lv[q] for _, q in tgt],
                                [dims_lv[q] for _, q in src], blocks)
    return ChainComplex(F, dims, diffs)


def cyclic_homology(m, n_max, W=None, method="bB", representatives=False):
    """
    HC_n for n <= n_max.  method 'bB' uses the normalized (b, B) complex,
    'CC' the unnormalized cyclic bicomplex.
    """
    per_weight = {}
    total = [0] * (n_max + 1)
    for w in _weights(m, W):
        if method == "bB":
            C, _ = bB_total_complex(m, n_max + 1, w)
        elif method == "CC":
            C = cc_total_complex(m, n_max + 1, w)
        else:
            raise ValueError("unknown method %r" % method)
        C.euler_check()
        dims = [C.homology(n, representatives).dimension
                for n in range(n_max + 1)]
        per_weight[w] = dims
        total = [a + b for a, b in zip(total, dims)]
    return {"dims": total, "per_weight": per_weight, "method": method,
            "bounds": {"n_max": n_max, "W": W},
            "periodic": periodic_window(total)}


def periodic_window(dims):
    """Stabilized even/odd dimensions over the computed window."""
    even = dims[0::2]
    odd = dims[1::2]
    stable_even = len(even) >= 2 and even[-1] == even[-2]
    stable_odd = len(odd) >= 2 and odd[-1] == odd[-2]
    return {
        "even": even, "odd": odd,
        "stabilized": stable_even and stable_odd,
        "HP_even": even[-1] if even else None,
        "HP_odd": odd[-1] if odd else None,
        "window": [0, len(dims) - 1],
        "caveat": "dimensions stabilized over the computed window only",
    }


def weight_stability(m, n_max, W):
    """Dims per weight agree between caps W and W + 1 for weights <= W."""
    a = cyclic_homology(m, n_max, W)
    b = cyclic_homology(m, n_max, W + 1)
    rep = CheckReport("weight_stability", details={"n_max": n_max, "W": W})
    for w in range(W + 1):
        rep.checked += 1
        if a["per_weight"][w] != b["per_weight"][w]:
            rep.fail(weight=w, at_W=a["per_weight"][w],
                     at_W_plus_1=b["per_weight"][w])
    rep.details["top_weight_dims"] = b["per_weight"][W + 1]
    return rep


def karoubi_compare(m, n_max, W=None):
    """HC_n against the sum of H_{n-2i} computed from the b-complex."""
    if not m.A.cocommutative:
        raise HopfError("%s is not cocommutative" % m.A.name)
    hc = cyclic_homology(m, n_max, W)["dims"]
    hh = hochschild_homology(m, n_max, W)["dims"]
    rhs = [sum(hh[n - 2 * i] for i in range(n // 2 + 1))
           for n in range(n_max + 1)]
    rep = CheckReport("karoubi_compare",
                      details={"module": m.name, "HC": hc, "H": hh,
                               "sum_H": rhs, "n_max": n_max, "W": W})
    for n in range(n_max + 1):
        rep.checked += 1
        if hc[n] != rhs[n]:
            rep.fail(n=n, HC=hc[n], sum_H=rhs[n])
    return rep


def check_bB_identities(m, samples, rng, normalized=True):
    """
    B^2 = 0 and bB + Bb = 0 on random normalized chains.  ``samples`` is a
    list of (level, keys) pools; each draw is a random combination.
    """
    F = m.field
    rep = CheckReport("bB_identities", details={"module": m.name})
    for n, pool in samples:
        if not pool:
            continue
        x = {}
        for _ in range(rng.randint(1, 3)):
            lc_iadd(x, {rng.choice(pool): F(rng.randint(-3, 3) or 1)})
        if normalized:
            x = m.project(n, x)
        Bx = m.connes_B(n, x, normalized)
        rep.checked += 1
        if m.connes_B(n + 1, Bx, normalized):
            rep.fail(identity="B^2 = 0", n=n)
        lhs = m.b(n + 1, Bx)
        if n >= 1:
            lc_iadd(lhs, m.connes_B(n - 1, m.b(n, x), normalized))
        if normalized:
            lhs = m.project(n, lhs)
        rep.checked += 1
        if lhs:
            rep.fail(identity="bB + Bb = 0", n=n)
    return rep


# ---------------------------------------------------------------------------
# commutative Hopf algebras: HP from the cocyclic side

def commutative_hp_compare(H, n_max=4):
    """
    HP^0, HP^1 of the CM cocyclic module of a finite-dimensional
    commutative H from the (b, B) complex of its dual, against the parity
    sums of the coalgebra cohomology H^i(H, k).
    """
    from .cyclic import build_cm_cocyclic
    if not H.commutative:
        raise HopfError("%s is not commutative" % H.name)
    co = build_cm_cocyclic(H)
    dual = DualCyclicModule(co)
    hc = cyclic_homology(dual, n_max)
    hh = hochschild_homology(dual, n_max)["dims"]
    per = hc["periodic"]
    sums = [sum(hh[i] for i in range(p, n_max + 1, 2)) for p in (0, 1)]
    rep = CheckReport("commutative_hp_compare",
                      details={"instance": H.name, "HC": hc["dims"],
                               "H_coalgebra": hh,
                               "HP": [per["HP_even"], per["HP_odd"]],
                               "parity_sums": sums,
                               "stabilized": per["stabilized"],
                               "window": per["window"],
                               "n_max": n_max})
    rep.checked += 1
    if not per["stabilized"]:
        rep.fail(reason="HC not stabilized in window")
    for p in (0, 1):
        rep.checked += 1
        if [per["HP_even"], per["HP_odd"]][p] != sums[p]:
            rep.fail(parity=p, HP=[per["HP_even"], per["HP_odd"]][p],
                     parity_sum=sums[p])
    return rep
