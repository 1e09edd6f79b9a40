"""
String rewriting for presented algebras.

A presentation is a list of rules ``lhs -> sum c_i * rhs_i`` on strings
of generator names.  Normalization rewrites until no left-hand side
occurs; the rule sets shipped with the package are terminating and
locally confluent, which ``check_confluence`` verifies on all critical
pairs.
"""

import random
import re

from .hopf import (HopfError, NonInvertibleInverse, UnknownGenerator,
                   lc_equal, lc_iadd)
from .report import CheckReport


class NonConfluentPresentation(HopfError):
    def __init__(self, witness, left, right):
        super().__init__("critical pair %s does not resolve" % (witness,))
        self.witness = witness
        self.left = left
        self.right = right


class RewriteLimit(HopfError):
    pass


class Presentation:
    """
    Generators with optional inverse pairs and a rule list.  Rules are
    (lhs, rhs) with lhs a tuple of generator names and rhs a dict
    tuple -> scalar.  Inverse pairs contribute the rules g G -> 1, G g -> 1.
    """

    def __init__(self, field, generators, rules, inverses=None, name="",
                 weights=None):
        self.field = field
        self.name = name
        self.generators = list(generators)
        self.inverses = dict(inverses or {})
        for g, h in list(self.inverses.items()):
            self.inverses.setdefault(h, g)
        self.weights = dict(weights or {})
        one = field(1)
        self.rules = []
        seen = set()
        for g, h in self.inverses.items():
            if (g, h) not in seen:
                self.rules.append(((g, h), {(): one}))
                seen.add((g, h))
        for lhs, rhs in rules:
            self.rules.append((tuple(lhs), {tuple(k): field(v)
                                            for k, v in rhs.items() if v}))
        for lhs, rhs in self.rules:
            for x in lhs + tuple(a for k in rhs for a in k):
                if x not in self.generators:
                    raise UnknownGenerator(x)
        self._by_first = {}
        for i, (lhs, _) in enumerate(self.rules):
            self._by_first.setdefault(lhs[0], []).append(i)

    # parsing ----------------------------------------------------------------
    def parse_word(self, text):
        """'x s^-1 y^2' -> tuple of generator names."""
        if isinstance(text, (tuple, list)):
            out = []
            for t in text:
                out.extend(self.parse_word(t))
            return tuple(out)
        out = []
        for tok in text.replace("*", " ").split():
            m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?", tok)
            if not m:
                raise UnknownGenerator(tok)
            g, e = m.group(1), int(m.group(2) or 1)
            if g == "1":
                continue
            if g not in self.generators:
                raise UnknownGenerator(g)
            if e < 0:
                if g not in self.inverses:
                    raise NonInvertibleInverse(g)
                g, e = self.inverses[g], -e
            out.extend([g] * e)
        return tuple(out)

    # rewriting ------------------------------------------------------------
    def redexes(self, s):
        """All (position, rule index) matches in the string s."""
        out = []
        for i, x in enumerate(s):
            for r in self._by_first.get(x, ()):
                lhs = self.rules[r][0]
                if s[i:i + len(lhs)] == lhs:
                    out.append((i, r))
        return out

    def is_normal(self, s):
        return not self.redexes(s)

    def rewrite_at(self, s, pos, r):
        lhs, rhs = self.rules[r]
        pre, post = s[:pos], s[pos + len(lhs):]
        return {pre + k + post: c for k, c in rhs.items()}

    def normalize(self, expr, strategy="leftmost", rng=None,
                  max_steps=1000000):
        """
        Normal form of a string, a dict string -> scalar, or a parsable
        word.  strategy: 'leftmost', 'rightmost' or 'random'.
        """
        if isinstance(expr, str):
            expr = {self.parse_word(expr): self.field(1)}
        elif isinstance(expr, tuple):
            expr = {expr: self.field(1)}
        if strategy == "random" and rng is None:
            rng = random.Random(0)
        pending = dict(expr)
        out = {}
        steps = 0
        while pending:
            s, c = pending.popitem()
            red = self.redexes(s)
            if not red:
                lc_iadd(out, {s: c})
                continue
            steps += 1
            if steps > max_steps:
                raise RewriteLimit("no normal form after %d steps"
                                   % max_steps)
            if strategy == "leftmost":
                pos, r = red[0]
            elif strategy == "rightmost":
                pos, r = red[-1]
            else:
                pos, r = rng.choice(red)
            lc_iadd(pending, self.rewrite_at(s, pos, r), c)
        return out

    # confluence -----------------------------------------------------------
    def critical_pairs(self):
        """Overlap and inclusion ambiguities as (word, (pos, r), (pos, r))."""
        out = []
        for i, (l1, _) in enumerate(self.rules):
            for j, (l2, _) in enumerate(self.rules):
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        out.append((l1 + l2[k:], (0, i), (len(l1) - k, j)))
                if i != j and len(l2) <= len(l1):
                    for p in range(len(l1) - len(l2) + 1):
                        if l1[p:p + len(l2)] == l2:
                            out.append((l1, (0, i), (p, j)))
        return out

    def check_confluence(self):
        rep = CheckReport("critical_pairs", details={"presentation":
                                                     self.name})
        for word, (p1, r1), (p2, r2) in self.critical_pairs():
            rep.checked += 1
            a = self.normalize(self.rewrite_at(word, p1, r1))
            b = self.normalize(self.rewrite_at(word, p2, r2))
            if not lc_equal(a, b):
                rep.fail(witness=" ".join(word), left=a, right=b)
        return rep

    def require_confluent(self):
        rep = self.check_confluence()
        if not rep.passed:
            w = rep.failures[0]
            raise NonConfluentPresentation(w["witness"], w["left"],
                                           w["right"])
        return rep

    def random_word(self, length, rng):
        return tuple(rng.choice(self.generators) for _ in range(length))
