import random

import pytest
from hypothesis import given, strategies as st

from hopfcyclic.fields import QQq
from hopfcyclic.hopf import (CapExceeded, ModularPair, NotGrouplike,
                             TraceFunctional, check_comodule_axioms,
                             check_flags, check_hopf_axioms,
                             check_modular_involution,
                             check_sigma_antipode_identities,
                             check_trace_properties, counit_character,
                             lc_equal, lc_scale, self_coaction,
                             sigma_antipode, trivial_coaction,
                             twisted_antipode)
from hopfcyclic.instances import (aslq2_delta, build_instance,
                                  laurent_on_aslq2, pair_for,
                                  verify_s2_conjugation)
from hopfcyclic.rewriting import NonConfluentPresentation, Presentation

from conftest import instance

q = QQq.gen
ALL = ["group:Z2", "group:Z3", "group:Z4", "group:S3", "fungrp:S3",
       "tensor:2", "laurent", "uqsl2", "aslq2"]


def el(H, w, c=1):
    return {w: H.field(c)}


# ---------------------------------------------------------------------------
# normal forms

def test_uq_x_sigma():
    U = instance("uqsl2")
    assert lc_equal(U.mul_w(U.x, U.K), {(1, 1, 0): q ** -2})


def test_uq_y_x():
    U = instance("uqsl2")
    c = (q - q ** -1) ** -1
    assert lc_equal(U.mul_w(U.y, U.x),
                    {(0, 1, 1): QQq(1), U.K: -c, U.Ki: c})


def test_aslq2_u_x():
    A = instance("aslq2")
    assert lc_equal(A.mul_w(A.u, A.x), lc_scale(A.mul_w(A.x, A.u), q))


def test_group_product_is_table_lookup():
    G = instance("group:S3")
    for a in G.basis_upto(0):
        for b in G.basis_upto(0):
            assert G.mul_w(a, b) == {G.group.mul(a, b): 1}


# ---------------------------------------------------------------------------
# coproduct, antipode and pairs

def test_grouplike_iterated_coproduct():
    G = instance("group:Z3")
    g = G.g("g")
    assert G.iterated_coproduct_word(g, 3) == {(g, g, g): 1}


def test_uq_coproduct_of_x():
    U = instance("uqsl2")
    one = QQq(1)
    assert lc_equal(U.iterated_coproduct_word(U.x, 2),
                    {(U.x, U.K): one, (U.one_word, U.x): one})
    assert lc_equal(U.iterated_coproduct_word(U.x, 3),
                    {(U.x, U.K, U.K): one, (U.one_word, U.x, U.K): one,
                     (U.one_word, U.one_word, U.x): one})


def test_uq_coassociativity_both_ways():
    U = instance("uqsl2")
    w = (1, 1, 1)
    d = U.coproduct_word(w)
    left, right = {}, {}
    for (a, b), c in d.items():
        for (a1, a2), c1 in U.coproduct_word(a).items():
            left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c1
        for (b1, b2), c1 in U.coproduct_word(b).items():
            right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c1
    assert lc_equal(left, right)
    assert lc_equal(left, U.iterated_coproduct_word(w, 3))


def test_uq_antipode():
    U = instance("uqsl2")
    assert lc_equal(U.antipode_word(U.K), el(U, U.Ki))
    assert lc_equal(U.antipode_word(U.x),
                    lc_scale(U.mul_w(U.x, U.Ki), QQq(-1)))
    assert lc_equal(U.antipode_word(U.y),
                    lc_scale(U.mul_w(U.K, U.y), QQq(-1)))


def test_sigma_antipode_with_inverse_generator():
    U = instance("uqsl2")
    got = sigma_antipode(U, el(U, U.x), U.Ki)
    expect = lc_scale(U.mul(U.mul(el(U, U.Ki), el(U, U.x)), el(U, U.Ki)),
                      QQq(-1))
    assert lc_equal(got, expect)
    # -q^-2 x s^-2, which is -q^2 s^-2 x in the s-first basis
    assert lc_equal(got, lc_scale(U.mul_w(U.x, (-2, 0, 0)), -q ** -2))
    assert lc_equal(got, {(-2, 1, 0): -q ** 2})


def test_sigma_antipode_needs_grouplike():
    U = instance("uqsl2")
    with pytest.raises(NotGrouplike):
        sigma_antipode(U, el(U, U.x), U.x)


def test_twisted_antipode_on_aslq2():
    A = instance("aslq2")
    pair = pair_for(A, "delta,1")
    assert lc_equal(twisted_antipode(A, el(A, A.x), pair),
                    {A.y: q})


def test_delta_values():
    A = instance("aslq2")
    d = aslq2_delta(A)
    assert (d(A.x), d(A.y), d(A.u), d(A.v)) == (q, q ** -1, 0, 0)
    assert d(A.one_word) == 1


@pytest.mark.parametrize("name,selector,ok", [
    ("group:Z3", "epsilon,1", True),
    ("group:S3", "epsilon,1", True),
    ("aslq2", "delta,1", True),
    ("aslq2", "epsilon,1", False),
    ("uqsl2", "epsilon,s^-1", True),
    ("uqsl2", "epsilon,1", False),
])
def test_modular_involution(name, selector, ok):
    H = instance(name)
    rep = check_modular_involution(H, pair_for(H, selector), 3)
    assert rep.passed is ok
    if not ok and name == "aslq2":
        assert "u" in [w.get("witness") for w in rep.failures]


def test_aslq2_epsilon_witness_value():
    A = instance("aslq2")
    S2u = A.antipode(A.antipode_word(A.u))
    assert lc_equal(S2u, {A.u: q ** 2})


def test_pair_needs_delta_sigma_one():
    G = instance("group:Z2")
    delta = counit_character(G)
    bad = ModularPair(delta, G.g("g"))
    assert check_modular_involution(G, bad, 0).passed
    from hopfcyclic.hopf import Character
    sign = Character(G, func=lambda w: -1 if w == G.g("g") else 1,
                     name="sign")
    rep = check_modular_involution(G, ModularPair(sign, G.g("g")), 0)
    assert not rep.passed


# ---------------------------------------------------------------------------
# Hopf axioms and flags on every instance

@pytest.mark.parametrize("name", ALL)
def test_hopf_axioms(name):
    H = instance(name)
    D = 0 if H.finite_dimensional else 3
    rep = check_hopf_axioms(H, D)
    assert rep.passed, rep.failures


@pytest.mark.parametrize("name,comm,cocomm", [
    ("group:S3", False, True), ("group:Z3", True, True),
    ("fungrp:S3", True, False), ("tensor:2", False, True),
    ("laurent", True, True), ("uqsl2", False, False),
    ("aslq2", False, False)])
def test_flags(name, comm, cocomm):
    H = instance(name)
    rep = check_flags(H, 2)
    assert rep.passed
    assert rep.details["commutative"] is comm
    assert rep.details["cocommutative"] is cocomm


def test_uq_counit():
    U = instance("uqsl2")
    assert (U.counit_word(U.x), U.counit_word(U.y), U.counit_word(U.K)) \
        == (0, 0, 1)


@pytest.mark.parametrize("name,sigma", [
    ("group:S3", "e"), ("group:Z4", "g^2"), ("uqsl2", None),
    ("laurent", None)])
def test_sigma_antipode_identities(name, sigma):
    H = instance(name)
    if name == "uqsl2":
        s = H.Ki
    elif name == "laurent":
        s = 1
    else:
        s = H.g(sigma)
    rep = check_sigma_antipode_identities(H, s, 2)
    assert rep.passed, rep.failures


def test_s2_conjugation():
    U = instance("uqsl2")
    assert verify_s2_conjugation(U, 3).passed
    S2 = lambda w: U.antipode(U.antipode_word(w))
    assert lc_equal(S2(U.x), {U.x: q ** 2})
    assert lc_equal(S2(U.y), {U.y: q ** -2})
    assert lc_equal(S2(U.K), el(U, U.K))


def test_tensor_cap_raises():
    T = build_instance("tensor:1", check_pairs=False)
    T.cap = 2
    with pytest.raises(CapExceeded):
        T.mul_w((0, 0), (0,))


# ---------------------------------------------------------------------------
# comodule algebras and traces

def test_trivial_coaction():
    A = instance("aslq2")
    L = instance("laurent")
    assert check_comodule_axioms(trivial_coaction(A, L), 2).passed


def test_self_coaction_of_group_algebra():
    assert check_comodule_axioms(self_coaction(instance("group:S3")),
                                 0).passed


def test_laurent_coaction_on_aslq2():
    c = laurent_on_aslq2()
    assert check_comodule_axioms(c, 3).passed
    A = c.A
    xu = A.mul_w(A.x, A.u)
    assert lc_equal(c.beta(xu), {(w, 0): v for w, v in xu.items()})


def test_indicator_trace_of_central_sigma():
    G = instance("group:Z4")
    s = G.g("g^2")
    t = TraceFunctional(G, lambda w: 1 if w == s else 0)
    pair = ModularPair(counit_character(G), s)
    rep = check_trace_properties(t, self_coaction(G), pair, 0)
    assert rep.details["is_delta_trace"] and rep.details["is_sigma_invariant"]


def test_counit_trace_is_not_invariant():
    G = instance("group:Z3")
    t = TraceFunctional(G, G.counit_word, name="epsilon")
    pair = ModularPair(counit_character(G), G.one_word)
    rep = check_trace_properties(t, self_coaction(G), pair, 0)
    assert not rep.details["is_sigma_invariant"]
    assert {w["witness"] for w in rep.failures} == {"g", "g^2"}


def test_zero_trace_passes():
    A = instance("aslq2")
    L = instance("laurent")
    t = TraceFunctional(A, lambda w: 0, name="zero")
    pair = ModularPair(counit_character(L), 0)
    rep = check_trace_properties(t, trivial_coaction(A, L), pair, 2)
    assert rep.passed


# ---------------------------------------------------------------------------
# rewriting

@pytest.mark.parametrize("name", ["uqsl2", "aslq2"])
def test_critical_pairs_resolve(name):
    assert instance(name).presentation.check_confluence().passed


@pytest.mark.parametrize("name", ["uqsl2", "aslq2"])
def test_strategies_agree_on_random_words(name):
    P = instance(name).presentation
    rng = random.Random(11)
    for _ in range(1000):
        w = P.random_word(rng.randint(0, 6), rng)
        a = P.normalize(w, "leftmost")
        assert lc_equal(a, P.normalize(w, "rightmost"))
        assert lc_equal(a, P.normalize(w, "random", rng))


@pytest.mark.parametrize("name", ["uqsl2", "aslq2"])
def test_normalize_is_idempotent(name):
    P = instance(name).presentation
    rng = random.Random(5)
    for _ in range(100):
        a = P.normalize(P.random_word(5, rng))
        assert lc_equal(P.normalize(a), a)


@given(st.lists(st.sampled_from(["s", "S", "x", "y"]), max_size=5),
       st.lists(st.sampled_from(["s", "S", "x", "y"]), max_size=5))
def test_rewriting_matches_basis_product(a, b):
    U = instance("uqsl2")
    P = U.presentation
    ea = {U.word_from_string("".join(k)): c
          for k, c in P.normalize(tuple(a)).items()}
    eb = {U.word_from_string("".join(k)): c
          for k, c in P.normalize(tuple(b)).items()}
    ab = {U.word_from_string("".join(k)): c
          for k, c in P.normalize(tuple(a + b)).items()}
    assert lc_equal(U.mul(ea, eb), ab)


@given(st.lists(st.sampled_from(["s", "S", "x", "y"]), max_size=4),
       st.lists(st.sampled_from(["s", "S", "x", "y"]), max_size=4))
def test_bialgebra_compatibility(a, b):
    U = instance("uqsl2")
    P = U.presentation
    to = lambda e: {U.word_from_string("".join(k)): c for k, c in e.items()}
    ea, eb = to(P.normalize(tuple(a))), to(P.normalize(tuple(b)))
    lhs = U.coproduct(U.mul(ea, eb))
    rhs = U.tmul(U.coproduct(ea), U.coproduct(eb))
    assert lc_equal(lhs, rhs)
    assert U.counit(U.mul(ea, eb)) == U.counit(ea) * U.counit(eb)


def test_non_confluent_presentation_is_rejected():
    from hopfcyclic.fields import QQ
    P = Presentation(QQ, ["a", "b", "c"],
                     [(("a", "b"), {(): 1}), (("b", "a"), {("c",): 1})])
    rep = P.check_confluence()
    assert not rep.passed
    with pytest.raises(NonConfluentPresentation):
        P.require_confluent()
