import pytest

from hopfcyclic import cyclic as cy
from hopfcyclic.fields import QQq
from hopfcyclic.hopf import (ModularPair, TraceFunctional, counit_character,
                             lc_equal, self_coaction)
from hopfcyclic.instances import pair_for

from conftest import instance

q = QQq.gen


def one(H, key):
    return {key: H.field(1)}


# ---------------------------------------------------------------------------
# ~H^(delta, sigma)

def test_tau_on_grouplike_is_inverse():
    for name in ("group:Z3", "group:S3"):
        G = instance(name)
        B = cy.bh(G)
        for g in G.basis_upto(0):
            assert B.tau(1, one(G, (g,))) == {(G.group.inv[g],): 1}


def test_last_face_is_delta():
    A = instance("aslq2")
    m = cy.build_hopf_cyclic(A, pair_for(A, "delta,1"))
    assert lc_equal(m.face(1, 1, one(A, (A.x,))), {(): q})


def test_unchecked_build_is_required_for_bad_pairs():
    A = instance("aslq2")
    with pytest.raises(cy.InvalidPair):
        cy.build_hopf_cyclic(A, pair_for(A, "epsilon,1"))


@pytest.mark.parametrize("name,selector,n_max,D", [
    ("group:Z2", "epsilon,1", 4, 0),
    ("group:Z3", "epsilon,g", 3, 0),
    ("group:S3", "epsilon,1", 3, 0),
    ("tensor:2", "epsilon,1", 3, 2),
    ("laurent", "epsilon,z", 3, 1),
    ("uqsl2", "epsilon,s^-1", 2, 1),
    ("aslq2", "delta,1", 2, 1),
])
def test_cyclic_axioms(name, selector, n_max, D):
    H = instance(name)
    m = cy.build_hopf_cyclic(H, pair_for(H, selector))
    rep = cy.verify_cyclic_axioms(m, n_max, D)
    assert rep.passed, rep.failures[:3]


def test_converse_epsilon_pair_on_aslq2():
    A = instance("aslq2")
    m = cy.build_hopf_cyclic(A, pair_for(A, "epsilon,1"), unchecked=True)
    rep = cy.verify_cyclic_axioms(m, 1, 1)
    hits = [w for w in rep.failures
            if w["identity"].startswith("tau^(n+1)") and w["n"] == 1]
    assert "u" in {w["witness"] for w in hits}


def test_converse_non_grouplike_sigma():
    G = instance("group:Z3")
    fake = {G.g("g"): G.field(1), G.one_word: G.field(1)}
    m = cy.HopfCyclicModule(G, ModularPair(counit_character(G), fake))
    rep = cy.verify_cyclic_axioms(m, 1, 0)
    assert any(w["identity"].startswith("tau^(n+1)") and w["n"] == 1
               for w in rep.failures)


# ---------------------------------------------------------------------------
# path space, algebra module, cocyclic modules

def test_path_space_cyclic_operator():
    G = instance("group:S3")
    E = cy.build_path_space(G)
    for a in G.basis_upto(0):
        for b in G.basis_upto(0):
            t = E.tau(1, one(G, (a, b)))
            assert t == {(G.group.mul(a, b), G.group.inv[b]): 1}


@pytest.mark.parametrize("name,D", [("group:Z3", 0), ("group:S3", 0),
                                    ("tensor:2", 2), ("uqsl2", 1)])
def test_path_space_contraction(name, D):
    E = cy.build_path_space(instance(name))
    assert cy.check_contraction(E, 3, D).passed


def test_path_space_axioms():
    E = cy.build_path_space(instance("group:S3"))
    assert cy.verify_cyclic_axioms(E, 3, 0).passed


def test_path_space_needs_cocommutative_for_cyclic():
    with pytest.raises(cy.NotCocommutative):
        cy.build_path_space(instance("uqsl2"), cyclic=True)


def test_projection_pi_value():
    A = instance("aslq2")
    pi = cy.projection_pi(A)
    assert lc_equal(pi(1, one(A, (A.x, A.y))), one(A, (A.y,)))


@pytest.mark.parametrize("name,D", [("group:S3", 0), ("tensor:2", 2)])
def test_projection_pi_is_cyclic(name, D):
    assert cy.verify_cyclic_map(cy.projection_pi(instance(name)), 3, D).passed


def test_algebra_cyclic_module():
    m = cy.build_algebra_cyclic(instance("group:S3"))
    assert cy.verify_cyclic_axioms(m, 3, 0).passed


@pytest.mark.parametrize("name", ["group:Z3", "fungrp:S3", "laurent"])
def test_cm_cocyclic_axioms(name):
    H = instance(name)
    D = 0 if H.finite_dimensional else 1
    assert cy.verify_cyclic_axioms(cy.build_cm_cocyclic(H), 3, D).passed


def test_commutative_cocyclic_tau():
    L = instance("laurent")
    C = cy.build_commutative_cocyclic(L)
    for a in range(-2, 3):
        for b in range(-2, 3):
            assert C.tau(1, one(L, (a, b))) == {(a, a - b): 1}
    assert cy.verify_cyclic_axioms(C, 3, 1).passed


def test_commutative_cocyclic_needs_commutative():
    with pytest.raises(cy.NotCommutative):
        cy.build_commutative_cocyclic(instance("group:S3"))


@pytest.mark.parametrize("name,n_max,D", [("fungrp:S3", 2, 0),
                                          ("fungrp:Z3", 3, 0),
                                          ("laurent", 3, 1)])
def test_psi_is_cocyclic_map(name, n_max, D):
    assert cy.verify_cyclic_map(cy.psi_map(instance(name)), n_max, D).passed


# ---------------------------------------------------------------------------
# gamma and theta

def test_gamma_on_grouplikes():
    G = instance("group:Z4")
    s = G.g("g^2")
    pair = ModularPair(counit_character(G), s)
    ga = cy.map_gamma(cy.indicator_trace(G, s), self_coaction(G), pair, D=0)
    for a in G.basis_upto(0):
        for b in G.basis_upto(0):
            hit = G.group.mul(a, b) == s
            assert ga(1, one(G, (a, b))) == ({(b,): 1} if hit else {})


def test_gamma_rejects_bad_trace():
    G = instance("group:Z3")
    t = TraceFunctional(G, G.counit_word, name="epsilon")
    pair = ModularPair(counit_character(G), G.one_word)
    with pytest.raises(cy.TraceAxiomsFail):
        cy.map_gamma(t, self_coaction(G), pair, D=0)


def test_theta_on_grouplikes():
    G = instance("group:S3")
    th = cy.map_theta(G, G.one_word, D=0)
    grp = G.group
    for a in G.basis_upto(0):
        for b in G.basis_upto(0):
            ab = grp.inv[grp.mul(a, b)]
            assert th(2, one(G, (a, b))) == {(ab, a, b): 1}


@pytest.mark.parametrize("name,sigma", [("group:Z4", "g^2"),
                                        ("group:S3", "e")])
def test_theta_and_gamma_are_cyclic_maps(name, sigma):
    G = instance(name)
    s = G.g(sigma)
    th = cy.map_theta(G, s, D=0)
    assert cy.verify_cyclic_map(th, 3, 0).passed
    pair = ModularPair(counit_character(G), s)
    ga = cy.map_gamma(cy.indicator_trace(G, s), self_coaction(G), pair, D=0)
    assert cy.verify_cyclic_map(ga, 2, 0).passed


def test_gamma_theta_is_trace_times_identity():
    G = instance("group:Z4")
    rep = cy.check_gamma_theta(G, G.g("g^2"), 3)
    assert rep.passed and rep.details["Tr_sigma"] == 1


def test_gamma_theta_with_vanishing_trace_value():
    G = instance("group:Z4")
    s = G.g("g^2")
    zero = TraceFunctional(G, lambda w: 0, name="zero")
    rep = cy.check_gamma_theta(G, s, 2, trace=zero)
    assert rep.passed and rep.details["Tr_sigma"] == 0


# ---------------------------------------------------------------------------
# Mac Lane isomorphism

def test_maclane_on_grouplikes():
    G = instance("group:S3")
    f, _ = cy.maclane_theta(G, cy.regular_bimodule(G))
    mul = G.group.mul
    for m in G.basis_upto(0):
        for a in G.basis_upto(0):
            for b in G.basis_upto(0):
                got = f(2, one(G, (m, a, b)))
                assert got == {(a, b, mul(mul(m, a), b)): 1}


@pytest.mark.parametrize("name,D", [("group:S3", 0), ("tensor:1", 2)])
def test_maclane_inverse_and_simplicial(name, D):
    H = instance(name)
    M = cy.regular_bimodule(H) if name.startswith("group") else \
        cy.character_bimodule(H)
    f, g = cy.maclane_theta(H, M)
    assert cy.check_inverse_pair(f, g, 3, D).passed
    assert cy.verify_cyclic_map(f, 3, D, with_tau=False).passed
    assert cy.verify_cyclic_map(g, 3, D, with_tau=False).passed
