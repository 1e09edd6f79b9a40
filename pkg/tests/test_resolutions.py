import pytest

from hopfcyclic import resolutions as R
from hopfcyclic.fields import QQq, parse_scalar
from hopfcyclic.hopf import counit_character, lc_equal
from hopfcyclic.instances import aslq2_delta

q = QQq.gen


@pytest.fixture(scope="module")
def uq():
    return R.load_resolution("uqsl2")


@pytest.fixture(scope="module")
def asl():
    return R.load_resolution("aslq2", cap=8)


def test_ranks(uq, asl):
    assert uq.ranks() == [1, 3, 3, 1]
    assert asl.ranks() == [1, 4, 7, 8, 8, 8, 8, 8, 8]


def test_unknown_resolution():
    with pytest.raises(R.ResolutionError):
        R.load_resolution("nothing")


def test_d_squared_uqsl2(uq):
    rep = R.verify_resolution(uq)
    assert rep.passed and not uq.errata
    assert not R.d_squared_residuals(uq)


def test_d_squared_aslq2_with_errata(asl):
    rep = R.verify_resolution(asl)
    assert rep.passed, rep.failures[:1]
    assert [e["id"] for e in asl.errata] == ["aslq2-1", "aslq2-2",
                                             "aslq2-3", "aslq2-4"]


def test_aslq2_low_degrees_need_no_errata():
    r = R.load_resolution("aslq2", cap=3, errata=False)
    assert not R.d_squared_residuals(r)


def test_printed_aslq2_fails():
    r = R.load_resolution("aslq2", cap=8, errata=False)
    assert R.d_squared_residuals(r)


def split(term):
    c, a, b, t = term.split("|")
    return parse_scalar(c), a, b, t


def test_errata_are_minimal_single_edits():
    for e in R.load_errata("aslq2"):
        c0, a0, b0, t0 = split(e["printed"])
        c1, a1, b1, t1 = split(e["corrected"])
        assert (a0, b0) == (a1, b1)
        if e["kind"] == "sign":
            assert c1 == -c0 and t1 == t0
        else:
            assert e["kind"] == "target" and c1 == c0 and t1 != t0
        assert e["reason"]


def test_each_erratum_is_needed():
    data = R.read_resolution_data("aslq2")
    errata = R.load_errata("aslq2")
    for skip in range(len(errata)):
        rest = errata[:skip] + errata[skip + 1:]
        r = R.build_resolution(data, 8, errata=rest)
        assert R.d_squared_residuals(r), errata[skip]["id"]


def test_uq_first_differential(uq):
    U = uq.H
    o = U.one_word
    assert lc_equal(uq.diffs[1]["e_x"], {("1", U.x, o): QQq(1),
                                         ("1", o, U.x): QQq(-1)})


# ---------------------------------------------------------------------------
# base change

def test_base_change_uqsl2(uq):
    eps = counit_character(uq.H)
    out = R.base_change_homology(uq, eps, eps, 5)
    assert out["dims"] == [1, 0, 0, 1, 0, 0]
    assert out["representatives"][3] == [{"e_x^e_y^e_s": 1}]


def test_base_change_aslq2(asl):
    A = asl.H
    out = R.base_change_homology(asl, counit_character(A), aslq2_delta(A), 5)
    assert out["dims"] == [0, 2, 2, 0, 0, 0]
    reps = out["representatives"][1]
    assert sorted(sorted(v) for v in reps) == [["e_u"], ["e_v"]]
    row = out["matrices"][1].dense()
    assert row == [[0, 0, 1 - q, (q - 1) / q]]


def test_base_change_swapped_factors_is_acyclic(asl):
    A = asl.H
    out = R.base_change_homology(asl, counit_character(A), aslq2_delta(A), 5,
                                 swap=True)
    assert out["dims"] == [0] * 6


# ---------------------------------------------------------------------------
# contracting homotopy

def test_augmentation_case_on_sigma_x(uq):
    U = uq.H
    h = R.UqHomotopy(uq)
    assert h.check_at(0, {("1", (1, 1, 0), U.one_word): U.one_scalar}) == {}


def test_negative_exponent_branch(uq):
    U = uq.H
    h = R.UqHomotopy(uq)
    xi = {("1", (-1, 2, 1), U.one_word): U.one_scalar}
    assert h.S(0, xi)
    assert h.check_at(0, xi) == {}


def test_homotopy_small_bounds(uq):
    rep = R.verify_homotopy_uqsl2(uq, 1, 1)
    assert rep.passed, rep.failures[:1]


def test_homotopy_as_printed_fails(uq):
    rep = R.verify_homotopy_uqsl2(uq, 1, 1, printed=True)
    assert not rep.passed


def test_homotopy_rejects_zero_bounds(uq):
    with pytest.raises(ValueError):
        R.verify_homotopy_uqsl2(uq, 0, 1)


# ---------------------------------------------------------------------------
# comparison with the bar resolution

def test_lift_first_step(uq):
    U = uq.H
    o = U.one_word
    f, rep = R.comparison_lift(uq, 3)
    assert rep.passed
    assert lc_equal(f[1]["e_x"], {((U.x,), o, o): QQq(1),
                                  ((o,), o, U.x): QQq(-1)})


def test_lift_is_a_chain_map_on_e_x_e_s(uq):
    f, _ = R.comparison_lift(uq, 2)
    B = R.BarResolution(uq.H)
    lhs = B.d(2, f[2]["e_x^e_s"])
    rhs = R.extend(uq.H, f[1], uq.diffs[2]["e_x^e_s"])
    assert lc_equal(lhs, rhs)


def test_lift_aslq2(asl):
    _, rep = R.comparison_lift(asl, 5)
    assert rep.passed


def test_bar_resolution_d_squared():
    from conftest import instance
    r = R.bar_resolution(instance("group:S3"), 3)
    assert not R.d_squared_residuals(r)


def test_truncated_resolution_refuses_the_cap_degree(asl):
    A = asl.H
    with pytest.raises(R.ResolutionError):
        R.base_change_homology(asl, counit_character(A), aslq2_delta(A), 8)
