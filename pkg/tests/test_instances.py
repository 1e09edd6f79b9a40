import json

import pytest

from hopfcyclic.fields import QQq, GF
from hopfcyclic.hopf import check_hopf_axioms, lc_equal
from hopfcyclic.instances import (INVOLUTIVE, InstanceSpec, InvalidGroupTable,
                                  build_instance, default_pairs, load_group,
                                  pair_for)
from hopfcyclic.rewriting import NonConfluentPresentation

from conftest import instance

q = QQq.gen


def test_z2_group_algebra():
    G = instance("group:Z2")
    assert len(G.basis_upto(0)) == 2
    g = G.g("g")
    assert G.antipode_word(g) == {g: 1}


def test_uqsl2_antipode_values():
    U = instance("uqsl2")
    assert lc_equal(U.antipode_word(U.K), {U.Ki: QQq(1)})
    assert lc_equal(U.antipode_word(U.x), {(-1, 1, 0): -q ** 2})


def test_aslq2_coproduct_of_x():
    A = instance("aslq2")
    assert lc_equal(A.coproduct_word(A.x),
                    {(A.x, A.x): QQq(1), (A.u, A.v): QQq(1)})


def test_every_advertised_involutive_pair_passes():
    for name, key in INVOLUTIVE.items():
        H = build_instance(name)
        assert H.spec.pairs[key]["involutive"] is True


def test_instance_spec_with_field():
    G = build_instance(InstanceSpec("group:Z2", field=GF(2)))
    assert G.field == GF(2)
    assert set(G.spec.pairs) == {"epsilon,1", "epsilon,g"}


def test_unknown_instance_and_pair():
    with pytest.raises(ValueError):
        build_instance("nothing")
    with pytest.raises(KeyError):
        pair_for(instance("aslq2"), "epsilon,s")


def test_center_pairs_of_s3():
    # only the identity is central in S3
    assert list(default_pairs(instance("group:S3"))) == ["epsilon,1"]


@pytest.mark.parametrize("table,msg", [
    ([[0, 1], [1, 1]], "inverse"),
    ([[0, 1], [1]], "table"),
    ([[1, 0], [0, 0]], "identity"),
])
def test_invalid_group_tables(tmp_path, table, msg):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"elements": ["a", "b"], "table": table}))
    with pytest.raises(InvalidGroupTable) as e:
        load_group(str(p))
    assert msg in str(e.value)


def test_group_from_file(tmp_path):
    p = tmp_path / "k4.json"
    names = ["e", "a", "b", "c"]
    table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    p.write_text(json.dumps({"elements": names, "table": table}))
    G = build_instance("group:%s" % p, check_pairs=False)
    assert check_hopf_axioms(G, 0).passed
    assert len(default_pairs(G)) == 4


LAURENT_FILE = {
    "name": "laurent_file", "field": "Q",
    "generators": ["z", "Z"], "inverses": {"z": "Z"}, "rules": [],
    "coproduct": {"z": [[1, "z", "z"]], "Z": [[1, "Z", "Z"]]},
    "counit": {"z": 1, "Z": 1},
    "antipode": {"z": [[1, "Z"]], "Z": [[1, "z"]]},
    "flags": {"commutative": True, "cocommutative": True},
}


def test_presentation_file(tmp_path):
    p = tmp_path / "laurent.json"
    p.write_text(json.dumps(LAURENT_FILE))
    H = build_instance("file:%s" % p)
    assert check_hopf_axioms(H, 3).passed
    assert H.mul_w(("z",), ("Z",)) == {(): 1}


def test_non_confluent_file_is_rejected(tmp_path):
    data = dict(LAURENT_FILE, generators=["z", "Z", "w"],
                rules=[{"lhs": "z w", "rhs": [["1", "Z"]]},
                       {"lhs": "w z", "rhs": [["1", "w"]]}])
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(data))
    with pytest.raises(NonConfluentPresentation):
        build_instance("file:%s" % p)
