import pytest

from qsc import fm
from qsc.cartan import EpsilonSeq
from qsc.fixtures import names, fixture, compare
from qsc.lweights import Monomial, QChar, Spec, a_inverse, d, height_from, parse_monomial, y, yt

E32 = EpsilonSeq.standard(3, 2)
E21 = EpsilonSeq.standard(2, 1)
ONE = Spec()


def test_eps32_y11_chain():
    r = fm.run(E32, y(1, ONE))
    assert r.ok
    assert [c for _, c in r.sorted_terms()] == [1] * 5
    labels = [(e.i, e.a) for e in r.sorted_edges()]
    assert labels == [(1, Spec.q(1)), (2, Spec.q(2)), (3, Spec.q(3)), (4, Spec.q(2, -1))]
    assert r.sorted_terms()[-1][0] == yt(E32, 4, Spec.q(1), -1)


@pytest.mark.parametrize("M,N", [(2, 1), (3, 2), (1, 3)])
def test_d_is_one_dimensional(M, N):
    eps = EpsilonSeq.standard(M, N)
    r = fm.run(eps, d())
    assert r.ok and r.qchar == QChar({d(): 1}) and not r.edges


def test_failure():
    hw = parse_monomial("Y[1,1] Yt[2,-q^1]", E21)
    r = fm.run(E21, hw)
    assert r.status == fm.FAILED
    assert r.failed_direction == 1
    assert r.failed_at == parse_monomial("Y[1,q^2]^-1 Yt[2,-q^1]^-1", E21)
    assert r.failed_at in r.qchar


def test_limits():
    hw = y(1, ONE) * y(2, Spec.q(3))
    r = fm.run(E32, hw, max_monomials=3)
    assert r.status == fm.LIMIT
    r = fm.run(E32, hw, max_steps=2)
    assert r.status == fm.LIMIT and r.steps == 3


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        fm.run(EpsilonSeq.standard(2, 2), y(1, ONE))
    with pytest.raises(ValueError):
        fm.run(EpsilonSeq.parse("101"), y(1, ONE))
    with pytest.raises(ValueError):
        fm.run(E32, y(1, ONE, -1))


@pytest.mark.parametrize("name", names())
def test_fixture(name):
    fx = fixture(name)
    assert compare(fx, fm.run(fx.eps, fx.hw)) == []


TENSORS = [
    (E32, y(1, ONE) * y(1, Spec.q(4))),
    (E32, y(2, ONE) * yt(E32, 4, Spec.q(1, -1))),
    (E21, y(1, ONE) * y(2, Spec.q(5))),
    (EpsilonSeq.standard(2, 3), y(1, ONE) * yt(EpsilonSeq.standard(2, 3), 3, Spec.q(2))),
]


@pytest.mark.parametrize("eps,hw", TENSORS)
def test_cone_and_edges(eps, hw):
    r = fm.run(eps, hw)
    assert r.status in (fm.SUCCESS, fm.FAILED)
    for m in r.qchar:
        assert min(height_from(eps, hw, m)) >= 0
    assert r.qchar.mult(hw) == 1
    for e in r.edges:
        assert e.src * a_inverse(eps, e.i, e.a) == e.dst
    reached = {hw} | {e.dst for e in r.edges}
    assert reached == set(r.qchar)


def test_generic_tensor_product_multiplies():
    # far-apart spectral parameters give the product of the two characters
    a = fm.run(E32, y(1, ONE)).qchar
    b = fm.run(E32, y(1, Spec(1, 1, 0))).qchar
    r = fm.run(E32, y(1, ONE) * y(1, Spec(1, 1, 0)))
    assert r.ok and r.qchar == a * b


@pytest.mark.parametrize("eps,hw", TENSORS)
def test_deterministic(eps, hw):
    r1, r2 = fm.run(eps, hw), fm.run(eps, hw)
    assert fm.to_json(r1) == fm.to_json(r2)
    assert fm.to_dot(r1) == fm.to_dot(r2)


def test_dot_output():
    r = fm.run(E32, y(1, ONE))
    dot = fm.to_dot(r)
    assert dot.startswith("digraph qchar {")
    assert dot.count("->") == 4
    assert '[label="1,q^1"]' in dot and '[label="4,-q^2"]' in dot
    single = fm.to_dot(fm.run(E32, d()))
    assert single.count("[label=") == 1 and "->" not in single


def test_dot_multiplicity_suffix():
    dot = fm.to_dot(fm.run(E32, y(1, ONE, 2)))
    assert "(×2)" in dot


def test_json_output():
    r = fm.run(E21, parse_monomial("Y[1,1] Yt[2,-q^1]", E21))
    obj = fm.to_json_obj(r)
    assert obj["status"] == "Failed" and obj["direction"] == 1
    assert len(obj["terms"]) == len(r.qchar)
    back = QChar.from_json_obj(obj, E21)
    assert back == r.qchar


def test_lattice_classes():
    for M, N in [(3, 2), (2, 3), (4, 1)]:
        eps = EpsilonSeq.standard(M, N)
        for i in range(1, M + 1):
            assert fm.lattice_violations(fm.run(eps, y(i, ONE)), "Y", i) == []
        for j in range(M, M + N):
            assert fm.lattice_violations(fm.run(eps, yt(eps, j, ONE)), "Yt", j) == []
    with pytest.raises(ValueError):
        fm.lattice_class(E32, "Z", 1, 1)
