import random

import pytest
from hypothesis import given, settings, strategies as st

from qsc import fm
from qsc.cartan import EpsilonSeq
from qsc.lweights import Monomial, QChar, Spec, a_inverse, d, parse_monomial, y, yt
from qsc.restriction import (
    RULE_LITERAL,
    RULE_SWAP_AT_M,
    Interval,
    RestrictedMonomial,
    ZKey,
    beta,
    decompose_rank1,
    group_by_z,
    local_qchar,
    tau,
    tau_generator,
    tau_of_d,
)

E32 = EpsilonSeq.standard(3, 2)
E21 = EpsilonSeq.standard(2, 1)
ONE = Spec()
PAIRS = [(2, 1), (1, 2), (3, 2), (2, 3), (3, 1), (1, 3), (4, 2), (2, 4)]


def test_interval():
    assert Interval.parse("2..4") == Interval(2, 4)
    assert Interval.parse("3") == Interval(3, 3)
    assert Interval.of([3, 2]) == Interval(2, 3)
    with pytest.raises(ValueError):
        Interval.of([1, 3])
    with pytest.raises(ValueError):
        Interval(0, 2).check(E32)


def test_beta_examples():
    m = parse_monomial("Y[1,q^2]^-1 Y[2,q^1]", E32)
    assert beta(E32, [1], m) == y(1, Spec.q(2), -1)
    assert beta(E32, [3], a_inverse(E32, 3, Spec.q(1))) == d(-1)
    assert beta(E21, [1, 2], y(1, ONE)) == y(1, ONE)
    assert beta(E32, [1], d()) == Monomial()


def test_tau_examples():
    a = Spec.q(4, -1)
    assert tau(E21, [1], y(1, a)) == RestrictedMonomial(y(1, a), {ZKey(2, a): 1})
    assert tau(E21, [1], y(2, a)) == RestrictedMonomial(Monomial(), {ZKey(2, a.mul_q(1)): 1, ZKey(2, a.mul_q(-1)): 1})


@pytest.mark.parametrize("M,N", PAIRS)
def test_tau_of_d_has_no_z(M, N):
    eps = EpsilonSeq.standard(M, N)
    for lo in range(1, eps.n):
        for hi in range(lo, eps.n):
            for a in (ONE, Spec.q(3, -1)):
                r = tau_of_d(eps, range(lo, hi + 1), a)
                assert r.z == ()
                assert r == tau(eps, range(lo, hi + 1), d())


def test_literal_rule_breaks_tau_of_d():
    bad = 0
    for M, N in PAIRS:
        eps = EpsilonSeq.standard(M, N)
        for lo in range(1, eps.n):
            for hi in range(lo, eps.n):
                if tau_of_d(eps, range(lo, hi + 1), ONE, RULE_LITERAL).z:
                    bad += 1
    assert bad > 0


@pytest.mark.parametrize("M,N", [(3, 2), (2, 3), (2, 4), (4, 3)])
def test_kernel_witness(M, N):
    eps = EpsilonSeq.standard(M, N)
    for k in range(-5, 5):
        a = Spec.q(k, (-1) ** k)
        assert tau(eps, [M], y(M - 1, a) * yt(eps, M + 1, a)) == RestrictedMonomial(Monomial())
        # a single factor is not in the kernel
        assert tau(eps, [M], y(M - 1, a)).z


def test_kernel_witness_short_sides():
    # with M = 1 or N = 1 one factor is absent; the other one alone dies
    e = EpsilonSeq.standard(1, 3)
    assert tau(e, [1], yt(e, 2, Spec.q(1))) == RestrictedMonomial(Monomial())
    e = EpsilonSeq.standard(3, 1)
    assert tau(e, [3], y(2, Spec.q(1))) == RestrictedMonomial(Monomial())


def _random_monomial(rng, eps, with_d=True):
    m = Monomial()
    for _ in range(rng.randint(1, 5)):
        a = Spec.q(rng.randint(-4, 4), rng.choice((1, -1)))
        e = rng.choice((-2, -1, 1, 2))
        kind = rng.randrange(3 if with_d else 2)
        if kind == 0:
            m = m * y(rng.randint(1, eps.M), a, e)
        elif kind == 1:
            lo = eps.M if with_d else eps.M + 1
            if lo < eps.n:
                m = m * yt(eps, rng.randint(lo, eps.n - 1), a, e)
        else:
            m = m * d(e)
    return m


@pytest.mark.parametrize("M,N", [(3, 2), (2, 3), (2, 1), (1, 2)])
def test_injectivity_smoke(M, N):
    eps = EpsilonSeq.standard(M, N)
    rng = random.Random(M * 10 + N)
    js = [([j], False) for j in range(1, eps.n) if j != M]
    js += [([M, M + 1], True)] if M + 1 < eps.n else []
    js += [([M - 1, M], True)] if M > 1 else []
    for J, with_d in js:
        seen = {}
        while len(seen) < 1000:
            m = _random_monomial(rng, eps, with_d)
            seen[m] = tau(eps, J, m)
        assert len(set(seen.values())) == len(seen), J


def test_d_dies_away_from_M():
    # tau_{j}(D) = 1 for j != M, so injectivity is a statement about the Y/Yt part
    assert tau(E32, [1], d()) == RestrictedMonomial(Monomial())


@given(st.integers(0, 10 ** 6))
@settings(max_examples=200)
def test_forget_z_is_beta(seed):
    rng = random.Random(seed)
    M, N = rng.choice(PAIRS)
    eps = EpsilonSeq.standard(M, N)
    lo = rng.randint(1, eps.n - 1)
    J = range(lo, rng.randint(lo, eps.n - 1) + 1)
    m = _random_monomial(rng, eps)
    assert tau(eps, J, m).inner == beta(eps, J, m)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=300)
def test_commutative_square(seed):
    rng = random.Random(seed)
    M, N = rng.choice(PAIRS)
    eps = EpsilonSeq.standard(M, N)
    m = _random_monomial(rng, eps)
    i = rng.randint(1, eps.n - 1)
    J = range(rng.randint(1, i), rng.randint(i, eps.n - 1) + 1)
    A = a_inverse(eps, i, Spec.q(rng.randint(-5, 5), rng.choice((1, -1))))
    assert tau(eps, J, m * A) == tau(eps, J, m) * RestrictedMonomial(beta(eps, J, A))


def test_literal_rule_breaks_commutative_square():
    rng = random.Random(3)
    eps = EpsilonSeq.standard(3, 2)
    bad = 0
    for _ in range(300):
        m = _random_monomial(rng, eps)
        i = rng.randint(1, eps.n - 1)
        J = range(rng.randint(1, i), rng.randint(i, eps.n - 1) + 1)
        A = a_inverse(eps, i, Spec.q(rng.randint(-5, 5)))
        lhs = tau(eps, J, m * A, RULE_LITERAL)
        rhs = tau(eps, J, m, RULE_LITERAL) * RestrictedMonomial(beta(eps, J, A))
        bad += lhs != rhs
    assert bad > 0


def test_tau_rejects_nonstandard():
    with pytest.raises(ValueError):
        tau_generator(EpsilonSeq.parse("101"), [1], "Y", 1, ONE)
    with pytest.raises(ValueError):
        tau(E32, [1], y(1, ONE), rule="bogus")


def test_group_by_z_single_term():
    chi = QChar({y(1, ONE): 1})
    assert len(group_by_z(E32, [1], chi)) == 1


def test_group_by_z_eps32_y11():
    chi = fm.run(E32, y(1, ONE)).qchar
    groups = group_by_z(E32, [1], chi)
    assert sorted(len(g) for g, _ in groups) == [1, 1, 1, 2]
    assert len({z for _, z in groups}) == len(groups)
    for g, _ in groups:
        assert decompose_rank1(E32, 1, g) is not None
    for g, _ in group_by_z(E32, [3], chi):
        dec = decompose_rank1(E32, 3, g)
        assert dec is not None
        assert len(g) in (1, 2)


def test_decompose_rank1_rejects_non_characters():
    # a lone lowest term of an sl2 string is not a character
    m = y(1, Spec.q(2), -1)
    assert decompose_rank1(E32, 1, QChar({m: 1})) is None
    # top term without its partner
    assert decompose_rank1(E32, 1, QChar({y(1, ONE): 1, y(1, Spec.q(2), -1): 2})) is None


def test_local_qchar_dispatch():
    assert local_qchar(E32, 1, y(1, ONE)).dimension() == 2
    assert local_qchar(E32, 4, yt(E32, 4, ONE)).dimension() == 2
    assert local_qchar(E32, 3, y(3, ONE) * y(3, Spec.q(2))).dimension() == 2
    assert local_qchar(E32, 3, d(-1)).dimension() == 1
