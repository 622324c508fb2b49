"""Product-layer tests.

Expected values marked [DERIVED] were computed by hand from the terminating
kernel sums (falling factorials for the Bose factor, single contraction of
the common index set for the Fermi factor) and frozen here.
"""

import random
from fractions import Fraction

import pytest

from cliffordweyl.algebra import (
    AlgebraSignature,
    CwElement,
    CwMonomial,
    bidegree,
    bose_p,
    bose_q,
    element_bidegree,
    fermi_gen,
    monomial_element,
    unit,
    zero,
)
from cliffordweyl.scalars import S_HALF, S_LAMBDA, S_ONE, Scalar
from cliffordweyl.starprod import (
    ProductKind,
    anti_bracket,
    element_star_words,
    eval_star_word,
    lie_bracket,
    poisson,
    product,
    star,
    super_bracket,
    supertrace_weyl,
    to_star_words,
    trace_clifford,
    wedge,
)

SIG = AlgebraSignature(3, 2)
W = [fermi_gen(SIG, i) for i in (1, 2, 3)]
P = [bose_p(SIG, i) for i in (1, 2)]
Q = [bose_q(SIG, i) for i in (1, 2)]


def rand_element(rng, sig, nterms=3, maxdeg=4):
    terms = {}
    for _ in range(rng.randint(1, nterms)):
        while True:
            cliff = rng.getrandbits(sig.n_fermi) if sig.n_fermi else 0
            wp = tuple(rng.randint(0, 2) for _ in range(sig.n_bose))
            wq = tuple(rng.randint(0, 2) for _ in range(sig.n_bose))
            m = CwMonomial(cliff, wp, wq)
            if m.z_degree() <= maxdeg:
                break
        terms[m] = Scalar.of(Fraction(rng.randint(-4, 4), rng.randint(1, 3)), rng.randint(-2, 2))
    return CwElement(sig, terms)


# -- frozen examples ---------------------------------------------------------


def test_star_generator_fixtures():
    assert star(P[0], Q[0]) == wedge(P[0], Q[0]) + unit(SIG).scale(S_HALF)
    assert star(W[0], W[0]) == unit(SIG)
    assert star(P[0], W[0]) == -wedge(W[0], P[0])
    assert star(W[0], P[0]) == wedge(W[0], P[0])


def test_wedge_fixtures():
    assert wedge(W[0], W[0]) == zero(SIG)
    assert wedge(P[0], W[0]) == -wedge(W[0], P[0])
    assert wedge(Q[0], P[0]) == wedge(P[0], Q[0])  # commuting symbols


def test_star_higher_order_weyl():
    # [DERIVED] p^2 * q^2 = p^2q^2 + 2pq + 1/2 at t=1
    p2 = wedge(P[0], P[0])
    q2 = wedge(Q[0], Q[0])
    expect = wedge(p2, q2) + wedge(P[0], Q[0]).scale(2) + unit(SIG).scale(S_HALF)
    assert star(p2, q2) == expect


def test_poisson_fixtures():
    assert poisson(P[0], Q[0]) == unit(SIG)
    assert poisson(W[0], W[0]) == unit(SIG).scale(2)
    assert poisson(W[0], P[0]) == zero(SIG)
    assert poisson(Q[0], P[0]) == -unit(SIG)


def test_bracket_fixtures():
    assert lie_bracket(P[0], Q[0]) == unit(SIG)
    assert anti_bracket(W[0], W[0]) == unit(SIG).scale(2)
    assert super_bracket(P[0], Q[0]) == wedge(P[0], Q[0]).scale(2)
    # Bose-parity grading: two Fermi generators bracket as a commutator
    assert super_bracket(W[0], W[0]) == zero(SIG)
    assert super_bracket(W[0], W[1]) == wedge(W[0], W[1]).scale(2)


def test_presentation_relations():
    # anticommutators/commutators of all generator pairs
    one = unit(SIG)
    for i, wi in enumerate(W):
        for j, wj in enumerate(W):
            assert anti_bracket(wi, wj) == (one.scale(2) if i == j else zero(SIG))
    for i, pi in enumerate(P):
        for j, qj in enumerate(Q):
            assert lie_bracket(pi, qj) == (one if i == j else zero(SIG))
            assert lie_bracket(qj, pi) == (-one if i == j else zero(SIG))
    for pi in P:
        for pj in P:
            assert lie_bracket(pi, pj) == zero(SIG)
    for qi in Q:
        for qj in Q:
            assert lie_bracket(qi, qj) == zero(SIG)
    for wi in W:
        for x in P + Q:
            assert anti_bracket(wi, x) == zero(SIG)


def test_fermi_volume_square_signs():
    # (w1*...*w2n)^*2 = (-1)^n for n <= 4
    for n in range(1, 5):
        sig = AlgebraSignature(2 * n, 0)
        vol = unit(sig)
        for i in range(1, 2 * n + 1):
            vol = star(vol, fermi_gen(sig, i))
        assert star(vol, vol) == unit(sig).scale((-1) ** n)


# -- invariants ---------------------------------------------------------------


def test_associativity_seeded_triples():
    rng = random.Random(1234)
    for _ in range(200):
        a = rand_element(rng, SIG)
        b = rand_element(rng, SIG)
        c = rand_element(rng, SIG)
        assert star(star(a, b), c) == star(a, star(b, c))


def test_associativity_pure_signatures():
    rng = random.Random(99)
    for sig in (AlgebraSignature(0, 2), AlgebraSignature(4, 0)):
        for _ in range(60):
            a = rand_element(rng, sig)
            b = rand_element(rng, sig)
            c = rand_element(rng, sig)
            assert star(star(a, b), c) == star(a, star(b, c))


def test_star_at_zero_is_wedge():
    sig0 = AlgebraSignature(3, 2, Scalar())
    rng = random.Random(5)
    for _ in range(80):
        a, b = rand_element(rng, sig0), rand_element(rng, sig0)
        assert star(a, b) == wedge(a, b)


def test_first_order_term_is_half_poisson():
    # with the deformation parameter set to the formal variable L, the star
    # product's L-expansion must start  wedge + (L/2)*poisson + O(L^2)
    sigL = AlgebraSignature(2, 1, S_LAMBDA)
    rng = random.Random(17)
    for _ in range(80):
        a, b = rand_element(rng, sigL, maxdeg=3), rand_element(rng, sigL, maxdeg=3)
        sp = star(a, b)
        order0 = sp.map_coefficients(lambda c: Scalar.from_gaussian(c.lam_coefficient(0)))
        order1 = sp.map_coefficients(lambda c: Scalar.from_gaussian(c.lam_coefficient(1)))
        assert order0 == wedge(a, b)
        assert order1.scale(2) == poisson(a, b)


def test_low_degree_weyl_bracket_equals_poisson():
    # commutator = Poisson bracket whenever the left factor has Z-degree <= 2
    sig = AlgebraSignature(0, 2)
    basis = []
    for dp1 in range(3):
        for dq1 in range(3 - dp1):
            for dp2 in range(3 - dp1 - dq1):
                for dq2 in range(3 - dp1 - dq1 - dp2):
                    basis.append(CwMonomial(0, (dp1, dp2), (dq1, dq2)))
    rng = random.Random(31)
    gs = [rand_element(rng, sig, nterms=4, maxdeg=5) for _ in range(6)]
    for m in basis:
        f = monomial_element(sig, m)
        for g in gs:
            assert lie_bracket(f, g) == poisson(f, g)


def test_bidegree_additive_through_star():
    rng = random.Random(77)
    mono = list(rand_element(rng, SIG, nterms=8).terms)
    for m1 in mono:
        for m2 in mono:
            prod = star(monomial_element(SIG, m1), monomial_element(SIG, m2))
            d = element_bidegree(prod)
            if prod:
                assert d == bidegree(m1) + bidegree(m2)


def test_product_kind_dispatch():
    a, b = P[0], Q[0]
    assert product(ProductKind.WEDGE, a, b) == wedge(a, b)
    assert product(ProductKind.STAR, a, b) == star(a, b)
    with pytest.raises(ValueError):
        product("nope", a, b)


def test_signature_mismatch():
    from cliffordweyl.algebra import SignatureMismatch

    with pytest.raises(SignatureMismatch):
        star(P[0], bose_p(AlgebraSignature(0, 2), 1))


# -- traces -------------------------------------------------------------------


def test_supertrace_fixtures():
    sig = AlgebraSignature(0, 1)
    p, q = bose_p(sig, 1), bose_q(sig, 1)
    assert supertrace_weyl(star(p, q)) == Scalar.of(Fraction(1, 2))
    with pytest.raises(Exception):
        supertrace_weyl(W[0])


def test_supertrace_kills_brackets():
    sig = AlgebraSignature(0, 2)
    rng = random.Random(11)
    for _ in range(100):
        a = rand_element(rng, sig)
        b = rand_element(rng, sig)
        # Bose-parity homogeneous parts, bracketed pairwise
        for da, xa in a.homogeneous_parts(lambda m: m.bose_degree() % 2).items():
            for db, xb in b.homogeneous_parts(lambda m: m.bose_degree() % 2).items():
                assert supertrace_weyl(super_bracket(xa, xb)) == Scalar()


def test_trace_clifford_fixtures():
    sig = AlgebraSignature(2, 0)
    assert trace_clifford(unit(sig)) == Scalar.of(2)
    assert trace_clifford(fermi_gen(sig, 1)) == Scalar()
    with pytest.raises(Exception):
        trace_clifford(unit(AlgebraSignature(3, 0)))
    with pytest.raises(Exception):
        trace_clifford(unit(AlgebraSignature(2, 1)))


def test_trace_clifford_kills_commutators():
    sig = AlgebraSignature(4, 0)
    rng = random.Random(13)
    for _ in range(60):
        a, b = rand_element(rng, sig), rand_element(rng, sig)
        assert trace_clifford(lie_bracket(a, b)) == Scalar()


# -- star words ---------------------------------------------------------------


def test_star_words_reconstruct_monomials():
    rng = random.Random(2718)
    for _ in range(40):
        while True:
            m = CwMonomial(
                rng.getrandbits(3),
                (rng.randint(0, 2), rng.randint(0, 2)),
                (rng.randint(0, 2), rng.randint(0, 2)),
            )
            if m.z_degree() <= 5:
                break
        acc = zero(SIG)
        for c, word in to_star_words(SIG, m):
            acc = acc + eval_star_word(SIG, word).scale(c)
        assert acc == monomial_element(SIG, m)


def test_element_star_words_reconstruct():
    rng = random.Random(281)
    for _ in range(15):
        e = rand_element(rng, SIG, nterms=3, maxdeg=4)
        acc = zero(SIG)
        for c, word in element_star_words(e):
            acc = acc + eval_star_word(SIG, word).scale(c)
        assert acc == e


def test_star_words_respect_t():
    # at t=0 a monomial is literally the word of its factors
    sig0 = AlgebraSignature(1, 1, Scalar())
    m = CwMonomial(1, (2,), (1,))
    words = to_star_words(sig0, m)
    assert len(words) == 1
    c, word = words[0]
    assert c == S_ONE
    assert word == (("w", 1), ("q", 1), ("p", 1), ("p", 1))
