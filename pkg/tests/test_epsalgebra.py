"""Truncated sign-commutative coefficient algebras and normal ordering."""

import itertools
import random

from colorinv.cyclo import CycloRational
from colorinv.epsalgebra import (
    EpsElement,
    filtration_level,
    filtration_member,
    hop,
    normal_order,
    words_of_degree,
)
from colorinv.sampling import random_eps_of_degree, standard_test_algebra


def brute_normal(alg, word):
    """Sort a word by adjacent swaps, one eps factor per swap; None if the
    word dies (repeated odd letter)."""
    chi = alg.chi
    c = CycloRational.one()
    w = list(word)
    swapped = True
    while swapped:
        swapped = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                c = c * chi.eps(alg.degree(w[i]), alg.degree(w[i + 1]))
                w[i], w[i + 1] = w[i + 1], w[i]
                swapped = True
    for i in range(len(w) - 1):
        if w[i] == w[i + 1] and alg.gen_parity[w[i] - 1]:
            return None
    return c, tuple(w)


def chain_product(alg, word):
    out = alg.one()
    for i in word:
        out = out * alg.gen(i)
    return out


def test_normal_order_matches_brute_force(algebras):
    for name in ("super", "z4"):
        alg = algebras[name]
        gens = range(1, alg.ngens + 1)
        for length in (1, 2, 3):
            for word in itertools.product(gens, repeat=length):
                expected = brute_normal(alg, word)
                got = normal_order(alg, word)
                assert got == expected, (name, word)
                elem = chain_product(alg, word)
                if expected is None:
                    assert elem.is_zero()
                else:
                    c, w = expected
                    assert elem == alg.monomial(w, c)


def test_multiplication_associative_seeded(algebras):
    for name in ("super", "z3z3"):
        alg = algebras[name]
        rng = random.Random("assoc/%s" % name)
        els = list(alg.chi.group.elements())
        for _ in range(12):
            a = random_eps_of_degree(alg, rng.choice(els), rng)
            b = random_eps_of_degree(alg, rng.choice(els), rng)
            c = random_eps_of_degree(alg, rng.choice(els), rng)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_generator_commutation_exhaustive(algebras):
    for alg in algebras.values():
        chi = alg.chi
        for i in range(1, alg.ngens + 1):
            for j in range(1, alg.ngens + 1):
                lhs = alg.gen(i) * alg.gen(j)
                rhs = (alg.gen(j) * alg.gen(i)).scale(
                    chi.eps(alg.degree(i), alg.degree(j)))
                assert lhs == rhs


def test_odd_squares_vanish(algebras):
    for alg in algebras.values():
        for i in range(1, alg.ngens + 1):
            sq = alg.gen(i) * alg.gen(i)
            if alg.gen_parity[i - 1]:
                assert sq.is_zero()
            else:
                assert not sq.is_zero()


def test_truncation_kills_long_words(algebras):
    alg = algebras["trivial"]
    elem = alg.one()
    for _ in range(alg.truncation):
        elem = elem * alg.gen(1)
    assert not elem.is_zero()
    assert (elem * alg.gen(1)).is_zero()


def test_hop_round_trip_and_identity(algebras):
    for name in ("super", "z2z2"):
        alg = algebras[name]
        rng = random.Random("hop/%s" % name)
        els = list(alg.chi.group.elements())
        for _ in range(10):
            d = rng.choice(els)
            e = random_eps_of_degree(alg, rng.choice(els), rng)
            assert hop(hop(e, d), d, invert=True) == e
            assert hop(e, alg.chi.group.identity) == e


def test_hop_scales_homogeneous_elements(algebras):
    alg = algebras["super"]
    chi = alg.chi
    for h in chi.group.elements():
        for d in chi.group.elements():
            rng = random.Random("hopscale/%s/%s" % (h, d))
            e = random_eps_of_degree(alg, h, rng)
            assert hop(e, d) == e.scale(chi.eps(h, d))


def test_words_of_degree_brute_force(algebras):
    for name in ("super", "z4"):
        alg = algebras[name]
        grp = alg.chi.group
        by_degree = {}
        for length in range(0, 3):
            for word in itertools.combinations_with_replacement(
                    range(1, alg.ngens + 1), length):
                if any(word[i] == word[i + 1] and alg.gen_parity[word[i] - 1]
                       for i in range(len(word) - 1)):
                    continue
                d = grp.sum([alg.degree(i) for i in word])
                by_degree.setdefault(d, []).append(word)
        for d in grp.elements():
            got = words_of_degree(alg, d, max_len=2)
            assert sorted(got) == sorted(by_degree.get(d, []))
            for w in got:
                assert alg.word_degree(w) == d


def test_homogeneity_tracking(algebras):
    alg = algebras["z2z2"]
    rng = random.Random("homog")
    for d in alg.chi.group.elements():
        e = random_eps_of_degree(alg, d, rng)
        if e.is_zero():
            continue
        assert e.is_homogeneous_of(d)
        assert e.g_degree() == d
    a = random_eps_of_degree(alg, (0, 1), rng)
    b = random_eps_of_degree(alg, (1, 0), rng)
    if not (a * b).is_zero():
        assert (a * b).g_degree() == (1, 1)


def test_constant_and_proper_parts(algebras):
    alg = algebras["super"]
    e = alg.scalar(CycloRational.from_rational(3)) + alg.gen(1) * alg.gen(3)
    assert e.constant_part() == CycloRational.from_rational(3)
    assert e.proper_part() == alg.gen(1) * alg.gen(3)
    assert e.proper_part() + alg.scalar(e.constant_part()) == e


def test_filtration(algebras):
    alg = algebras["super"]
    assert filtration_level(alg.one()) == 0
    g3 = alg.gen(3)
    assert filtration_level(g3) == 3
    assert filtration_member(g3, 3)
    assert not filtration_member(g3, 2)
    prod = alg.gen(2) * alg.gen(4)
    assert filtration_level(prod) == 4
    assert filtration_member(prod, 4)
