"""Mixed symmetric algebras: normal forms, dimensions, sign commutativity."""

import random

from colorinv.cyclo import CycloRational
from colorinv.sympoly import (
    MixedShape,
    SymPolynomial,
    SymVariable,
    enumerate_sym_basis,
    sym_dimension,
    sym_normalize,
    symmetrize,
)

DIMENSION_SERIES = {
    "trivial": [1, 4, 10, 20],
    "super": [1, 4, 8, 12],
    "z4": [1, 9, 41, 129],
    "z2z2": [1, 9, 41, 129],
    "z3z3": [1, 9, 45, 165],
}


def word_key(shape):
    return lambda word: tuple(shape.var_key(v) for v in word)


def test_dimension_series_frozen(cfgs):
    for name, series in DIMENSION_SERIES.items():
        shape = cfgs[name].shape
        assert [sym_dimension(shape, r) for r in range(4)] == series


def test_mixed_shape_dimension_series(cfgs):
    shape = MixedShape(cfgs["super"].space, [(2, 1), (1, 2)])
    assert [sym_dimension(shape, r) for r in range(4)] == [1, 16, 128, 688]


def test_dimension_matches_enumeration(cfgs):
    for name, cfg in cfgs.items():
        for r in range(3):
            basis = enumerate_sym_basis(cfg.shape, r)
            assert len(basis) == sym_dimension(cfg.shape, r)
            assert len(set(basis)) == len(basis)
            assert sorted(basis, key=word_key(cfg.shape)) == list(basis)


def test_normalize_is_idempotent_and_sorts(cfgs):
    for name in ("super", "z2z2"):
        shape = cfgs[name].shape
        rng = random.Random("norm/%s" % name)
        pool = shape.variables()
        for _ in range(40):
            seq = tuple(rng.choice(pool) for _ in range(rng.randint(0, 4)))
            res = sym_normalize(shape, seq)
            if res is None:
                continue
            c, word = res
            assert not c.is_zero()
            assert list(word) == sorted(word, key=shape.var_key)
            c2, word2 = sym_normalize(shape, word)
            assert word2 == word
            assert c2 == CycloRational.one()


def test_normalize_swap_relation(cfgs):
    for name in ("super", "z4", "z3z3"):
        shape = cfgs[name].shape
        chi = shape.chi
        rng = random.Random("swap/%s" % name)
        pool = shape.variables()
        for _ in range(40):
            k = rng.randint(2, 4)
            seq = [rng.choice(pool) for _ in range(k)]
            i = rng.randrange(k - 1)
            swapped = list(seq)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            res1 = sym_normalize(shape, tuple(seq))
            res2 = sym_normalize(shape, tuple(swapped))
            factor = chi.eps(shape.var_degree(seq[i]),
                             shape.var_degree(seq[i + 1]))
            if res1 is None:
                assert res2 is None
            else:
                c1, w1 = res1
                c2, w2 = res2
                assert w1 == w2
                assert c1 == c2 * factor


def test_odd_variable_squares_vanish(cfgs):
    shape = cfgs["super"].shape
    odd = SymVariable(1, (1,), (2,))
    assert shape.chi.parity_bit(shape.var_degree(odd)) == 1
    p = SymPolynomial.from_word(shape, (odd,))
    assert (p * p).is_zero()
    even = SymVariable(1, (1,), (1,))
    q = SymPolynomial.from_word(shape, (even,))
    assert not (q * q).is_zero()


def test_monomials_sign_commute(cfgs):
    for name in ("super", "z2z2"):
        shape = cfgs[name].shape
        chi = shape.chi
        grp = chi.group
        rng = random.Random("comm/%s" % name)
        pool = shape.variables()
        for _ in range(30):
            w1 = tuple(rng.choice(pool) for _ in range(rng.randint(1, 2)))
            w2 = tuple(rng.choice(pool) for _ in range(rng.randint(1, 2)))
            p1 = SymPolynomial.from_word(shape, w1)
            p2 = SymPolynomial.from_word(shape, w2)
            d1 = grp.sum([shape.var_degree(v) for v in w1])
            d2 = grp.sum([shape.var_degree(v) for v in w2])
            assert p1 * p2 == (p2 * p1).scale(chi.eps(d1, d2))


def test_symmetrize_is_a_projector(cfgs):
    for name in ("super", "z4"):
        shape = cfgs[name].shape
        rng = random.Random("proj/%s" % name)
        pool = shape.variables()
        for _ in range(8):
            seq = tuple(rng.choice(pool) for _ in range(rng.randint(1, 3)))
            once = symmetrize(shape, seq)
            twice = SymPolynomial(shape, {})
            for word, c in once.terms.items():
                twice = twice + symmetrize(shape, word).scale(c)
            assert twice == once


def test_polynomial_ring_operations(cfgs):
    shape = cfgs["trivial"].shape
    v11 = SymVariable(1, (1,), (1,))
    v12 = SymVariable(1, (1,), (2,))
    p = SymPolynomial.from_word(shape, (v11,))
    q = SymPolynomial.from_word(shape, (v12,), CycloRational.from_rational(2))
    assert p + q == q + p
    assert (p + q) * p == p * p + q * p
    assert p - p == SymPolynomial(shape, {})
    assert (p - p).is_zero()
    one = SymPolynomial.from_word(shape, ())
    assert one * p == p
    assert p.scale(CycloRational.zero()).is_zero()


def test_variable_checks(cfgs):
    shape = cfgs["super"].shape
    ok = SymVariable(1, (1,), (2,))
    shape.check_variable(ok)
    import pytest
    with pytest.raises((AssertionError, ValueError)):
        shape.check_variable(SymVariable(2, (1,), (1,)))
    with pytest.raises((AssertionError, ValueError)):
        shape.check_variable(SymVariable(1, (1, 1), (1,)))


def test_enumerate_by_multidegree(cfgs):
    shape = MixedShape(cfgs["trivial"].space, [(1, 1), (1, 1)])
    key = word_key(shape)
    full = enumerate_sym_basis(shape, 2)
    split = []
    for M in ((2, 0), (1, 1), (0, 2)):
        split.extend(enumerate_sym_basis(shape, 2, multidegree=M))
    assert sorted(full, key=key) == sorted(split, key=key)
    for word in enumerate_sym_basis(shape, 2, multidegree=(1, 1)):
        counts = [0, 0]
        for v in word:
            counts[v.summand - 1] += 1
        assert counts == [1, 1]
