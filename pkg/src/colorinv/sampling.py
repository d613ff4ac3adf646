"""Seeded random generation of test data: Lambda_eps elements of prescribed
degree, degree-0 points, and polynomials.  All functions take an explicit
random.Random so verification runs are reproducible."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .epsalgebra import words_of_degree
from .sympoly import SymPolynomial, enumerate_sym_basis
from .tensors import PRIMAL, DUAL, GradedTensor
from .traces import W0Point

def standard_test_algebra(chi, truncation=4):
    """An eps-Grassmann algebra with two generators per group element, so
    words of every degree exist at every parity the group allows."""
    degs = []
    for g in chi.element_order():
        degs.extend([g, g])
    from .epsalgebra import EpsAlgebra
    return EpsAlgebra(chi, degs, truncation)

def random_rational(rng):
    num = rng.randint(-4, 4)
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)

def random_eps_of_degree(alg, d, rng, max_len=2, terms=2):
    """A random homogeneous element of the given G-degree; zero only when no
    word of that degree exists within the length bound."""
    pool = words_of_degree(alg, d, max_len)
    out = alg.zero()
    if not pool:
        return out
    for _ in range(terms):
        w = pool[rng.randrange(len(pool))]
        c = random_rational(rng)
        if c:
            out = out + alg.monomial(w, c)
    if out.is_zero():
        out = alg.monomial(pool[rng.randrange(len(pool))], 1)
    return out

def random_w0_point(shape, alg, rng, density=0.7, max_len=2):
    """A random degree-0 point of W with homogeneous coefficients."""
    grp = shape.chi.group
    space = shape.space
    parts = []
    for b, t in shape.pairs:
        variance = (PRIMAL,) * b + (DUAL,) * t
        terms = {}
        for idx in itertools.product(range(1, space.dim + 1), repeat=b + t):
            if rng.random() > density:
                continue
            d = grp.sum([space.degree(i) for i in idx[:b]]
                        + [grp.neg(space.degree(i)) for i in idx[b:]])
            lam = random_eps_of_degree(alg, grp.neg(d), rng, max_len)
            if lam:
                terms[idx] = lam
        parts.append(GradedTensor(space, alg, variance, terms))
    return W0Point(shape, alg, parts)

def random_sym_polynomial(shape, r, rng, terms=4):
    """A random polynomial supported on degree <= r monomials."""
    from .cyclo import as_cyclo
    out = SymPolynomial.zero(shape)
    for _ in range(terms):
        deg = rng.randint(1, r)
        basis = enumerate_sym_basis(shape, deg)
        if not basis:
            continue
        mono = basis[rng.randrange(len(basis))]
        c = as_cyclo(random_rational(rng))
        if c:
            out = out + SymPolynomial(shape, {mono: c})
    return out
