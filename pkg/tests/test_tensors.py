"""Graded tensors, signed place permutations, and matrix-unit operators."""

import itertools
import random

from colorinv.cyclo import CycloRational
from colorinv.permutations import all_perms, compose, identity, inverse, inversions
from colorinv.sampling import random_eps_of_degree, standard_test_algebra
from colorinv.tensors import (
    GradedOperator,
    GradedTensor,
    act_perm,
    apply_operator,
    color_bracket,
    contract_pairs,
    eta_action,
    ev_pair,
    gamma,
    gamma_exponent,
    invert_operator,
    psi_derivation,
    random_gl_epsilon,
    tensor_product,
)


def test_gamma_exponent_brute_force(cfgs):
    for cfg in cfgs.values():
        chi = cfg.chi
        degs = cfg.space.degrees
        for sigma in all_perms(3):
            for triple in itertools.product(degs, repeat=3):
                expected = sum(chi.eps_exponent(triple[i - 1], triple[j - 1])
                               for i, j in inversions(sigma))
                assert gamma(chi, triple, sigma) == chi.root(expected)
                assert chi.root(gamma_exponent(chi, triple, sigma)) == chi.root(expected)


def test_act_perm_is_functorial(cfgs, algebras):
    for name in ("super", "z2z2"):
        cfg, alg = cfgs[name], algebras[name]
        dim = cfg.space.dim
        variance = (0, 1, 0)
        index_pool = list(itertools.product(range(1, dim + 1), repeat=3))
        indices = index_pool[:: max(1, len(index_pool) // 4)]
        for a in all_perms(3):
            for b in all_perms(3):
                for idx in indices:
                    t = GradedTensor.basis(cfg.space, alg, variance, idx)
                    lhs = act_perm(compose(a, b), t)
                    rhs = act_perm(a, act_perm(b, t))
                    assert lhs == rhs


def test_act_perm_identity_and_inverse(cfgs, algebras):
    cfg, alg = cfgs["z4"], algebras["z4"]
    rng = random.Random("actperm")
    for _ in range(10):
        idx = tuple(rng.randint(1, cfg.space.dim) for _ in range(3))
        t = GradedTensor.basis(cfg.space, alg, (0, 0, 1), idx)
        assert act_perm(identity(3), t) == t
        for s in all_perms(3):
            assert act_perm(inverse(s), act_perm(s, t)) == t


def test_tensor_product_associative(cfgs, algebras):
    cfg, alg = cfgs["super"], algebras["super"]
    rng = random.Random("tensassoc")
    els = list(cfg.chi.group.elements())
    for _ in range(8):
        parts = []
        for variance in ((0,), (1,), (0,)):
            idx = (rng.randint(1, cfg.space.dim),)
            coeff = random_eps_of_degree(alg, rng.choice(els), rng)
            parts.append(GradedTensor.basis(cfg.space, alg, variance, idx,
                                            coeff=coeff))
        a, b, c = parts
        assert tensor_product(tensor_product(a, b), c) == \
            tensor_product(a, tensor_product(b, c))


def test_ev_pair_is_the_dual_pairing(cfgs, algebras):
    for name in ("super", "z4"):
        cfg, alg = cfgs[name], algebras[name]
        for a in range(1, cfg.space.dim + 1):
            for b in range(1, cfg.space.dim + 1):
                val = ev_pair(GradedTensor.basis(cfg.space, alg, (1, 0), (a, b)))
                if a == b:
                    assert val == alg.one()
                else:
                    assert val.is_zero()


def test_contract_pairs_on_alternating_words(cfgs, algebras):
    cfg, alg = cfgs["super"], algebras["super"]
    for a, b, c, d in itertools.product(range(1, 3), repeat=4):
        t = GradedTensor.basis(cfg.space, alg, (1, 0, 1, 0), (a, b, c, d))
        val = contract_pairs(t)
        if a == b and c == d:
            assert val == alg.one()
        else:
            assert val.is_zero()


def test_operator_compose_identity_and_inverse(cfgs, algebras):
    for name in ("super", "z2z2"):
        cfg, alg = cfgs[name], algebras[name]
        ident = GradedOperator.identity(cfg.space, alg)
        rng = random.Random("ops/%s" % name)
        for _ in range(5):
            T, Tinv = random_gl_epsilon(cfg.space, alg, rng)
            assert T.compose(ident) == T
            assert ident.compose(T) == T
            assert T.compose(Tinv) == ident
            assert Tinv.compose(T) == ident
            assert invert_operator(T) == Tinv
            assert T.is_degree_preserving()


def test_operator_compose_associative(cfgs, algebras):
    cfg, alg = cfgs["z4"], algebras["z4"]
    rng = random.Random("opassoc")
    ops = [random_gl_epsilon(cfg.space, alg, rng)[0] for _ in range(3)]
    a, b, c = ops
    assert a.compose(b).compose(c) == a.compose(b.compose(c))


def test_matrix_unit_color_commutator(cfgs, algebras):
    for name in ("super", "z4"):
        cfg, alg = cfgs[name], algebras[name]
        chi = cfg.chi
        dim = cfg.space.dim
        degs = cfg.space.degrees

        def unit(a, b):
            return GradedOperator.matrix_unit(cfg.space, alg, a, b)

        grp = chi.group
        for a, b, c, d in itertools.product(range(1, dim + 1), repeat=4):
            lhs = color_bracket(unit(a, b), unit(c, d))
            dab = grp.sub(degs[a - 1], degs[b - 1])
            dcd = grp.sub(degs[c - 1], degs[d - 1])
            rhs = GradedOperator.zero(cfg.space, alg)
            if b == c:
                rhs = rhs + unit(a, d)
            if d == a:
                rhs = rhs - unit(c, b).scale(chi.eps(dab, dcd))
            assert lhs == rhs, (name, a, b, c, d)


def test_eta_action_is_multiplicative(cfgs, algebras):
    cfg, alg = cfgs["z2z2"], algebras["z2z2"]
    grp = cfg.chi.group
    t = GradedTensor.basis(cfg.space, alg, (0, 0), (2, 3))
    for g in grp.elements():
        for h in grp.elements():
            assert eta_action(g, eta_action(h, t)) == eta_action(grp.add(g, h), t)
    assert eta_action(grp.identity, t) == t


def test_psi_on_one_slot_is_operator_application(cfgs, algebras):
    cfg, alg = cfgs["super"], algebras["super"]
    for a in range(1, 3):
        for b in range(1, 3):
            x = GradedOperator.matrix_unit(cfg.space, alg, a, b)
            for i in range(1, 3):
                v = GradedTensor.basis(cfg.space, alg, (0,), (i,))
                assert psi_derivation(x, v) == apply_operator(v, x)


def test_psi_satisfies_twisted_leibniz(cfgs, algebras):
    cfg, alg = cfgs["super"], algebras["super"]
    chi = cfg.chi
    grp = chi.group
    degs = cfg.space.degrees
    for a, b in itertools.product(range(1, 3), repeat=2):
        x = GradedOperator.matrix_unit(cfg.space, alg, a, b)
        xdeg = grp.sub(degs[a - 1], degs[b - 1])
        for i, j in itertools.product(range(1, 3), repeat=2):
            u = GradedTensor.basis(cfg.space, alg, (0,), (i,))
            v = GradedTensor.basis(cfg.space, alg, (0,), (j,))
            t = tensor_product(u, v)
            lhs = psi_derivation(x, t)
            rhs = tensor_product(psi_derivation(x, u), v) + \
                tensor_product(u, psi_derivation(x, v)).scale(
                    chi.eps(xdeg, degs[i - 1]))
            assert lhs == rhs, (a, b, i, j)


def test_pairing_invariant_under_gl(cfgs, algebras):
    for name in ("super", "z2z2"):
        cfg, alg = cfgs[name], algebras[name]
        rng = random.Random("pairing/%s" % name)
        for _ in range(5):
            T, Tinv = random_gl_epsilon(cfg.space, alg, rng)
            for a in range(1, cfg.space.dim + 1):
                for b in range(1, cfg.space.dim + 1):
                    t = GradedTensor.basis(cfg.space, alg, (1, 0), (a, b))
                    moved = apply_operator(t, T, Tinv)
                    assert ev_pair(moved) == ev_pair(t)


def test_basis_slot_degrees(cfgs, algebras):
    cfg, alg = cfgs["z4"], algebras["z4"]
    t = GradedTensor.basis(cfg.space, alg, (0, 1, 0), (1, 2, 3))
    assert t.slot_degrees((1, 2, 3)) == (
        cfg.space.degrees[0], cfg.space.degrees[1], cfg.space.degrees[2])


def test_degree_preservation_detection(cfgs, algebras):
    cfg, alg = cfgs["super"], algebras["super"]
    same = GradedOperator.matrix_unit(cfg.space, alg, 1, 1)
    crossing = GradedOperator.matrix_unit(cfg.space, alg, 1, 2)
    assert same.is_degree_preserving()
    assert not crossing.is_degree_preserving()
