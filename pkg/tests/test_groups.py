"""Finite abelian grading groups and their bicharacters."""

from fractions import Fraction

import pytest

from colorinv.cyclo import CycloRational
from colorinv.groups import Bicharacter, FiniteAbelianGroup, validate_bicharacter


def test_builtin_bicharacters_validate(cfgs):
    for name, cfg in cfgs.items():
        rpt = validate_bicharacter(cfg.chi, exhaustive_limit=729)
        assert rpt.ok, (name, rpt.failures)


def test_wrong_shape_exponent_matrix_rejected():
    grp = FiniteAbelianGroup([2])
    with pytest.raises(ValueError):
        Bicharacter(grp, [[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        Bicharacter(grp, [])


def test_group_basics():
    grp = FiniteAbelianGroup([2, 2])
    assert grp.order == 4
    assert grp.identity == (0, 0)
    assert grp.add((1, 0), (1, 1)) == (0, 1)
    assert grp.neg((1, 1)) == (1, 1)
    grp9 = FiniteAbelianGroup([3, 3])
    assert grp9.order == 9
    assert grp9.neg((1, 2)) == (2, 1)


def test_known_epsilon_values(cfgs):
    minus_one = CycloRational.from_rational(Fraction(-1))
    one = CycloRational.one()
    sup = cfgs["super"].chi
    assert sup.eps((1,), (1,)) == minus_one
    assert sup.eps((0,), (1,)) == one
    z4 = cfgs["z4"].chi
    assert z4.eps((1,), (1,)) == minus_one
    assert z4.eps((1,), (2,)) == one
    assert z4.eps((1,), (3,)) == minus_one
    assert z4.eps((3,), (3,)) == minus_one
    z33 = cfgs["z3z3"].chi
    assert z33.eps((1, 0), (0, 1)) == CycloRational.root(3, 1)
    assert z33.eps((0, 1), (1, 0)) == CycloRational.root(3, 2)


def test_skew_symmetry_exhaustive(cfgs):
    for cfg in cfgs.values():
        chi = cfg.chi
        for g in chi.group.elements():
            for h in chi.group.elements():
                assert chi.eps(g, h) * chi.eps(h, g) == CycloRational.one()


def test_biadditivity_exhaustive_small(cfgs):
    for name in ("super", "z2z2", "z4"):
        chi = cfgs[name].chi
        grp = chi.group
        els = list(grp.elements())
        for g in els:
            for h in els:
                for k in els:
                    assert chi.eps(grp.add(g, h), k) == chi.eps(g, k) * chi.eps(h, k)
                    assert chi.eps(g, grp.add(h, k)) == chi.eps(g, h) * chi.eps(g, k)


def test_parity_partition_sizes(cfgs):
    expected = {
        "trivial": (1, 0),
        "super": (1, 1),
        "z4": (2, 2),
        "z2z2": (2, 2),
        "z3z3": (9, 0),
    }
    for name, (ne, no) in expected.items():
        chi = cfgs[name].chi
        assert len(chi.even_elements()) == ne
        assert len(chi.odd_elements()) == no
        for g in chi.even_elements():
            assert chi.parity_bit(g) == 0
        for g in chi.odd_elements():
            assert chi.parity_bit(g) == 1


def test_element_ordering_identity_first(cfgs):
    for cfg in cfgs.values():
        chi = cfg.chi
        ordered = list(chi.element_order())
        assert ordered == list(chi.even_elements()) + list(chi.odd_elements())
        assert ordered[0] == chi.group.identity
        assert sorted(ordered) == sorted(chi.group.elements())
        for pos, g in enumerate(ordered):
            assert chi.position(g) == pos


def test_parity_matches_self_pairing(cfgs):
    for cfg in cfgs.values():
        chi = cfg.chi
        minus_one = CycloRational.from_rational(Fraction(-1))
        for g in chi.group.elements():
            val = chi.eps(g, g)
            if chi.parity_bit(g):
                assert val == minus_one
            else:
                assert val == CycloRational.one()


def test_root_shortcut(cfgs):
    for cfg in cfgs.values():
        chi = cfg.chi
        for e in range(-3, 7):
            assert chi.root(e) * chi.root(-e) == CycloRational.one()
            assert chi.root(e + 1) == chi.root(e) * chi.root(1)
        assert chi.eps(chi.group.identity, chi.group.identity) == CycloRational.one()


def test_eps_exponent_consistent_with_eps(cfgs):
    for cfg in cfgs.values():
        chi = cfg.chi
        for g in chi.group.elements():
            for h in chi.group.elements():
                assert chi.eps(g, h) == chi.root(chi.eps_exponent(g, h))
