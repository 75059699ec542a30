import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelcat import FpCategory, InvalidInput, RingMismatch, RingSpec
from abelcat.diagram import Bounds, Generator
from abelcat.injectivity import (baer_injective, brute_injective, divisors, envelope_factor,
                                 envelope_minimal, inclusion_universe, injective_envelope,
                                 injectivity_verdict, is_essential, small_modules,
                                 split_check, submodule_inclusion, subgroups, zn_ideals)

import oracles


def cat(n):
    return FpCategory(RingSpec.zmod(n))


Z4 = cat(4)


def test_ideals():
    assert [i.generator for i in zn_ideals(4)] == [1, 2, 4]
    assert [i.generator for i in zn_ideals(7)] == [1, 7]
    assert len(zn_ideals(6)) == 4
    for ideal in zn_ideals(12):
        assert ideal.inclusion.dom.order == 12 // ideal.generator
        assert cat(12).is_monic(ideal.inclusion)
    with pytest.raises(InvalidInput):
        zn_ideals(1)


def test_baer_examples():
    assert baer_injective(Z4.cyclic(4)).baer
    v = baer_injective(Z4.cyclic(2))
    assert not v.baer and v.witnesses[0]["ideal"] == 2
    assert baer_injective(cat(2).cyclic(2)).baer
    with pytest.raises(RingMismatch):
        baer_injective(FpCategory(RingSpec.integers()).cyclic(2))


def test_brute_examples():
    universe = inclusion_universe(4)
    assert brute_injective(Z4.cyclic(4), universe)
    inc = Z4.make_morphism(Z4.cyclic(2), Z4.cyclic(4), [[2]])
    assert not brute_injective(Z4.cyclic(2), [inc])
    assert brute_injective(Z4.cyclic(2), [])
    v = injectivity_verdict(Z4.cyclic(2), universe)
    assert v.brute is False and v.agree and len(v.witnesses) == 2


def test_small_module_list():
    mods = small_modules(4)
    assert sorted(A.invariant_factors[1] for A in mods) == sorted(
        [(), (2,), (4,), (2, 2), (2, 4), (4, 4)])
    assert all(A.order <= 64 for A in small_modules(12))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_subgroup_counts(n):
    for A in small_modules(n):
        subs = subgroups(A)
        assert len({S for S, _ in subs}) == len(subs)
        for S, gens in subs:
            assert A.order % len(S) == 0
    # Z/n is cyclic: one subgroup per divisor
    assert len(subgroups(cat(n).cyclic(n))) == len(divisors(n))


def test_essential_examples():
    inc = Z4.make_morphism(Z4.cyclic(2), Z4.cyclic(4), [[2]])
    assert is_essential(inc)
    assert is_essential(Z4.identity(Z4.cyclic(2)))
    assert not is_essential(Z4.zero_mor(Z4.zero_object(), Z4.cyclic(2)))
    bp = Z4.biproduct(Z4.cyclic(2), Z4.cyclic(2))
    assert not is_essential(bp.i1)
    with pytest.raises(InvalidInput):
        is_essential(Z4.zero_mor(Z4.cyclic(2), Z4.cyclic(2)))


def test_split_examples():
    bp = Z4.biproduct(Z4.cyclic(2), Z4.cyclic(4))
    y = split_check(bp.i1)
    assert y is not None and Z4.mor_equal(Z4.compose(y, bp.i1), Z4.identity(bp.i1.dom))
    inc = Z4.make_morphism(Z4.cyclic(2), Z4.cyclic(4), [[2]])
    assert split_check(inc) is None
    one = Z4.identity(Z4.cyclic(4))
    assert Z4.mor_equal(split_check(one), one)


@pytest.mark.parametrize("n, d, m", [(4, 2, 4), (4, 4, 4), (6, 2, 2), (12, 2, 4),
                                     (12, 6, 12), (9, 3, 9), (8, 2, 8)])
def test_envelope_examples(n, d, m):
    assert envelope_factor(d, n) == m
    E, mono = injective_envelope(cat(n).cyclic(d))
    assert E.invariant_factors == (0, (m,))
    assert envelope_minimal(mono)


def test_envelope_of_a_sum():
    c = cat(12)
    A = c.module(2, [[2, 0], [0, 3]])
    E, m = injective_envelope(A)
    assert E.invariant_factors == (0, (12,))
    assert baer_injective(E).baer and is_essential(m) and envelope_minimal(m)


def test_envelope_minimality_detects_a_too_large_candidate():
    c = cat(12)
    inc = c.make_morphism(c.cyclic(2), c.cyclic(12), [[6]])
    assert not envelope_minimal(inc)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 4, 6, 8, 9]), st.integers(0, 10 ** 6))
def test_injective_modules_split_every_monic(n, seed):
    gen = Generator(seed, Bounds(ring=RingSpec.zmod(n), max_gens=2))
    c = gen.cat
    A = gen.module()
    bp = c.biproduct(A, gen.module())
    m = c.compose(gen.iso(bp.obj), bp.i1)
    if A.order * m.cod.order > 4096:
        return
    if baer_injective(A).baer:
        assert split_check(m) is not None


def test_some_non_injective_module_has_a_non_split_monic():
    inc = Z4.make_morphism(Z4.cyclic(2), Z4.cyclic(4), [[2]])
    assert not baer_injective(inc.dom).baer and split_check(inc) is None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 8, 9, 12]), st.integers(0, 10 ** 6))
def test_essential_extensions_compose(n, seed):
    rng = random.Random(seed)
    c = cat(n)
    C = rng.choice(small_modules(n, max_card=32))
    _, g2 = rng.choice(subgroups(C))
    b = submodule_inclusion(C, g2)
    B = b.dom
    _, g1 = rng.choice(subgroups(B))
    a = submodule_inclusion(B, g1)
    if is_essential(a) and is_essential(b):
        assert is_essential(c.compose(b, a))


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_baer_matches_brute_on_small_rings(n):
    universe = inclusion_universe(n)
    for A in small_modules(n):
        assert baer_injective(A).baer == brute_injective(A, universe)


def test_subgroup_presentations_have_the_right_size():
    A = cat(4).module(2, [[2, 0]])
    for S, gens in subgroups(A):
        m = submodule_inclusion(A, gens)
        assert m.dom.order == len(S) == oracles.image_order(m, 4)
