import itertools

import pytest

from abelcat import (EnumerationRefused, FpCategory, InvalidInput, LiftFailed, Matrix,
                     RingSpec, UnsupportedGenerator)
from abelcat.embedding import (HomFunctor, RModuleMap, augment_generator, check_embedding,
                               end_ring, full_witness, hom_module, lift_through_epic,
                               map_module)

Z4 = FpCategory(RingSpec.zmod(4))
Z2M = Z4.cyclic(2)
Z4M = Z4.cyclic(4)
MIXED = Z4.module(2, [[2, 0]])


def test_augment_generator():
    P, epics = augment_generator(Z4, Z4.free(1), [Z4M])
    assert P.gens == 1 and epics[Z4M].payload == Matrix.identity(1)
    assert Z4.is_monic(epics[Z4M]) and Z4.is_epic(epics[Z4M])
    P, epics = augment_generator(Z4, Z4.free(1), [MIXED, Z2M])
    assert P.invariant_factors == (0, (4, 4))
    assert epics[MIXED].payload == Matrix.identity(2)
    assert all(Z4.is_epic(e) for e in epics.values())


def test_augment_generator_rejects_non_free():
    with pytest.raises(UnsupportedGenerator):
        augment_generator(Z4, Z2M, [Z2M])
    Z = FpCategory(RingSpec.integers())
    with pytest.raises(UnsupportedGenerator):
        augment_generator(Z, Z.free(1), [])


def test_end_ring_small_cases():
    R = end_ring(Z4, Z4.free(1))
    assert R.order == 4
    Z2 = FpCategory(RingSpec.zmod(2))
    R2 = end_ring(Z2, Z2.free(2))
    assert R2.order == 16
    ident = R2.matrix_ring_identification()
    assert ident["bijective"] and ident["multiplicative"]
    assert all(R2.check_axioms().values())
    one = R2.unit
    for i in range(len(R2.basis)):
        e = tuple(int(i == j) for j in range(len(R2.basis)))
        assert R2.multiply(one, e) == R2.key(e) == R2.multiply(e, one)
    Z = FpCategory(RingSpec.integers())
    with pytest.raises(EnumerationRefused):
        end_ring(Z, Z.free(1))


def test_action_order_is_precomposition():
    R = end_ring(Z4, Z4.free(2))
    F = hom_module(R, Z4.free(2))
    for i, j in itertools.product(range(len(R.basis)), repeat=2):
        lhs = Z4.compose(F.act(i), F.act(j))
        assert Z4.mor_equal(lhs, F.act_element(R.mult_table[j][i]))


def test_hom_module_examples():
    R = end_ring(Z4, Z4.free(1))
    FP = hom_module(R, R.P, Z4.identity(R.P))
    assert FP.underlying.invariant_factors == (0, (4,))
    assert FP.underlying.order == R.order
    assert hom_module(R, Z4.zero_object()).underlying.order == 1
    F2 = hom_module(R, Z2M)
    assert F2.underlying.order == 2
    # r acts on Hom(Z/4, Z/2) = Z/2 as multiplication by r mod 2
    for r in range(4):
        coords = R.hom.coords(Z4.make_morphism(R.P, R.P, [[r]]))
        act = F2.act_element(coords)
        assert Z4.mor_equal(act, Z4.make_morphism(F2.underlying, F2.underlying,
                                                  [[r % 2]]))
    assert all(F2.check().values())


def test_map_module_identity_zero_and_additivity():
    F = HomFunctor(Z4, [Z4M, Z2M, MIXED])
    for A in (Z4M, Z2M, MIXED):
        assert Z4.mor_equal(map_module(F, Z4.identity(A)).map, Z4.identity(F(A).underlying))
        assert Z4.is_zero_mor(map_module(F, Z4.zero_mor(A, MIXED)).map)
    H = Z4.hom_group(MIXED, Z4M)
    for f in H.elements():
        for g in list(H.elements())[:3]:
            lhs = map_module(F, Z4.add(f, g)).map
            rhs = Z4.add(map_module(F, f).map, map_module(F, g).map)
            assert Z4.mor_equal(lhs, rhs)
        assert map_module(F, f).is_linear()


def test_lift_through_epic():
    P = Z4.free(1)
    e = Z4.make_morphism(P, Z2M, [[1]])
    q = lift_through_epic(Z4, e, e)
    assert Z4.mor_equal(Z4.compose(e, q), e)
    assert q.payload.mod(4).tolist()[0][0] in (1, 3)
    zero = lift_through_epic(Z4, Z4.zero_mor(P, Z2M), e)
    assert Z4.is_zero_mor(Z4.compose(e, zero))
    with pytest.raises(LiftFailed):
        lift_through_epic(Z4, Z4.identity(Z2M), e)
    x2 = Z4.make_morphism(P, Z4M, [[2]])
    with pytest.raises(LiftFailed):
        lift_through_epic(Z4, Z4.identity(Z4M), x2)


def test_full_witness_round_trip():
    F = HomFunctor(Z4, [Z4M, Z2M, MIXED])
    for A, B in itertools.product([Z4M, Z2M, MIXED], repeat=2):
        for f in Z4.hom_group(A, B).elements():
            y = full_witness(F, A, B, map_module(F, f))
            assert Z4.mor_equal(y, f)


def test_full_witness_on_z2_only():
    F = HomFunctor(Z4, [Z2M])
    FA = F(Z2M)
    # every additive endomap of F(Z/2) = Z/2, filtered by linearity
    found = []
    for t in range(2):
        m = Z4.make_morphism(FA.underlying, FA.underlying, [[t]])
        ytilde = RModuleMap(FA, FA, m)
        if ytilde.is_linear():
            found.append(full_witness(F, Z2M, Z2M, ytilde))
    assert len(found) == 2
    assert Z4.is_zero_mor(found[0]) and Z4.mor_equal(found[1], Z4.identity(Z2M))


def test_full_witness_rejects_non_linear_maps():
    F = HomFunctor(Z4, [MIXED])
    FA = F(MIXED)
    H = Z4.hom_group(FA.underlying, FA.underlying)
    bad = next(m for m in H.basis if not RModuleMap(FA, FA, m).is_linear())
    with pytest.raises(InvalidInput):
        full_witness(F, MIXED, MIXED, RModuleMap(FA, FA, bad))


def test_check_embedding_z4_example():
    rep = check_embedding(Z4, {"Z/4": Z4M, "Z/2": Z2M, "Z/2+Z/4": MIXED}, seed=1)
    assert rep.passed and rep.faithful and rep.full
    assert rep.end_ring_order == 256
    assert len(rep.hom_counts) == 9
    assert all(h["hom_count"] == h["hom_R_count"] for h in rep.hom_counts)
    assert rep.to_dict()["passed"]


def test_check_embedding_zero_object():
    rep = check_embedding(Z4, {"0": Z4.zero_object()}, ses_count=2, nonexact_count=2)
    assert rep.passed
