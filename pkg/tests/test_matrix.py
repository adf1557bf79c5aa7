"""Local base realisations, bimodules, and the formal matrix builder."""

import numpy as np
import pytest

from finring import (Bounds, GFq, TrivialExt, TruncatedPoly, Zpk,
                     basic_ring, build_formal_matrix, corner_ring,
                     make_local, trivial_extension, zero_product_copy,
                     FormalMatrixSpec, TooLarge)
from finring.core import NotIdempotent, table_isomorphic, units
from finring.matrix import (BimRegular, SpecError, block_expansion,
                            free_bimodule_copy)
from finring.structure import jacobson_radical

from conftest import gf4_tables, mat2_gf2_tables, zmod_tables


def test_make_local_zpk_matches_modular_oracle():
    ring = make_local(Zpk(2, 3))
    add, mul = zmod_tables(8)
    assert (np.asarray(ring.add_table) == add).all()
    assert (np.asarray(ring.mul_table) == mul).all()


def test_make_local_gf4_is_isomorphic_to_oracle():
    ring = make_local(GFq(4))
    from finring.core import build_table_ring
    oracle = build_table_ring(*gf4_tables())
    assert table_isomorphic(ring, oracle)


def test_make_local_gf9():
    ring = make_local(GFq(9))
    assert ring.size == 9
    assert units(ring).size == 8


def test_gfq_rejects_non_prime_power():
    with pytest.raises(SpecError):
        make_local(GFq(6))


def test_truncated_poly_radical():
    ring = make_local(TruncatedPoly(2, 2))
    assert ring.size == 4
    rad = jacobson_radical(ring)
    assert rad.size == 2
    # x * x = 0
    x = int(rad.indices[1])
    assert ring.mul(x, x) == ring.zero


def test_trivial_extension_of_gf2_is_dual_numbers():
    ring = trivial_extension(GFq(2))
    assert ring.size == 4
    # isomorphic to GF(2)[x]/(x^2), not to Z/4
    assert table_isomorphic(ring, make_local(TruncatedPoly(2, 2)))
    assert not table_isomorphic(ring, make_local(Zpk(2, 2)))


def test_trivial_extension_base_spec_is_local():
    spec = TrivialExt(GFq(2), BimRegular(GFq(2)))
    ring = make_local(spec)
    assert ring.size == 4


def test_free_bimodule_actions():
    bim = free_bimodule_copy(GFq(2), 2)
    assert bim.size == 4
    ring = trivial_extension(GFq(2), bim)
    assert ring.size == 8
    rad = jacobson_radical(ring)
    assert rad.size == 4


def test_build_wood_basic_shape():
    s = GFq(2)
    e = zero_product_copy(s)
    # diagonal entries are None placeholders; corners come from the tuple
    spec = FormalMatrixSpec((s, s), ((None, e), (e, None)), name="wb")
    ring = build_formal_matrix(spec)
    assert ring.size == 16
    assert ring.name == "wb"
    lay = ring.layout
    assert lay.slots == ((0, 0), (0, 1), (1, 0), (1, 1))
    # the two diagonal matrix units are orthogonal idempotents summing to 1
    e0, e1 = lay.unit_idempotent(0), lay.unit_idempotent(1)
    assert ring.is_idempotent(e0) and ring.is_idempotent(e1)
    assert ring.add(e0, e1) == ring.one
    assert ring.mul(e0, e1) == ring.zero


def test_layout_codec_roundtrip():
    s = GFq(2)
    e = zero_product_copy(s)
    ring = build_formal_matrix(
        FormalMatrixSpec((s, s), ((None, e), (e, None))))
    lay = ring.layout
    for idx in range(ring.size):
        assert lay.encode(lay.decode(idx)) == idx
    with pytest.raises(ValueError):
        lay.encode({(0, 1): 5})


def test_block_expansion_of_field_is_matrix_ring():
    spec = FormalMatrixSpec((GFq(2),), ((None,),), expand=(2,))
    ring = build_formal_matrix(spec)
    from finring.core import build_table_ring
    oracle = build_table_ring(*mat2_gf2_tables())
    assert ring.size == 16
    assert table_isomorphic(ring, oracle)


def test_block_expansion_rejects_bad_vector():
    spec = FormalMatrixSpec((GFq(2),), ((None,),))
    with pytest.raises(SpecError):
        block_expansion(spec, (1, 2))
    with pytest.raises(SpecError):
        block_expansion(spec, (0,))


def test_expansion_order_growth():
    s = GFq(2)
    e = zero_product_copy(s)
    spec = FormalMatrixSpec((s, s), ((None, e), (e, None)), expand=(2, 1))
    ring = build_formal_matrix(spec)
    # corners 2^(4+1), bimodule cells 2^(2+2)
    assert ring.size == 512


def test_max_order_gate_on_builder():
    spec = FormalMatrixSpec((GFq(4),), ((None,),), expand=(3,))
    with pytest.raises(TooLarge):
        build_formal_matrix(spec, Bounds(max_order=1024))


def test_regular_cell_between_different_corners_rejected():
    with pytest.raises(SpecError):
        build_formal_matrix(FormalMatrixSpec(
            (GFq(2), GFq(4)),
            ((None, BimRegular(GFq(2))), (None, None))))


def test_corner_ring_at_diagonal_idempotent():
    s = GFq(2)
    e = zero_product_copy(s)
    ring = build_formal_matrix(
        FormalMatrixSpec((s, s), ((None, e), (e, None))))
    e0 = ring.layout.unit_idempotent(0)
    sub = corner_ring(ring, e0)
    assert sub.size == 2            # e.R.e = GF(2): the bimodules square to zero
    assert sub.one == 1
    with pytest.raises(NotIdempotent):
        corner_ring(ring, ring.layout.encode({(0, 1): 1}))
    assert corner_ring(ring, ring.one) is ring


def test_basic_ring_of_matrix_ring_is_the_field():
    ring = build_formal_matrix(
        FormalMatrixSpec((GFq(2),), ((None,),), expand=(2,)))
    b = basic_ring(ring)
    assert b.size == 2


def test_explicit_product_tables_checked_for_associativity():
    # a 3-chain with an explicit product for (0,1)x(1,2)->(0,2): using the
    # field multiplication makes the quadruple checks pass
    s = GFq(2)
    e = zero_product_copy(s)
    mul = np.asarray(make_local(s).mul_table)
    spec = FormalMatrixSpec(
        (s, s, s),
        ((None, e, e), (None, None, e), (None, None, None)),
        products={(0, 1, 2): mul})
    ring = build_formal_matrix(spec)
    assert ring.size == 64          # six GF(2)-sized slots
    lay = ring.layout
    a = lay.encode({(0, 1): 1})
    b = lay.encode({(1, 2): 1})
    assert ring.mul(a, b) == lay.encode({(0, 2): 1})


def test_product_table_into_zero_slot_rejected():
    s = GFq(2)
    e = zero_product_copy(s)
    mul = np.asarray(make_local(s).mul_table)
    spec = FormalMatrixSpec(
        (s, s, s),
        ((None, e, None), (None, None, e), (None, None, None)),
        products={(0, 1, 2): mul})
    with pytest.raises(SpecError):
        build_formal_matrix(spec)
