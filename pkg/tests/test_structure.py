"""Radical, primitive decomposition, top profile."""

import numpy as np
import pytest

from finring import (GFq, Zpk, jacobson_radical, make_local,
                     primitive_decomposition, simple_type, top_profile)
from finring.core import (PreconditionUnmet, build_table_ring, ideal_module,
                          regular_module)
from finring.structure import (iso_witness, quotient_ring, radical_powers,
                               simple_module, top_support)

from conftest import mat2_gf2_tables, zmod_tables


def test_radical_of_z4():
    ring = build_table_ring(*zmod_tables(4))
    rad = jacobson_radical(ring)
    assert list(rad.indices) == [0, 2]


def test_radical_of_field_is_zero():
    ring = make_local(GFq(4))
    assert jacobson_radical(ring).size == 1


def test_radical_of_z6_is_zero():
    # Z/6 is semisimple (product of two fields)
    ring = build_table_ring(*zmod_tables(6))
    assert jacobson_radical(ring).size == 1


def test_radical_powers_of_z8():
    ring = make_local(Zpk(2, 3))
    chain = [list(p.indices) for p in radical_powers(ring)]
    assert chain == [[0, 2, 4, 6], [0, 4], [0]]


def test_quotient_ring_of_z4_by_radical():
    ring = build_table_ring(*zmod_tables(4))
    q = quotient_ring(ring, jacobson_radical(ring))
    assert q.size == 2
    assert q.mul(1, 1) == 1


def test_primitive_decomposition_of_z6():
    ring = build_table_ring(*zmod_tables(6))
    dec = primitive_decomposition(ring)
    # 1 = 3 + 4 splits into the two field components
    assert sorted(dec.prims) == [3, 4]
    assert dec.mu == (1, 1)
    assert len(dec.classes) == 2


def test_primitive_decomposition_of_mat2():
    ring = build_table_ring(*mat2_gf2_tables())
    dec = primitive_decomposition(ring)
    assert len(dec.prims) == 2
    assert dec.mu == (2,)                  # both primitives isomorphic
    assert len(dec.basic) == 1
    # the recorded witness pair multiplies back to the representatives
    (key, (x, y)), = dec.witnesses.items()
    e_rep = dec.prims[key[0]]
    e_other = dec.prims[key[1]]
    assert ring.mul(x, y) == e_rep
    assert ring.mul(y, x) == e_other


def test_iso_witness_none_for_different_classes():
    ring = build_table_ring(*zmod_tables(6))
    dec = primitive_decomposition(ring)
    assert iso_witness(ring, dec.basic[0], dec.basic[1]) is None


def test_top_profile_of_mat2():
    ring = build_table_ring(*mat2_gf2_tables())
    prof = top_profile(ring)
    assert prof.n == 1
    assert prof.mu == (2,)
    assert prof.field_sizes == (2,)
    assert prof.simple_sizes == (4,)       # the row space V = F2^2
    assert prof.describe() == "M_2(GF(2))"


def test_top_profile_of_z_mod_12():
    # Z/12 = Z/4 x Z/3: two classes, residue fields GF(2) and GF(3)
    ring = build_table_ring(*zmod_tables(12))
    prof = top_profile(ring)
    assert prof.n == 2
    assert sorted(prof.field_sizes) == [2, 3]
    assert prof.mu == (1, 1)
    assert prof.radical.size == 2


def test_simple_module_sizes():
    ring = build_table_ring(*mat2_gf2_tables())
    prof = top_profile(ring)
    v = simple_module(ring, prof, 0, "right")
    assert v.size == 4
    assert simple_type(v, prof) == 0


def test_top_support_of_regular_module():
    ring = build_table_ring(*zmod_tables(6))
    prof = top_profile(ring)
    reg = regular_module(ring, "right")
    assert top_support(reg, prof) == (0, 1)


def test_simple_type_rejects_mixed_module():
    ring = build_table_ring(*zmod_tables(6))
    prof = top_profile(ring)
    with pytest.raises(PreconditionUnmet):
        simple_type(regular_module(ring, "right"), prof)


def test_gallery_profiles(gallery):
    prof = top_profile(gallery["wood"])
    assert prof.n == 2
    assert prof.mu == (2, 1)
    assert len(prof.prims) == 3
    prof = top_profile(gallery["b3"])
    assert prof.n == 3
    assert prof.mu == (1, 1, 1)
    prof = top_profile(gallery["t2"])
    assert prof.n == 2
    assert prof.radical.size == 2
