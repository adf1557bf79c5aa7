"""Socles, annihilators, Nakayama permutations, lattices, duality."""

import numpy as np
import pytest

from finring import (annihilator, annihilator_duality_report, Bounds,
                     homogeneous_component, is_annihilator_ideal, is_kasch,
                     is_min_annihilator, is_qf2, minimal_one_sided_ideals,
                     nakayama_permutation, socle_module, socles,
                     submodule_lattice, verify_annihilator_duality,
                     TooLarge, top_profile, EXPECTED, gallery_names)
from finring.core import (PreconditionUnmet, build_table_ring,
                          regular_module)
from finring.socle import projective_socle, support_types

from conftest import mat2_gf2_tables, zmod_tables


def brute_annihilator(ring, subset, side):
    """Quadratic-scan oracle for annihilators."""
    out = []
    for a in range(ring.size):
        if side == "left":
            ok = all(ring.mul(a, x) == ring.zero for x in subset)
        else:
            ok = all(ring.mul(x, a) == ring.zero for x in subset)
        if ok:
            out.append(a)
    return out


def test_annihilator_against_brute_oracle():
    ring = build_table_ring(*mat2_gf2_tables())
    e11_row = [0, 4, 8, 12]      # the right ideal e11.R
    for side in ("left", "right"):
        got = annihilator(ring, e11_row, side)
        assert list(got.indices) == brute_annihilator(ring, e11_row, side)


def test_annihilator_of_zero_is_everything():
    ring = build_table_ring(*zmod_tables(4))
    assert annihilator(ring, [0], "left").size == 4
    assert list(annihilator(ring, [2], "left").indices) == [0, 2]


def test_is_annihilator_ideal_on_z4():
    ring = build_table_ring(*zmod_tables(4))
    assert is_annihilator_ideal(ring, np.array([0, 2]), "right")
    assert is_annihilator_ideal(ring, np.arange(4), "right")


def test_socles_of_z4():
    ring = build_table_ring(*zmod_tables(4))
    s_r, s_l = socles(ring)
    assert list(s_r.indices) == [0, 2]
    assert s_r == s_l


def test_socles_of_t2_differ(gallery):
    s_r, s_l = socles(gallery["t2"])
    assert list(s_r.indices) == [0, 2, 4, 6]
    assert list(s_l.indices) == [0, 1, 2, 3]
    assert s_r != s_l


def test_semisimple_ring_is_its_own_socle():
    ring = build_table_ring(*mat2_gf2_tables())
    s_r, s_l = socles(ring)
    assert s_r.size == 16 and s_l.size == 16


def test_minimal_ideals_of_mat2():
    ring = build_table_ring(*mat2_gf2_tables())
    mins = minimal_one_sided_ideals(ring, "right")
    assert len(mins) == 3                 # one per line of F2^2
    assert all(m.size == 4 for m in mins)
    mins_l = minimal_one_sided_ideals(ring, "left")
    assert len(mins_l) == 3


def test_minimal_ideals_within_restriction():
    ring = build_table_ring(*zmod_tables(4))
    s_r, _ = socles(ring)
    mins = minimal_one_sided_ideals(ring, "right", within=s_r)
    assert [list(m) for m in mins] == [[0, 2]]


def test_kasch_and_qf2_on_gallery(gallery):
    for name in gallery_names():
        ring = gallery[name]
        exp = EXPECTED[name]
        kasch = is_kasch(ring, "right") and is_kasch(ring, "left")
        qf2 = is_qf2(ring, "right") and is_qf2(ring, "left")
        minann = (is_min_annihilator(ring, "right")[0]
                  and is_min_annihilator(ring, "left")[0])
        has_pi = exp["perm"] is not None
        assert (kasch and qf2) == has_pi, name
        assert (kasch and minann) == has_pi, name


def test_nakayama_permutations_match_expected(gallery):
    for name in gallery_names():
        nak = nakayama_permutation(gallery[name])
        exp = EXPECTED[name]
        if exp["perm"] is None:
            assert not nak.exists
            assert nak.reason == exp["reason"]
        else:
            assert nak.exists
            assert nak.perm == exp["perm"], name
            assert nak.reason is None


def test_projective_socles_of_b3(gallery):
    # pi = (1, 2, 0): soc(e_k R) has type pi(k) and size 2
    ring = gallery["b3"]
    prof = top_profile(ring)
    for k in range(3):
        sub = projective_socle(ring, prof, k, "right")
        assert sub.size == 2
        assert support_types(ring, prof, sub, "right") == ((k + 1) % 3,)


def test_homogeneous_components_of_b3(gallery):
    ring = gallery["b3"]
    prof = top_profile(ring)
    sizes = [homogeneous_component(ring, prof, k, "right").size
             for k in range(prof.n)]
    assert sizes == [2, 2, 2]
    s_r, _ = socles(ring)
    assert 2 ** 3 == s_r.size             # components tile the socle


def test_submodule_lattice_of_z4_is_a_chain():
    ring = build_table_ring(*zmod_tables(4))
    lat = submodule_lattice(regular_module(ring, "right"))
    assert lat.node_sizes() == (1, 2, 4)
    assert lat.is_chain
    assert lat.edges == ((0, 1), (1, 2))
    assert lat.bottom == 0 and lat.top == 2


def test_submodule_lattice_of_product_field_is_a_diamond():
    ring = build_table_ring(*zmod_tables(6))
    lat = submodule_lattice(regular_module(ring, "right"))
    assert lat.node_sizes() == (1, 2, 3, 6)
    assert not lat.is_chain
    assert len(lat.edges) == 4


def test_lattice_bound_gate(gallery):
    with pytest.raises(TooLarge):
        submodule_lattice(regular_module(gallery["wood"], "right"),
                          Bounds(lattice=256))


def test_duality_report_on_gallery(gallery):
    for name in ("wood-basic", "b3", "z4", "m2f2", "gf2x2"):
        rep = annihilator_duality_report(gallery[name])
        assert rep["holds"], name
        assert rep["right_pair"]["counts_match"]
        assert rep["right_pair"]["closure_failures"] == 0
    rep = annihilator_duality_report(gallery["t2"])
    assert not rep["holds"]
    assert rep["right_pair"]["witness"] is not None


def test_verify_duality_requires_permutation(gallery):
    rep = verify_annihilator_duality(gallery["wood-basic"])
    assert rep["holds"]
    with pytest.raises(PreconditionUnmet):
        verify_annihilator_duality(gallery["t2"])


def test_socle_module_carrier(gallery):
    mod = socle_module(gallery["wood-basic"], "right")
    s_r, _ = socles(gallery["wood-basic"])
    assert mod.size == s_r.size == 4
    assert list(mod.carrier) == list(s_r.indices)
