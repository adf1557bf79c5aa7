"""Spec text parsing, resolution and pretty-printing."""

import pytest

from finring import (GALLERY, ResolutionError, SpecSyntaxError,
                     build_formal_matrix, parse_file, parse_spec, pretty,
                     resolve, table_isomorphic)
from finring.dsl import tokenize


def test_tokenize_kinds_and_positions():
    toks = tokenize("ring a {\n  expand = [2, 1]\n}\n")
    kinds = [(t.kind, t.text) for t in toks]
    assert kinds == [("ident", "ring"), ("ident", "a"), ("punct", "{"),
                     ("ident", "expand"), ("punct", "="), ("punct", "["),
                     ("int", "2"), ("punct", ","), ("int", "1"),
                     ("punct", "]"), ("punct", "}"), ("eof", "")]
    assert (toks[0].line, toks[0].col) == (1, 1)
    assert (toks[3].line, toks[3].col) == (2, 3)


def test_tokenize_strips_comments():
    toks = tokenize("ring a { # matrix = [[s]]\n}")
    assert [t.text for t in toks if t.kind != "eof"] == ["ring", "a", "{", "}"]


def test_tokenize_rejects_stray_character():
    with pytest.raises(SpecSyntaxError) as info:
        tokenize("ring a {\n  base s @ GF(2)\n}")
    assert (info.value.line, info.value.col) == (2, 10)


def test_gallery_texts_parse_and_resolve():
    for name, text in GALLERY.items():
        ast = parse_spec(text)
        assert ast.name == name
        spec = resolve(ast)
        assert spec.name == name
        assert len(spec.corners) == ast.n


def test_parse_then_build_matches_gallery(gallery):
    spec = resolve(parse_spec(GALLERY["wood-basic"]))
    ring = build_formal_matrix(spec)
    assert ring.size == 16
    assert table_isomorphic(ring, gallery["wood-basic"]) is not None


def test_pretty_round_trips_every_gallery_entry():
    for text in GALLERY.values():
        ast = parse_spec(text)
        canon = pretty(ast)
        assert parse_spec(canon) == ast
        # pretty is a fixed point of pretty . parse
        assert pretty(parse_spec(canon)) == canon


def test_parse_file_returns_blocks_in_order():
    two = GALLERY["z4"] + "\n" + GALLERY["t2"]
    blocks = parse_file(two)
    assert [b.name for b in blocks] == ["z4", "t2"]


def test_parse_spec_wants_exactly_one_block():
    with pytest.raises(SpecSyntaxError, match="exactly one"):
        parse_spec(GALLERY["z4"] + GALLERY["t2"])
    with pytest.raises(SpecSyntaxError, match="exactly one"):
        parse_spec("# nothing but a comment\n")


def test_non_square_matrix_is_rejected():
    bad = """\
ring bad {
  base s = GF(2)
  matrix = [[s, 0], [s]]
}
"""
    with pytest.raises(SpecSyntaxError, match="not square"):
        parse_spec(bad)


def test_unknown_base_form():
    bad = "ring bad {\n  base s = QQ(2)\n  matrix = [[s]]\n}"
    with pytest.raises(SpecSyntaxError, match="unknown base form"):
        parse_spec(bad)


def test_unknown_bimodule_form():
    bad = ("ring bad {\n  base s = GF(2)\n"
           "  bimodule e = twisted(s)\n  matrix = [[s]]\n}")
    with pytest.raises(SpecSyntaxError, match="unknown bimodule form"):
        parse_spec(bad)


def test_expand_entries_must_be_positive():
    bad = ("ring bad {\n  base s = GF(2)\n"
           "  matrix = [[s]]\n  expand = [0]\n}")
    with pytest.raises(SpecSyntaxError, match="positive"):
        parse_spec(bad)


def test_duplicate_matrix_declaration():
    bad = ("ring bad {\n  base s = GF(2)\n"
           "  matrix = [[s]]\n  matrix = [[s]]\n}")
    with pytest.raises(SpecSyntaxError, match="duplicate matrix"):
        parse_spec(bad)


def test_unknown_declaration_keyword():
    bad = "ring bad {\n  socle s = GF(2)\n}"
    with pytest.raises(SpecSyntaxError, match="unknown declaration"):
        parse_spec(bad)


def test_missing_matrix_is_a_resolution_error():
    with pytest.raises(ResolutionError, match="declares no matrix"):
        parse_spec("ring bad {\n  base s = GF(2)\n}")


def test_duplicate_names_are_rejected():
    bad = ("ring bad {\n  base s = GF(2)\n  base s = GF(3)\n"
           "  matrix = [[s]]\n}")
    with pytest.raises(ResolutionError, match="duplicate name"):
        parse_spec(bad)


def test_diagonal_must_name_a_base():
    bad = ("ring bad {\n  base s = GF(2)\n  bimodule e = zero_product(s)\n"
           "  matrix = [[e, e], [e, s]]\n}")
    with pytest.raises(ResolutionError, match="diagonal entry"):
        resolve(parse_spec(bad))


def test_off_diagonal_must_name_a_bimodule():
    bad = ("ring bad {\n  base s = GF(2)\n"
           "  matrix = [[s, s], [0, s]]\n}")
    with pytest.raises(ResolutionError, match="not a declared bimodule"):
        resolve(parse_spec(bad))


def test_bimodule_over_undeclared_base():
    bad = ("ring bad {\n  base s = GF(2)\n  bimodule e = zero_product(t)\n"
           "  matrix = [[s]]\n}")
    with pytest.raises(ResolutionError, match="undeclared base"):
        resolve(parse_spec(bad))


def test_trivext_references_must_resolve():
    bad = ("ring bad {\n  base r = trivext(s, m)\n  matrix = [[r]]\n}")
    with pytest.raises(ResolutionError, match="trivext base"):
        resolve(parse_spec(bad))


def test_expand_length_must_match_matrix():
    bad = ("ring bad {\n  base s = GF(2)\n  bimodule e = zero_product(s)\n"
           "  matrix = [[s, e], [e, s]]\n  expand = [2]\n}")
    with pytest.raises(ResolutionError, match="expand has 1 entries"):
        resolve(parse_spec(bad))


def test_trivext_spec_builds():
    text = """\
ring dual-numbers {
  base k = GF(3)
  bimodule m = regular(k)
  base r = trivext(k, m)
  matrix = [[r]]
}
"""
    ring = build_formal_matrix(resolve(parse_spec(text)))
    assert ring.size == 9
    # x = (0, 1) squares to zero: the radical is the copy of k
    from finring import jacobson_radical
    assert jacobson_radical(ring).size == 3


def test_error_positions_point_at_the_offender():
    bad = "ring bad {\n  base s = GF(2)\n  base s = GF(3)\n  matrix = [[s]]\n}"
    with pytest.raises(ResolutionError) as info:
        parse_spec(bad)
    assert (info.value.line, info.value.col) == (3, 8)
    assert info.value.name == "s"
