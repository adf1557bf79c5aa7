"""Corpus generation: deterministic, deduplicated, order-bounded."""

import hashlib

from finring import build_entry, corpus_entries
from finring.dsl import parse_spec


def test_corpus_is_deterministic():
    a = corpus_entries()
    b = corpus_entries()
    assert [(e.name, e.text, e.order) for e in a] \
        == [(e.name, e.text, e.order) for e in b]


def test_corpus_shape():
    entries = corpus_entries()
    assert len(entries) == 337
    assert len({e.name for e in entries}) == len(entries)
    assert all(2 <= e.order <= 4096 for e in entries)
    assert sum(1 for e in entries if e.order <= 256) == 146


def test_known_entries_present():
    names = {e.name for e in corpus_entries()}
    for expected in ("c1-gf2", "c1-z4", "c1-f2x", "c1-gf2-m2",
                     "c2-gf2-gf2-p00", "c2-gf2-gf2-p11"):
        assert expected in names, expected


def test_max_order_filter_is_monotone():
    small = corpus_entries(max_order=16)
    large = corpus_entries(max_order=256)
    assert {e.name for e in small} <= {e.name for e in large}
    assert len(small) == 29
    assert corpus_entries(max_order=2)[0].name == "c1-gf2"
    assert len(corpus_entries(max_order=2)) == 1


def test_entry_texts_parse_and_order_is_truthful():
    for entry in corpus_entries(max_order=64):
        ast = parse_spec(entry.text)
        assert ast.name == entry.name
        ring = build_entry(entry)
        assert ring.size == entry.order, entry.name


def test_build_entry_smallest():
    entry = corpus_entries(max_order=2)[0]
    ring = build_entry(entry)
    assert ring.size == 2
    assert ring.name == "c1-gf2"


def test_digest_is_sha256_of_text():
    entry = corpus_entries(max_order=4)[0]
    want = hashlib.sha256(entry.text.encode("utf-8")).hexdigest()
    assert entry.digest == want


def test_equal_base_constraint():
    # off-diagonal cells only ever connect corners over the same base
    for entry in corpus_entries():
        ast = parse_spec(entry.text)
        diag = [row[i] for i, row in enumerate(ast.matrix)]
        for i, row in enumerate(ast.matrix):
            for j, cell in enumerate(row):
                if i != j and cell is not None:
                    assert diag[i] == diag[j], entry.name
