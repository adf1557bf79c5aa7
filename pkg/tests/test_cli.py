"""Command-line behavior: output shapes, exit codes, corpus fan-out."""

import json
import shutil
import subprocess

import pytest

from finring import InternalInconsistency, classify
from finring.cli import (EXIT_COUNTEREXAMPLE, EXIT_INCONSISTENT, EXIT_OK,
                         EXIT_USAGE, _profile_key, _threads, main)


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_classify_json_schema(capsys):
    rc, out, _ = run_cli(capsys, "classify", "gallery:z4", "--format", "json")
    assert rc == EXIT_OK
    d = json.loads(out)
    assert sorted(d.keys()) == ["field_sizes", "m", "mu", "n", "nakayama",
                                "name", "predicates", "size",
                                "size_condition", "socle", "timings"]
    assert d["name"] == "z4" and d["size"] == 4
    assert d["mu"] == [1] and d["field_sizes"] == [2]
    assert d["nakayama"] == {"exists": True, "perm": [0],
                             "respects_multiplicities": True}
    assert d["predicates"]["qf"] and d["predicates"]["frobenius"]
    assert d["socle"] == {"right_size": 2, "left_size": 2, "coincide": True}


def test_classify_reports_gated_checks_as_null(capsys):
    # 512 elements: d-ring and all-right-ideals enumerations are gated
    # off, but the maximal-ideal condition is decidable (and fails)
    rc, out, _ = run_cli(capsys, "classify", "gallery:wood",
                         "--format", "json")
    assert rc == EXIT_OK
    d = json.loads(out)
    assert d["predicates"]["d_ring"] is None
    assert d["size_condition"]["all_right_ideals"] is None
    assert d["size_condition"]["maximal"] is False
    assert d["predicates"]["qf"] is True
    assert d["predicates"]["frobenius"] is False


def test_classify_text_layout(capsys):
    rc, out, _ = run_cli(capsys, "classify", "gallery:z4")
    assert rc == EXIT_OK
    assert "ring            z4" in out
    assert "frobenius       yes" in out
    assert "socles          |S_r| = 2, |S_l| = 2, coincide = yes" in out


def test_two_token_gallery_target(capsys):
    rc1, out1, _ = run_cli(capsys, "classify", "gallery:z4",
                           "--format", "json")
    rc2, out2, _ = run_cli(capsys, "classify", "gallery", "z4",
                           "--format", "json")
    assert rc1 == rc2 == EXIT_OK
    assert _profile_key(json.loads(out1)) == _profile_key(json.loads(out2))


def test_classify_spec_file(capsys, tmp_path):
    spec = tmp_path / "pair.ring"
    spec.write_text("ring pair {\n  base s = GF(2)\n  base t = GF(2)\n"
                    "  matrix = [[s, 0], [0, t]]\n}\n")
    rc, out, _ = run_cli(capsys, "classify", str(spec), "--format", "json")
    assert rc == EXIT_OK
    d = json.loads(out)
    assert d["name"] == "pair" and d["size"] == 4 and d["n"] == 2


def test_missing_file_is_usage_error(capsys):
    rc, _, err = run_cli(capsys, "classify", "/no/such/spec.ring")
    assert rc == EXIT_USAGE
    assert "error:" in err


def test_malformed_spec_is_usage_error(capsys, tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("ring bad {\n  base s = GF(2)\n}\n")   # no matrix
    rc, _, err = run_cli(capsys, "classify", str(bad))
    assert rc == EXIT_USAGE
    assert "declares no matrix" in err


def test_unknown_theorem_is_usage_error(capsys):
    rc, _, err = run_cli(capsys, "verify", "gallery:z4",
                         "--theorems", "no-such-suite")
    assert rc == EXIT_USAGE
    assert "no-such-suite" in err


def test_verify_single_ring_all_suites(capsys):
    rc, out, _ = run_cli(capsys, "verify", "gallery:wood-basic")
    assert rc == EXIT_OK
    assert ", 0 failed," in out.splitlines()[-1]
    assert "kasch-equiv" in out and "honold" in out


def test_verify_formula_trailer(capsys):
    rc, out, _ = run_cli(capsys, "verify", "gallery:wood-basic",
                         "--theorems", "qf-simple-formula")
    assert rc == EXIT_OK
    assert "annihilator products: 16" in out


def test_verify_skips_without_nakayama(capsys):
    rc, out, _ = run_cli(capsys, "verify", "gallery:t2",
                         "--theorems", "qf-simple-formula,ann-main")
    assert rc == EXIT_OK          # a skip is not a counterexample
    assert "skip" in out


def test_verify_corpus_file(capsys, tmp_path):
    corpus = tmp_path / "two.ring"
    corpus.write_text(
        "ring a {\n  base s = GF(2)\n  matrix = [[s]]\n}\n"
        "ring b {\n  base s = GF(3)\n  matrix = [[s]]\n}\n")
    rc, out, _ = run_cli(capsys, "verify", "--corpus", str(corpus),
                         "--theorems", "kasch-equiv,nakayama-equiv")
    assert rc == EXIT_OK
    assert out.splitlines()[-1] == "# 4 passed, 0 failed, 0 skipped"


def test_verify_counterexample_exit_code(capsys, monkeypatch):
    class Stub:
        passed = False
        def row(self):
            return {"theorem": "stub", "ring": "z4", "passed": False,
                    "skipped": None, "witness": {"made": "up"}}

    monkeypatch.setattr("finring.cli.check_ring", lambda *a, **k: Stub())
    rc, out, _ = run_cli(capsys, "verify", "gallery:z4",
                         "--theorems", "kasch-equiv")
    assert rc == EXIT_COUNTEREXAMPLE
    assert "FAIL" in out and '"made": "up"' in out


def test_internal_inconsistency_exit_code(capsys, monkeypatch):
    def boom(*a, **k):
        raise InternalInconsistency("cross-check mismatch")

    monkeypatch.setattr("finring.cli.classify", boom)
    rc, _, err = run_cli(capsys, "classify", "gallery:z4")
    assert rc == EXIT_INCONSISTENT
    assert "internal inconsistency" in err


def test_enumerate_streams_distinct_profiles(capsys, gallery):
    rc, out, _ = run_cli(capsys, "enumerate", "--max-order", "16")
    assert rc == EXIT_OK
    lines = out.strip().splitlines()
    dicts = [json.loads(ln) for ln in lines]
    keys = {_profile_key(d) for d in dicts}
    assert len(keys) == len(lines) == 22
    assert all(d["size"] <= 16 for d in dicts)
    # the corpus covers the small gallery rings up to profile identity
    z4_key = _profile_key(classify(gallery["z4"]).to_json_dict())
    assert z4_key in keys


def test_gallery_list(capsys):
    rc, out, _ = run_cli(capsys, "gallery", "list")
    assert rc == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert any(ln.startswith("wood-basic") and "size    16" in ln
               for ln in lines)
    assert any("frobenius=no" in ln for ln in lines)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("FINRING_THREADS", "3")
    assert _threads() == 3
    monkeypatch.setenv("FINRING_THREADS", "0")
    assert _threads() == 1
    monkeypatch.setenv("FINRING_THREADS", "lots")
    assert _threads() >= 1
    monkeypatch.delenv("FINRING_THREADS")
    assert _threads() >= 1


def test_installed_entry_point():
    exe = shutil.which("finring")
    assert exe, "console script should be on PATH after install"
    proc = subprocess.run([exe, "classify", "gallery:gf2x2",
                           "--format", "json"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["size"] == 4
