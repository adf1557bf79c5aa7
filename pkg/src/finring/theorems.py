"""Executable forms of the classification theorems.

Each suite takes one ring and re-derives both sides of an equivalence
from scratch, reporting pass/fail/skipped with a witness; the drivers
at the bottom fan a selection of suites over a corpus.  Enumerations
respect the same bounds as the library: a suite that would need a
lattice beyond the gate reports itself skipped rather than guessing.

Suites (canonical order):

  kasch-equiv        Kasch <=> J, ideals over J, maximal ideals all D-ideals
  nakayama-equiv     permutation <=> Kasch+QF-2 <=> Kasch+minannihilator
  ann1               annihilators are mutually inverse anti-isomorphisms
  anti-isom          duality holds iff the permutation exists
  ann-main           respects-mu <=> gen-dim on semisimple <=> on simple ideals
  card-main          respects-mu <=> socle iso top <=> Kasch + socle gen-dim
  qf-simple-formula  |l(T_k)|*|T_k| = |R| * c^(mu_pi(k)-mu_k) per idempotent
  honold             the four Size-condition criteria agree with Frobenius
  corner-stability   corners at unions of permutation cycles keep pi
  dual-lemma         Size condition on an ideal forces rl(I) = I
  socle-direct-sum   e.S = e.R meet S = soc(e.R) per primitive idempotent
  morita-invariance  block expansion keeps the Morita-stable predicates
"""

import itertools
from dataclasses import dataclass, replace as dc_replace

import numpy as np

from .bounds import Bounds, DEFAULT
from .core import (FiniteRing, RingError, InternalInconsistency,
                   PreconditionUnmet, TooLarge, ideal_module,
                   semisimple_multiplicities)
from .structure import top_profile, jacobson_radical
from .socle import (annihilator, is_annihilator_ideal, socles, socle_module,
                    is_kasch, is_qf2, is_min_annihilator,
                    minimal_one_sided_ideals, nakayama_permutation,
                    annihilator_duality_report, homogeneous_component,
                    _lattice_ring_sets, _ideals_over_radical)
from .cardinality import (respects_multiplicities, gen_dim_condition,
                          size_condition, honold_suite, is_qf, is_frobenius,
                          qf_simple_formula_check, maximal_ideals,
                          _one_sided_ideals)
from .matrix import corner_ring, build_formal_matrix


class UnknownTheorem(RingError):
    """A --theorems selection named a suite that does not exist."""


@dataclass(frozen=True)
class TheoremOutcome:
    theorem: str
    ring: str
    passed: bool
    skipped: str | None = None          # reason when the suite did not apply
    witness: dict | None = None

    def row(self) -> dict:
        return {"theorem": self.theorem, "ring": self.ring,
                "passed": bool(self.passed), "skipped": self.skipped,
                "witness": self.witness}


def _ok(theorem: str, ring: FiniteRing) -> TheoremOutcome:
    return TheoremOutcome(theorem, ring.name or "ring", True)


def _skip(theorem: str, ring: FiniteRing, why: str) -> TheoremOutcome:
    return TheoremOutcome(theorem, ring.name or "ring", True, skipped=why)


def _fail(theorem: str, ring: FiniteRing, witness: dict) -> TheoremOutcome:
    safe = {}
    for k, v in witness.items():
        if isinstance(v, np.ndarray):
            safe[k] = [int(x) for x in v[:16]]
            safe[k + "_size"] = int(v.size)
        elif isinstance(v, (np.bool_, bool)):
            safe[k] = bool(v)
        elif isinstance(v, (np.integer, int)):
            safe[k] = int(v)
        else:
            safe[k] = v
    return TheoremOutcome(theorem, ring.name or "ring", False, witness=safe)


# -- individual suites -----------------------------------------------------------


def check_kasch_equiv(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """Kasch <=> (J D-ideal) <=> (ideals over J D-ideals) <=> (maximal D-ideals).

    Also checks, per maximal ideal M, that being a D-ideal is the same
    as l(M) != 0 (the classical annihilator reading of Kasch).
    """
    rad = jacobson_radical(ring, bounds)
    for side in ("right", "left"):
        opp = "left" if side == "right" else "right"
        kasch = is_kasch(ring, side, bounds)
        j_d = is_annihilator_ideal(ring, rad.indices, side)
        if j_d != kasch:
            return _fail("kasch-equiv", ring,
                         {"side": side, "item": "radical-d-ideal",
                          "kasch": kasch, "radical_d_ideal": j_d})
        try:
            over = _ideals_over_radical(ring, side, bounds)
        except TooLarge:
            continue    # items (2)(3) out of enumeration range on this side
        over_d = all(is_annihilator_ideal(ring, idx, side) for idx in over)
        if over_d != kasch:
            return _fail("kasch-equiv", ring,
                         {"side": side, "item": "ideals-over-radical",
                          "kasch": kasch, "all_d": over_d})
        for m in maximal_ideals(ring, side, bounds):
            m_d = is_annihilator_ideal(ring, m, side)
            l_m = annihilator(ring, m, opp)
            if m_d != (l_m.size > 1):
                return _fail("kasch-equiv", ring,
                             {"side": side, "item": "maximal-vs-annihilator",
                              "ideal": m, "d_ideal": m_d,
                              "annihilator_size": l_m.size})
            if kasch and not m_d:
                return _fail("kasch-equiv", ring,
                             {"side": side, "item": "maximal-not-d",
                              "ideal": m})
        if not kasch:
            all_max_d = all(is_annihilator_ideal(ring, m, side)
                            for m in maximal_ideals(ring, side, bounds))
            if all_max_d:
                return _fail("kasch-equiv", ring,
                             {"side": side, "item": "maximal-all-d-but-not-kasch",
                              "kasch": kasch})
    return _ok("kasch-equiv", ring)


def check_nakayama_equiv(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """permutation <=> Kasch + QF-2 <=> Kasch + minannihilator; pi forces S_r = S_l."""
    nak = nakayama_permutation(ring, bounds)
    kasch = (is_kasch(ring, "right", bounds) and is_kasch(ring, "left", bounds))
    qf2 = (is_qf2(ring, "right", bounds) and is_qf2(ring, "left", bounds))
    minann = (is_min_annihilator(ring, "right", bounds)[0]
              and is_min_annihilator(ring, "left", bounds)[0])
    a, b, c = nak.exists, kasch and qf2, kasch and minann
    if not (a == b == c):
        return _fail("nakayama-equiv", ring,
                     {"permutation": a, "kasch_and_qf2": b,
                      "kasch_and_minann": c, "reason": nak.reason})
    if a:
        s_r, s_l = socles(ring, bounds)
        if s_r != s_l:
            return _fail("nakayama-equiv", ring,
                         {"item": "socles-differ-under-permutation",
                          "right_size": s_r.size, "left_size": s_l.size})
    return _ok("nakayama-equiv", ring)


def _pair_cap(items: list, cap: int = 16) -> list:
    if len(items) <= cap:
        return items
    step = max(1, len(items) // cap)
    return items[::step][:cap]


def check_ann1(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """On rings with a permutation: l, r are inverse lattice anti-isomorphisms.

    Beyond the closure/bijection report this re-checks inclusion
    reversal and l(I1 + I2) = l(I1) meet l(I2) over (a deterministic
    sample of) the right-socle lattice.
    """
    nak = nakayama_permutation(ring, bounds)
    if not nak.exists:
        return _skip("ann1", ring, f"no permutation ({nak.reason})")
    try:
        rep = annihilator_duality_report(ring, bounds)
    except TooLarge:
        return _skip("ann1", ring, "lattice above bound")
    if not rep["holds"]:
        return _fail("ann1", ring, {"item": "duality-report",
                                    "right_pair": rep["right_pair"]["holds"],
                                    "left_pair": rep["left_pair"]["holds"]})
    s_r, _ = socles(ring, bounds)
    try:
        subs = _pair_cap(_lattice_ring_sets(ring, s_r, "right", bounds))
    except TooLarge:
        return _skip("ann1", ring, "lattice above bound")
    add = ring.add_table
    sets = [frozenset(int(x) for x in a) for a in subs]
    anns = [annihilator(ring, a, "left") for a in subs]
    ann_sets = [frozenset(int(x) for x in a.indices) for a in anns]
    for i, j in itertools.combinations(range(len(subs)), 2):
        if sets[i] <= sets[j] and not (ann_sets[j] <= ann_sets[i]):
            return _fail("ann1", ring, {"item": "inclusion-reversal",
                                        "smaller": subs[i], "larger": subs[j]})
        if sets[j] <= sets[i] and not (ann_sets[i] <= ann_sets[j]):
            return _fail("ann1", ring, {"item": "inclusion-reversal",
                                        "smaller": subs[j], "larger": subs[i]})
        total = np.unique(add[np.ix_(subs[i], subs[j])])
        lhs = annihilator(ring, total, "left")
        if frozenset(int(x) for x in lhs.indices) != (ann_sets[i] & ann_sets[j]):
            return _fail("ann1", ring, {"item": "sum-to-intersection",
                                        "first": subs[i], "second": subs[j]})
    return _ok("ann1", ring)


def check_anti_isom(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """The full duality succeeds exactly on rings with a permutation."""
    nak = nakayama_permutation(ring, bounds)
    try:
        rep = annihilator_duality_report(ring, bounds)
    except TooLarge:
        return _skip("anti-isom", ring, "lattice above bound")
    if rep["holds"] != nak.exists:
        return _fail("anti-isom", ring,
                     {"duality": rep["holds"], "permutation": nak.exists,
                      "reason": nak.reason})
    return _ok("anti-isom", ring)


def check_ann_main(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """respects-mu <=> gen-dim on all semisimple ideals <=> on simple right ideals."""
    nak = nakayama_permutation(ring, bounds)
    s_r, s_l = socles(ring, bounds)
    if not nak.exists or s_r != s_l:
        return _skip("ann-main", ring, "needs permutation with equal socles")
    prof = top_profile(ring, bounds)
    a = respects_multiplicities(nak, prof)

    b = True
    b_wit = None
    for side, sub in (("right", s_r), ("left", s_l)):
        try:
            semis = _lattice_ring_sets(ring, sub, side, bounds)
        except TooLarge:
            return _skip("ann-main", ring, "socle lattice above bound")
        for idx in semis:
            if not gen_dim_condition(ring, idx, side, prof, bounds):
                b = False
                b_wit = {"side": side, "ideal": idx}
                break
        if not b:
            break

    c = True
    c_wit = None
    for idx in minimal_one_sided_ideals(ring, "right", within=s_r):
        if not gen_dim_condition(ring, idx, "right", prof, bounds):
            c = False
            c_wit = {"side": "right", "ideal": idx}
            break

    if not (a == b == c):
        wit = {"respects": a, "semisimple_all": b, "simple_all": c}
        wit.update(b_wit or c_wit or {})
        return _fail("ann-main", ring, wit)
    return _ok("ann-main", ring)


def check_card_main(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """respects-mu <=> S iso top both sides <=> Kasch + socle/component gen-dim."""
    nak = nakayama_permutation(ring, bounds)
    prof = top_profile(ring, bounds)
    s_r, s_l = socles(ring, bounds)
    a = nak.exists and respects_multiplicities(nak, prof)

    mult_r = semisimple_multiplicities(socle_module(ring, "right", bounds), prof)
    mult_l = semisimple_multiplicities(socle_module(ring, "left", bounds), prof)
    b = (tuple(mult_r) == tuple(prof.mu) and tuple(mult_l) == tuple(prof.mu))

    c = is_kasch(ring, "right", bounds)
    if c:
        c = gen_dim_condition(ring, s_r.indices, "left", prof, bounds)
    if c:
        for k in range(prof.n):
            comp = homogeneous_component(ring, prof, k, "right", bounds)
            if not gen_dim_condition(ring, comp.indices, "right", prof, bounds):
                c = False
                break

    if not (a == b == c):
        return _fail("card-main", ring,
                     {"respects": a, "socle_iso_top": b,
                      "kasch_plus_gen_dim": c,
                      "mult_right": [int(x) for x in mult_r],
                      "mult_left": [int(x) for x in mult_l],
                      "mu": [int(x) for x in prof.mu]})
    return _ok("card-main", ring)


def check_qf_simple_formula(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """The annihilator product formula and its trichotomy, per idempotent."""
    try:
        rep = qf_simple_formula_check(ring, bounds=bounds)
    except PreconditionUnmet as exc:
        return _skip("qf-simple-formula", ring, str(exc))
    if not rep["all_match"]:
        bad = [e for e in rep["entries"]
               if not (e["formula"] and e["trichotomy"])]
        return _fail("qf-simple-formula", ring, {"entries": bad[:4]})
    return _ok("qf-simple-formula", ring)


def check_honold(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """All Size-condition criteria agree with the Frobenius decision."""
    rep = honold_suite(ring, None, bounds)
    if not rep["agree"]:
        return _fail("honold", ring, {
            "frobenius": rep["frobenius"],
            "criterion4": rep["criterion4"]["holds"],
            "criterion3": rep["criterion3"]["holds"],
            "criterion2": rep["criterion2"]["holds"],
            "failures": rep["criterion4"]["failures"][:4]})
    return _ok("honold", ring)


def _cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        k = perm[start]
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = perm[k]
        out.append(tuple(cyc))
    return out


def check_corner_stability(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """Corners at unions of permutation cycles keep the restricted permutation.

    For every nonempty union of cycles of pi, the corner at the sum of
    ALL primitive idempotents in those classes is taken; the corner's
    own Nakayama permutation must be pi restricted (indices renumbered
    by the sorted class order), with matching multiplicities and
    residue field sizes.
    """
    nak = nakayama_permutation(ring, bounds)
    if not nak.exists:
        return _skip("corner-stability", ring, f"no permutation ({nak.reason})")
    prof = top_profile(ring, bounds)
    perm = nak.perm
    cycles = _cycles(perm)
    for r in range(1, len(cycles) + 1):
        for chosen in itertools.combinations(cycles, r):
            classes = sorted(k for cyc in chosen for k in cyc)
            e = ring.zero
            for k in classes:
                for pos in prof.classes[k]:
                    e = ring.add(e, prof.prims[pos])
            sub = corner_ring(ring, e, bounds)
            sub_nak = nakayama_permutation(sub, bounds)
            if not sub_nak.exists:
                return _fail("corner-stability", ring,
                             {"classes": classes,
                              "item": "corner-lost-permutation",
                              "reason": sub_nak.reason})
            sub_prof = top_profile(sub, bounds)
            want_mu = tuple(int(prof.mu[k]) for k in classes)
            want_fields = tuple(int(prof.field_sizes[k]) for k in classes)
            pos_of = {k: i for i, k in enumerate(classes)}
            want_perm = tuple(pos_of[perm[k]] for k in classes)
            got = (tuple(int(x) for x in sub_prof.mu),
                   tuple(int(x) for x in sub_prof.field_sizes),
                   tuple(int(x) for x in sub_nak.perm))
            if got != (want_mu, want_fields, want_perm):
                return _fail("corner-stability", ring,
                             {"classes": classes, "corner_size": sub.size,
                              "expected": [list(want_mu), list(want_fields),
                                           list(want_perm)],
                              "got": [list(g) for g in got]})
    return _ok("corner-stability", ring)


def check_dual_lemma(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """Size on an ideal AND on its double annihilator forces the two equal.

    Corollary included: a maximal one-sided ideal needs the Size
    condition on itself only.
    """
    for side in ("right", "left"):
        first = "left" if side == "right" else "right"
        if ring.size <= bounds.dring:
            family = _one_sided_ideals(ring, side, bounds)
        else:
            family = []
            seen: set[bytes] = set()
            sub = socles(ring, bounds)[0 if side == "right" else 1]
            for source in ("socle", "over"):
                try:
                    part = (_lattice_ring_sets(ring, sub, side, bounds)
                            if source == "socle"
                            else _ideals_over_radical(ring, side, bounds))
                except TooLarge:
                    continue
                for idx in part:
                    key = np.ascontiguousarray(idx, dtype=np.int64).tobytes()
                    if key not in seen:
                        seen.add(key)
                        family.append(idx)
        for idx in family:
            if not size_condition(ring, idx, side, bounds, check=False):
                continue
            double = annihilator(ring, annihilator(ring, idx, first), side)
            if size_condition(ring, double.indices, side, bounds, check=False):
                if double.indices.size != idx.size or not (double.indices == np.asarray(idx)).all():
                    return _fail("dual-lemma", ring,
                                 {"side": side, "ideal": idx,
                                  "double": double.indices,
                                  "item": "size-both-but-not-equal"})
        try:
            for m in maximal_ideals(ring, side, bounds):
                if size_condition(ring, m, side, bounds, check=False):
                    if not is_annihilator_ideal(ring, m, side):
                        return _fail("dual-lemma", ring,
                                     {"side": side, "ideal": m,
                                      "item": "maximal-size-but-not-d-ideal"})
        except TooLarge:
            pass
    return _ok("dual-lemma", ring)


def check_socle_direct_sum(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """e.S = e.R meet S = soc(e.R) per primitive e; their sizes tile the socle."""
    prof = top_profile(ring, bounds)
    s_r, s_l = socles(ring, bounds)
    rad = jacobson_radical(ring, bounds)
    mt = ring.mul_table
    for side, sub in (("right", s_r), ("left", s_l)):
        in_socle = np.zeros(ring.size, dtype=bool)
        in_socle[sub.indices] = True
        total = 1
        for e in prof.prims:
            if side == "right":
                e_s = np.unique(mt[e, sub.indices])
                e_r = np.unique(mt[e, :])
            else:
                e_s = np.unique(mt[sub.indices, e])
                e_r = np.unique(mt[:, e])
            meet = e_r[in_socle[e_r]]
            mod = ideal_module(ring, e_r, side)
            soc_mask = mod.socle_mask(rad.indices)
            soc = np.sort(mod.carrier[soc_mask])
            if not (e_s.size == meet.size == soc.size
                    and (e_s == meet).all() and (e_s == soc).all()):
                return _fail("socle-direct-sum", ring,
                             {"side": side, "idempotent": int(e),
                              "corner_socle": e_s, "meet": meet,
                              "module_socle": soc})
            total *= int(e_s.size)
        if total != sub.size:
            return _fail("socle-direct-sum", ring,
                         {"side": side, "item": "sizes-do-not-tile",
                          "product": total, "socle_size": sub.size})
    return _ok("socle-direct-sum", ring)


# -- Morita invariance (corpus-level) ----------------------------------------------


_EXPANSIONS: dict[int, tuple[tuple[int, ...], ...]] = {
    1: ((2,), (3,), (4,)),
    2: ((2, 1), (1, 2), (2, 2), (1, 3), (3, 1), (2, 3)),
    3: ((2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 1), (2, 1, 2), (1, 2, 2)),
}


def morita_variants(text: str) -> list[tuple[tuple[int, ...], str]]:
    """Expanded DSL variants of a basic ring spec, one per candidate vector."""
    from .dsl import parse_spec, pretty
    ast = parse_spec(text)
    out = []
    for vec in _EXPANSIONS.get(ast.n, ()):
        out.append((vec, pretty(dc_replace(ast, expand=vec))))
    return out


def check_morita_pair(base: FiniteRing, expanded: FiniteRing,
                      vector: tuple[int, ...],
                      bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """One base ring against one block expansion of it."""
    name = f"{base.name or 'ring'}*{''.join(str(v) for v in vector)}"
    prof_b = top_profile(base, bounds)
    prof_e = top_profile(expanded, bounds)
    nak_b = nakayama_permutation(base, bounds)
    nak_e = nakayama_permutation(expanded, bounds)

    checks: dict[str, tuple] = {
        "classes": (prof_b.n, prof_e.n),
        "field_sizes": (tuple(int(x) for x in prof_b.field_sizes),
                        tuple(int(x) for x in prof_e.field_sizes)),
        "mu": (tuple(int(v) for v in vector),
               tuple(int(x) for x in prof_e.mu)),
    }
    for side in ("right", "left"):
        checks[f"kasch_{side}"] = (is_kasch(base, side, bounds),
                                   is_kasch(expanded, side, bounds))
        checks[f"qf2_{side}"] = (is_qf2(base, side, bounds),
                                 is_qf2(expanded, side, bounds))
        checks[f"minann_{side}"] = (is_min_annihilator(base, side, bounds)[0],
                                    is_min_annihilator(expanded, side, bounds)[0])
    checks["nakayama"] = (nak_b.exists, nak_e.exists)
    if nak_b.exists and nak_e.exists:
        checks["permutation"] = (tuple(nak_b.perm), tuple(nak_e.perm))
    s_b = socles(base, bounds)
    s_e = socles(expanded, bounds)
    checks["socles_coincide"] = (s_b[0] == s_b[1], s_e[0] == s_e[1])
    qf_b = is_qf(base, bounds)
    checks["qf"] = (qf_b, is_qf(expanded, bounds))
    for key, (want, got) in checks.items():
        if want != got:
            return TheoremOutcome("morita-invariance", name, False,
                                  witness={"item": key, "base": list(want)
                                           if isinstance(want, tuple) else want,
                                           "expanded": list(got)
                                           if isinstance(got, tuple) else got})

    # Frobenius flips exactly when the expanded multiplicities break pi.
    frob_e = is_frobenius(expanded, prof_e, bounds=bounds)
    if nak_b.exists:
        respected = all(vector[k] == vector[nak_b.perm[k]]
                        for k in range(len(vector)))
        want_frob = qf_b and respected
    else:
        want_frob = False
    if frob_e != want_frob:
        return TheoremOutcome("morita-invariance", name, False,
                              witness={"item": "frobenius-flip",
                                       "expected": want_frob, "got": frob_e,
                                       "vector": list(vector)})
    return TheoremOutcome("morita-invariance", name, True)


def morita_outcomes(bounds: Bounds = DEFAULT, min_rings: int = 10,
                    min_vectors: int = 3,
                    max_order: int = 4096) -> list[TheoremOutcome]:
    """Drive the Morita suite over basic corpus rings.

    Walks the corpus in order, keeps basic entries admitting at least
    min_vectors expansions inside max_order, and stops once min_rings
    rings have been fully checked.
    """
    from .dsl import parse_spec, resolve
    from .sweep import corpus_entries

    outcomes: list[TheoremOutcome] = []
    rings_done = 0
    for entry in corpus_entries(max_order=max_order):
        if "-m" in entry.name:
            continue        # expanded entries are not basic
        variants = morita_variants(entry.text)
        built = []
        for vec, text in variants:
            try:
                expanded = build_formal_matrix(resolve(parse_spec(text)), bounds)
            except TooLarge:
                continue
            built.append((vec, expanded))
        if len(built) < min_vectors:
            continue
        base = build_formal_matrix(resolve(parse_spec(entry.text)), bounds)
        for vec, expanded in built:
            outcomes.append(check_morita_pair(base, expanded, vec, bounds))
        rings_done += 1
        if rings_done >= min_rings:
            break
    if rings_done < min_rings:
        outcomes.append(TheoremOutcome(
            "morita-invariance", "corpus", False,
            witness={"item": "insufficient-pool", "rings": rings_done,
                     "required": min_rings}))
    return outcomes


# -- registry and drivers ----------------------------------------------------------


PER_RING_SUITES = {
    "kasch-equiv": check_kasch_equiv,
    "nakayama-equiv": check_nakayama_equiv,
    "ann1": check_ann1,
    "anti-isom": check_anti_isom,
    "ann-main": check_ann_main,
    "card-main": check_card_main,
    "qf-simple-formula": check_qf_simple_formula,
    "honold": check_honold,
    "corner-stability": check_corner_stability,
    "dual-lemma": check_dual_lemma,
    "socle-direct-sum": check_socle_direct_sum,
}

ALL_THEOREMS: tuple[str, ...] = tuple(PER_RING_SUITES) + ("morita-invariance",)


def parse_plan(selection: str | None) -> tuple[str, ...]:
    """Validate a comma-separated suite selection ("all" or None = all)."""
    if selection is None or selection.strip() in ("", "all"):
        return ALL_THEOREMS
    plan = []
    for raw in selection.split(","):
        name = raw.strip()
        if not name:
            continue
        if name not in ALL_THEOREMS:
            known = ", ".join(ALL_THEOREMS)
            raise UnknownTheorem(f"unknown theorem {name!r}; known: {known}")
        plan.append(name)
    if not plan:
        return ALL_THEOREMS
    return tuple(plan)


def check_ring(theorem: str, ring: FiniteRing,
               bounds: Bounds = DEFAULT) -> TheoremOutcome:
    """Run one per-ring suite against one ring."""
    if theorem == "morita-invariance":
        return TheoremOutcome("morita-invariance", ring.name or "ring", True,
                              skipped="corpus-level suite")
    if theorem not in PER_RING_SUITES:
        known = ", ".join(ALL_THEOREMS)
        raise UnknownTheorem(f"unknown theorem {theorem!r}; known: {known}")
    return PER_RING_SUITES[theorem](ring, bounds)
