"""Length functions and cardinality conditions.

The generalised dimension d weighs each simple module V_k by mu_k and
is computed over the Loewy (socle) filtration; by Jordan-Hoelder the
result is filtration-independent, which small modules re-verify against
a randomly refined composition series.  On top of d sit the Size and
generalised-dimension conditions for one-sided ideals, the Frobenius /
quasi-Frobenius / socle-principal deciders, the exact per-idempotent
annihilator product formula |l(T)|*|T| = |R| * c^(mu_pi(k) - mu_k) with
its sign trichotomy, and the four-criterion Size battery (radical,
homogeneous socle components, maximal right ideals, full enumerations
where feasible).
"""

from dataclasses import dataclass, replace

import numpy as np

from .bounds import Bounds, DEFAULT
from .core import (FiniteRing, FiniteModule, Submodule, InternalInconsistency,
                   NotSubmodule, PreconditionUnmet, TooLarge, ideal_module,
                   regular_module, quotient_module, semisimple_multiplicities,
                   is_closed_ideal)
from .structure import TopProfile, top_profile, jacobson_radical, simple_type
from .socle import (annihilator, is_annihilator_ideal, socles, socle_module,
                    is_min_annihilator, homogeneous_component,
                    nakayama_permutation, NakayamaResult, submodule_lattice,
                    _as_indices, _ideals_over_radical)


@dataclass(frozen=True)
class LengthFunction:
    """Weights w_1..w_n assigned to the simple modules V_1..V_n."""

    weights: tuple[int, ...]

    @classmethod
    def dimension(cls, profile: TopProfile) -> "LengthFunction":
        """The generalised dimension d: w_k = mu_k."""
        return cls(tuple(int(m) for m in profile.mu))

    @classmethod
    def composition(cls, profile: TopProfile) -> "LengthFunction":
        """Composition length: every simple module weighs 1."""
        return cls((1,) * profile.n)


def _resolve_weights(profile: TopProfile, weights) -> tuple[int, ...]:
    if weights is None:
        return tuple(int(m) for m in profile.mu)
    if isinstance(weights, LengthFunction):
        weights = weights.weights
    w = tuple(int(x) for x in weights)
    if len(w) != profile.n:
        raise ValueError(f"{len(w)} weights for {profile.n} simple classes")
    return w


def _restrict(parent: FiniteModule, indices: np.ndarray,
              label: str = "") -> FiniteModule:
    """A submodule of a module, re-indexed densely."""
    idx = np.unique(np.asarray(indices, dtype=np.int64))
    pos = np.full(parent.size, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    add = pos[parent.add_table[np.ix_(idx, idx)]]
    act = pos[parent.act_table[idx, :]]
    if (add < 0).any() or (act < 0).any():
        raise NotSubmodule(f"index set of size {idx.size} is not a submodule")
    return FiniteModule(parent.ring, parent.side, add, act, label=label)


# -- the generalised dimension ------------------------------------------------


def generalized_dimension(module: FiniteModule, profile: TopProfile,
                          weights=None) -> int:
    """Length of a module under the given weights (default w_k = mu_k).

    Walks the Loewy filtration: split off soc(M) (the part killed by
    the radical), add its weighted multiplicities, continue with the
    quotient.  Modules of order <= 64 are re-measured along a random
    composition series, which must agree.
    """
    w = _resolve_weights(profile, weights)
    rad = profile.radical.indices
    total = 0
    cur = module
    while cur.size > 1:
        soc_idx = np.nonzero(cur.socle_mask(rad))[0]
        if soc_idx.size <= 1:
            raise InternalInconsistency("nonzero module with zero socle")
        layer = semisimple_multiplicities(_restrict(cur, soc_idx), profile)
        total += sum(int(n) * wk for n, wk in zip(layer, w))
        if soc_idx.size == cur.size:
            break
        cur = quotient_module(cur, soc_idx)
    if module.size <= 64:
        alt = series_dimension(module, profile, weights=w)
        if alt != total:
            raise InternalInconsistency(
                f"Loewy total {total} != composition-series total {alt}")
    return total


def series_dimension(module: FiniteModule, profile: TopProfile,
                     weights=None, rng=None) -> int:
    """Sum of weights along one (randomly refined) composition series.

    Each step extends the current submodule by a closure of minimal
    size, which is automatically a simple extension; the factor's type
    is read off its top support.  Serves as the filtration-independence
    oracle for generalized_dimension.
    """
    w = _resolve_weights(profile, weights)
    if rng is None:
        rng = np.random.default_rng(module.size * 1009 + 97)
    total = 0
    cur = np.array([0], dtype=np.int64)
    inside = np.zeros(module.size, dtype=bool)
    inside[0] = True
    while cur.size < module.size:
        outs = np.nonzero(~inside)[0]
        rng.shuffle(outs)
        best = None
        for x in outs:
            ext = module.submodule_closure(np.append(cur, x))
            if best is None or ext.size < best.size:
                best = ext
            if best.size == 2 * cur.size:   # index two cannot be beaten
                break
        total += w[_factor_type(module, best, cur, profile)]
        cur = np.asarray(best, dtype=np.int64)
        inside[:] = False
        inside[cur] = True
    return total


def _factor_type(module: FiniteModule, big: np.ndarray, small: np.ndarray,
                 profile: TopProfile) -> int:
    """Class index of the simple factor big/small."""
    sub = _restrict(module, big)
    pos = np.full(module.size, -1, dtype=np.int64)
    pos[np.asarray(big, dtype=np.int64)] = np.arange(len(big))
    factor = quotient_module(sub, pos[np.asarray(small, dtype=np.int64)])
    k = simple_type(factor, profile)
    if factor.size != profile.simple_sizes[k]:
        raise InternalInconsistency(
            f"type-{k} factor has size {factor.size}, "
            f"expected {profile.simple_sizes[k]}")
    return k


# -- cardinality conditions on ideals -----------------------------------------


def size_condition(ring: FiniteRing, ideal, side: str,
                   bounds: Bounds = DEFAULT, *, check: bool = True) -> bool:
    """|l(I)| * |I| == |R| for a right ideal I (mirrored on the left).

    check=False skips the closure precondition; internal scans over
    ideals that are closed by construction use it.
    """
    idx = _as_indices(ideal)
    if check and not is_closed_ideal(ring, idx, side):
        raise NotSubmodule(f"not a {side} ideal")
    ann_side = "left" if side == "right" else "right"
    ann = annihilator(ring, idx, ann_side)
    return ann.size * idx.size == ring.size


def gen_dim_condition(ring: FiniteRing, ideal, side: str,
                      profile: TopProfile | None = None,
                      bounds: Bounds = DEFAULT) -> bool:
    """d(I) == d(R / l(I)) for a right ideal I (mirrored on the left).

    The quotient lives on the opposite side: for a right ideal I, the
    left ideal l(I) is divided out of R as a left module.
    """
    profile = top_profile(ring, bounds) if profile is None else profile
    idx = _as_indices(ideal)
    if not is_closed_ideal(ring, idx, side):
        raise NotSubmodule(f"not a {side} ideal")
    ann_side = "left" if side == "right" else "right"
    ann = annihilator(ring, idx, ann_side)
    d_ideal = generalized_dimension(ideal_module(ring, idx, side), profile)
    reg = regular_module(ring, ann_side)
    quo = quotient_module(reg, Submodule.from_indices(ring, ann_side, ann.indices))
    return d_ideal == generalized_dimension(quo, profile)


# -- ring-level predicates -----------------------------------------------------


def respects_multiplicities(nak: NakayamaResult,
                            profile: TopProfile | None = None) -> bool:
    """Whether mu_k == mu_pi(k) for every class k."""
    if not nak.exists:
        raise PreconditionUnmet("no Nakayama permutation")
    profile = nak.profile if profile is None else profile
    return all(profile.mu[k] == profile.mu[p] for k, p in enumerate(nak.perm))


def is_frobenius(ring: FiniteRing, profile: TopProfile | None = None,
                 socle_pair=None, *, bounds: Bounds = DEFAULT) -> bool:
    """Whether soc(R_R) and top(R_R) carry the same multiplicity vector.

    For finite rings this single comparison decides the Frobenius
    property; the left-handed comparison and, when a Nakayama
    permutation exists, the respects-multiplicities criterion must give
    the same verdict, so disagreement is an internal error.
    """
    profile = top_profile(ring, bounds) if profile is None else profile
    s_r, s_l = socles(ring, bounds) if socle_pair is None else socle_pair
    n_right = semisimple_multiplicities(
        ideal_module(ring, s_r.indices, "right"), profile)
    verdict = n_right == profile.mu
    n_left = semisimple_multiplicities(
        ideal_module(ring, s_l.indices, "left"), profile)
    if (n_left == profile.mu) != verdict:
        raise InternalInconsistency(
            f"socle multiplicities {n_right} (right) vs {n_left} (left) "
            f"decide Frobenius differently against mu={profile.mu}")
    nak = nakayama_permutation(ring, bounds)
    if nak.exists:
        if respects_multiplicities(nak, profile) != verdict:
            raise InternalInconsistency(
                "respects-multiplicities disagrees with the socle/top test")
    elif verdict:
        raise InternalInconsistency(
            "socle matches the top but no Nakayama permutation exists")
    return verdict


def _one_sided_ideals(ring: FiniteRing, side: str, bounds: Bounds) -> list[np.ndarray]:
    """Every right (left) ideal, as sorted ring index arrays.  Cached."""
    key = f"ideals-{side}"
    cached = ring._cache.get(key)
    if cached is not None:
        return cached
    lat_bounds = replace(bounds, lattice=max(bounds.lattice, ring.size))
    lat = submodule_lattice(regular_module(ring, side), lat_bounds)
    out = [np.asarray(nd, dtype=np.int64) for nd in lat.nodes]
    ring._cache[key] = out
    return out


def is_d_ring(ring: FiniteRing, bounds: Bounds = DEFAULT):
    """Whether every one-sided ideal is an annihilator ideal.

    Returns (True, None) or (False, witness dict).  Gated to
    |R| <= bounds.dring since it enumerates both full ideal lattices.
    """
    if ring.size > bounds.dring:
        raise TooLarge(f"D-ring check gated to order {bounds.dring}, "
                       f"ring has {ring.size}")
    for side in ("right", "left"):
        for idx in _one_sided_ideals(ring, side, bounds):
            if not is_annihilator_ideal(ring, idx, side):
                return False, {"side": side, "ideal": tuple(int(i) for i in idx)}
    return True, None


def is_qf(ring: FiniteRing, bounds: Bounds = DEFAULT) -> bool:
    """Quasi-Frobenius: every minimal one-sided ideal is an annihilator.

    Below bounds.dring the verdict is re-derived from the full
    double-annihilator enumeration, which must agree.
    """
    ok_r, _ = is_min_annihilator(ring, "right", bounds)
    ok_l, _ = is_min_annihilator(ring, "left", bounds)
    verdict = ok_r and ok_l
    if ring.size <= bounds.dring:
        d_ok, witness = is_d_ring(ring, bounds)
        if d_ok != verdict:
            raise InternalInconsistency(
                f"minannihilator verdict {verdict} but full double-annihilator "
                f"enumeration gives {d_ok} (witness {witness})")
    return verdict


def socle_principal(ring: FiniteRing, socle=None,
                    bounds: Bounds = DEFAULT) -> bool:
    """Whether the right socle is generated by a single element."""
    if socle is None:
        socle, _ = socles(ring, bounds)
    idx = _as_indices(socle)
    if idx.size == 1:
        return True
    mt = ring.mul_table
    for s in idx:
        gen = np.unique(mt[int(s), :])   # s.R; additively closed already
        if gen.size == idx.size:
            return True
    return False


# -- the annihilator product formula -------------------------------------------


def qf_simple_formula_check(ring: FiniteRing,
                            nak: NakayamaResult | None = None,
                            profile: TopProfile | None = None,
                            bounds: Bounds = DEFAULT) -> dict:
    """Measure |l(T_i)| * |T_i| against |R| * c^(mu_pi(k) - mu_k).

    T_i = soc(e_i R) for every primitive idempotent e_i, with k the
    class of e_i and c = |m_k|.  Each entry also checks the sign
    trichotomy: the product exceeds |R| exactly when mu_pi(k) > mu_k.
    Requires a Nakayama permutation (which forces coinciding socles).
    """
    profile = top_profile(ring, bounds) if profile is None else profile
    nak = nakayama_permutation(ring, bounds) if nak is None else nak
    if not nak.exists:
        raise PreconditionUnmet(
            f"no Nakayama permutation ({nak.reason}, class {nak.witness})")
    s_r, s_l = socles(ring, bounds)
    if s_r != s_l:
        raise PreconditionUnmet("socles do not coincide")
    mt = ring.mul_table
    size = ring.size
    entries = []
    for k, cls in enumerate(profile.classes):
        p = nak.perm[k]
        c = profile.field_sizes[k]
        if profile.field_sizes[p] != c:
            raise InternalInconsistency(
                f"residue fields of classes {k} and {p} differ "
                f"({c} vs {profile.field_sizes[p]})")
        diff = profile.mu[p] - profile.mu[k]
        for pos in cls:
            e = profile.prims[pos]
            t = np.unique(mt[e, s_r.indices])
            ann = annihilator(ring, t, "left")
            product = int(ann.size) * int(t.size)
            if diff >= 0:
                formula = product == size * c ** diff
            else:
                formula = product * c ** (-diff) == size
            sign = (product > size) - (product < size)
            trichotomy = sign == (diff > 0) - (diff < 0)
            entries.append({
                "idempotent": int(e), "class": k, "image_class": p,
                "socle_size": int(t.size), "annihilator_size": int(ann.size),
                "product": product, "mu": profile.mu[k],
                "mu_image": profile.mu[p], "field_size": c,
                "formula": formula, "trichotomy": trichotomy,
            })
    ok = all(en["formula"] and en["trichotomy"] for en in entries)
    return {"ring": ring.name, "size": size, "entries": entries,
            "all_match": ok}


# -- the Size-condition battery --------------------------------------------------


def maximal_ideals(ring: FiniteRing, side: str,
                   bounds: Bounds = DEFAULT) -> list[np.ndarray]:
    """All maximal right (left) ideals, as sorted ring index arrays.

    They all contain the radical, so the enumeration runs in the
    semisimple quotient; TooLarge when |R/J| exceeds the lattice bound.
    """
    ideals = _ideals_over_radical(ring, side, bounds)
    proper = [a for a in ideals if a.size < ring.size]
    masks = np.zeros((len(proper), ring.size), dtype=bool)
    for i, a in enumerate(proper):
        masks[i, a] = True
    out = []
    for i, a in enumerate(proper):
        above = ~(~masks & masks[i][None, :]).any(axis=1)   # rows containing a
        above[i] = False
        if not above.any():
            out.append(a)
    return out


def honold_suite(ring: FiniteRing, profile: TopProfile | None = None,
                 bounds: Bounds = DEFAULT) -> dict:
    """Size-condition battery behind the four Frobenius criteria.

    (1) the socle/top multiplicity test; (2) Size on all right and all
    left ideals; (3) Size on all right ideals; (4) Size on the radical,
    on every homogeneous component of the right socle, and on every
    maximal right ideal.  (2) and (3) enumerate full ideal lattices and
    are skipped above bounds.dring, with (2) falling back to the
    semisimple ideals and the ideals over the radical on both sides.
    (4) is always evaluated and is an exact criterion on its own.
    """
    profile = top_profile(ring, bounds) if profile is None else profile
    frob = is_frobenius(ring, profile, bounds=bounds)
    report: dict = {"ring": ring.name, "size": ring.size, "frobenius": frob}

    rad = jacobson_radical(ring, bounds)
    s_r, _ = socles(ring, bounds)
    failures: list[dict] = []
    radical_ok = size_condition(ring, rad, "right", bounds, check=False)
    if not radical_ok:
        failures.append({"kind": "radical", "ideal_size": rad.size})
    components_ok = True
    for k in range(profile.n):
        comp = homogeneous_component(ring, profile, k, "right", bounds)
        if not size_condition(ring, comp, "right", bounds, check=False):
            components_ok = False
            failures.append({"kind": "component", "class": k,
                             "ideal_size": comp.size})
    maximal_ok: bool | None = True
    try:
        for m in maximal_ideals(ring, "right", bounds):
            if not size_condition(ring, m, "right", bounds, check=False):
                maximal_ok = False
                failures.append({"kind": "maximal", "ideal_size": int(m.size)})
                break
    except TooLarge:
        maximal_ok = None     # |R/J| above the lattice gate
    report["criterion4"] = {
        "scope": "full" if maximal_ok is not None else "partial",
        "radical": radical_ok, "components": components_ok,
        "maximal": maximal_ok,
        "holds": radical_ok and components_ok and bool(maximal_ok is not False),
        "failures": failures,
    }

    def _scan(side: str, ideals) -> tuple[bool, dict | None]:
        for idx in ideals:
            if not size_condition(ring, idx, side, bounds, check=False):
                return False, {"side": side, "ideal_size": int(idx.size)}
        return True, None

    if ring.size <= bounds.dring:
        right_ok, wit_r = _scan("right", _one_sided_ideals(ring, "right", bounds))
        left_ok, wit_l = _scan("left", _one_sided_ideals(ring, "left", bounds))
        report["criterion3"] = {"scope": "full", "holds": right_ok,
                                "witness": wit_r}
        report["criterion2"] = {"scope": "full",
                                "holds": right_ok and left_ok,
                                "witness": wit_r or wit_l}
    else:
        report["criterion3"] = {"scope": "skipped", "holds": None,
                                "witness": None}
        restricted_ok = True
        witness = None
        for side in ("right", "left"):
            soc_mod = socle_module(ring, side, bounds)
            try:
                lat = submodule_lattice(soc_mod, bounds)
                semis = [np.sort(soc_mod.carrier[list(nd)]) for nd in lat.nodes]
            except TooLarge:
                semis = []
            ok, wit = _scan(side, semis)
            if ok:
                try:
                    over = _ideals_over_radical(ring, side, bounds)
                except TooLarge:
                    over = []
                ok, wit = _scan(side, over)
            if not ok:
                restricted_ok = False
                witness = wit
                break
        report["criterion2"] = {"scope": "restricted", "holds": restricted_ok,
                                "witness": witness}

    c4 = report["criterion4"]
    if c4["scope"] == "full":
        agree = c4["holds"] == frob
    else:
        agree = not (frob and not c4["holds"])
    for key in ("criterion2", "criterion3"):
        entry = report[key]
        if entry["scope"] == "full":
            agree = agree and entry["holds"] == frob
        elif entry["scope"] == "restricted":
            agree = agree and not (frob and not entry["holds"])
    report["agree"] = agree
    return report


# -- the self-injectivity oracle ------------------------------------------------


def _module_homs(module: FiniteModule, ring: FiniteRing) -> list[np.ndarray]:
    """All right-module homomorphisms from a right ideal into R.

    Images are chosen for a greedy generating sequence and propagated
    through sums and the ring action; contradictions prune the branch.
    Exponential, hence only used by the tiny self-injectivity oracle.
    """
    carrier = module.carrier
    gens: list[int] = []
    reach = np.array([0], dtype=np.int64)
    while reach.size < module.size:
        for x in range(module.size):
            if x not in reach:
                gens.append(x)
                reach = module.submodule_closure(np.append(reach, x))
                break
    homs: list[np.ndarray] = []

    def extend(fmap: np.ndarray, depth: int):
        if depth == len(gens):
            homs.append(fmap.copy())
            return
        g = gens[depth]
        for a in range(ring.size):
            f = fmap.copy()
            f[g] = a
            if _propagate(module, ring, f):
                extend(f, depth + 1)

    start = np.full(module.size, -1, dtype=np.int64)
    start[0] = ring.zero
    extend(start, 0)
    return homs


def _propagate(module: FiniteModule, ring: FiniteRing, f: np.ndarray) -> bool:
    """Close a partial map under + and the action; False on conflict."""
    changed = True
    while changed:
        changed = False
        known = np.nonzero(f >= 0)[0]
        for m in known:
            for r in range(ring.size):
                tgt = module.act_table[m, r]
                val = ring.mul_table[f[m], r]
                if f[tgt] < 0:
                    f[tgt] = val
                    changed = True
                elif f[tgt] != val:
                    return False
        known = np.nonzero(f >= 0)[0]
        for a in known:
            for b in known:
                tgt = module.add_table[a, b]
                val = ring.add_table[f[a], f[b]]
                if f[tgt] < 0:
                    f[tgt] = val
                    changed = True
                elif f[tgt] != val:
                    return False
    return True


def self_injective_right(ring: FiniteRing, bounds: Bounds = DEFAULT) -> bool:
    """Direct self-injectivity test: every hom from a right ideal into
    the ring must be a left multiplication.  Gated to |R| <= bounds.baer."""
    if ring.size > bounds.baer:
        raise TooLarge(f"self-injectivity oracle gated to order {bounds.baer}, "
                       f"ring has {ring.size}")
    mt = ring.mul_table
    for idx in _one_sided_ideals(ring, "right", bounds):
        mod = ideal_module(ring, idx, "right")
        want = mt[:, mod.carrier]          # want[a, m] = a . carrier[m]
        for f in _module_homs(mod, ring):
            if not (want == f[None, :]).all(axis=1).any():
                return False
    return True
