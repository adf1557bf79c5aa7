"""Socles, annihilators, Nakayama permutations, submodule lattices.

The right socle of a finite ring is the left annihilator of the
radical, and symmetrically for the left socle; both are two-sided
ideals.  A ring earns a Nakayama permutation when both socles agree,
every projective has a simple socle on both sides (QF-2), and every
simple module embeds on both sides (Kasch); the permutation sends a
class k to the type of the socle of its projective.  Failures are
reported in a fixed precedence order so diagnoses are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import DEFAULT, Bounds
from .core import (
    FiniteModule,
    FiniteRing,
    InternalInconsistency,
    PreconditionUnmet,
    Submodule,
    TooLarge,
    additive_closure,
    ideal_generated,
    ideal_module,
    is_closed_ideal,
    quotient_module,
    regular_module,
)
from .structure import TopProfile, jacobson_radical, top_profile


def _as_indices(x) -> np.ndarray:
    if isinstance(x, Submodule):
        return x.indices
    return np.unique(np.asarray(list(x) if not isinstance(x, np.ndarray) else x,
                                dtype=np.int64))


# -- annihilators -------------------------------------------------------------


def annihilator(ring: FiniteRing, subset, side: str,
                check: bool = True) -> Submodule:
    """l(X) (side="left") or r(X) (side="right") of any subset X.

    The left annihilator of anything is a left ideal and symmetrically;
    when X is a two-sided ideal the result is two-sided as well (the
    returned side label still records the annihilator's own side).
    """
    idx = _as_indices(subset)
    mt = ring.mul_table
    if side == "left":
        mask = (mt[:, idx] == ring.zero).all(axis=1)
    elif side == "right":
        mask = (mt[idx, :] == ring.zero).all(axis=0)
    else:
        raise ValueError(f"unknown side {side!r}")
    out = np.nonzero(mask)[0]
    if check and not is_closed_ideal(ring, out, side):
        raise InternalInconsistency(f"annihilator is not a {side} ideal")
    return Submodule.from_indices(ring, side, out)


def is_annihilator_ideal(ring: FiniteRing, subset, side: str) -> bool:
    """For a right ideal: r(l(I)) == I; for a left ideal: l(r(I)) == I."""
    idx = _as_indices(subset)
    if side == "right":
        closed = annihilator(ring, annihilator(ring, idx, "left"), "right")
    elif side == "left":
        closed = annihilator(ring, annihilator(ring, idx, "right"), "left")
    else:
        raise ValueError(f"unknown side {side!r}")
    return closed.indices.size == idx.size and bool((closed.indices == idx).all())


# -- socles --------------------------------------------------------------------


def _brute_socle(ring: FiniteRing, side: str) -> np.ndarray:
    """Sum of all minimal one-sided ideals, by exhaustive cyclic scan."""
    minimal = minimal_one_sided_ideals(ring, side)
    if not minimal:
        return np.array([ring.zero], dtype=np.int64)
    return additive_closure(ring.add_table, np.concatenate(minimal))


def socles(ring: FiniteRing, bounds: Bounds = DEFAULT) -> tuple[Submodule, Submodule]:
    """(right socle, left socle) as two-sided ideals.

    Computed as annihilators of the radical; below the exhaustive bound
    both are re-derived as sums of minimal ideals and compared, so the
    annihilator identities soc(R_R) = l(J), soc(_RR) = r(J) are verified
    rather than assumed.
    """
    cached = ring._cache.get("socles")
    if cached is not None:
        return cached
    rad = jacobson_radical(ring, bounds)
    s_r = annihilator(ring, rad, "left").indices
    s_l = annihilator(ring, rad, "right").indices
    for idx, side in ((s_r, "right"), (s_l, "left")):
        if not is_closed_ideal(ring, idx, "two-sided"):
            raise InternalInconsistency(f"{side} socle is not a two-sided ideal")
    if ring.size <= bounds.axiom_exhaustive:
        for idx, side in ((s_r, "right"), (s_l, "left")):
            brute = _brute_socle(ring, side)
            if brute.size != idx.size or not (brute == idx).all():
                raise InternalInconsistency(
                    f"{side} socle disagrees with the minimal-ideal sum")
    out = (Submodule.from_indices(ring, "two-sided", s_r),
           Submodule.from_indices(ring, "two-sided", s_l))
    ring._cache["socles"] = out
    return out


def socle_module(ring: FiniteRing, side: str, bounds: Bounds = DEFAULT) -> FiniteModule:
    """The right (left) socle as a right (left) module."""
    s_r, s_l = socles(ring, bounds)
    sub = s_r if side == "right" else s_l
    return ideal_module(ring, sub.indices, side, label=f"soc-{side}")


def minimal_one_sided_ideals(ring: FiniteRing, side: str,
                             within=None) -> list[np.ndarray]:
    """All minimal right (left) ideals, each as a sorted index array.

    Scans cyclic ideals generated by every nonzero element of ``within``
    (default: the whole ring, which is exhaustive since minimal ideals
    are cyclic over each of their nonzero elements), then keeps those
    whose every nonzero element regenerates them.
    """
    mt = ring.mul_table
    pool = _as_indices(within) if within is not None else np.arange(ring.size)
    seen: dict[bytes, np.ndarray] = {}
    for y in pool:
        y = int(y)
        if y == ring.zero:
            continue
        ideal = np.unique(mt[y, :]) if side == "right" else np.unique(mt[:, y])
        seen.setdefault(ideal.tobytes(), ideal)
    out = []
    for ideal in seen.values():
        nz = ideal[ideal != ring.zero]
        if nz.size == 0:
            continue
        minimal = True
        for z in nz:
            cyc = np.unique(mt[int(z), :]) if side == "right" else np.unique(mt[:, int(z)])
            if cyc.size != ideal.size:
                minimal = False
                break
        if minimal:
            out.append(ideal)
    out.sort(key=lambda a: (a.size, tuple(a)))
    return out


def is_min_annihilator(ring: FiniteRing, side: str,
                       bounds: Bounds = DEFAULT) -> tuple[bool, np.ndarray | None]:
    """Whether every minimal right (left) ideal is an annihilator ideal.

    Returns (True, None) or (False, first failing minimal ideal).
    """
    s_r, s_l = socles(ring, bounds)
    sub = s_r if side == "right" else s_l
    for ideal in minimal_one_sided_ideals(ring, side, within=sub):
        if not is_annihilator_ideal(ring, ideal, side):
            return False, ideal
    return True, None


# -- per-class socle data ------------------------------------------------------


def projective_socle(ring: FiniteRing, profile: TopProfile, k: int,
                     side: str, bounds: Bounds = DEFAULT) -> Submodule:
    """soc(e_k.R) = e_k.S_r for side="right", soc(R.e_k) = S_l.e_k for left."""
    e = profile.basic[k]
    s_r, s_l = socles(ring, bounds)
    mt = ring.mul_table
    if side == "right":
        idx = np.unique(mt[e, s_r.indices])
    else:
        idx = np.unique(mt[s_l.indices, e])
    return Submodule.from_indices(ring, side, idx)


def support_types(ring: FiniteRing, profile: TopProfile, subset,
                  side: str) -> tuple[int, ...]:
    """Classes whose basic idempotent acts nontrivially on the subset."""
    idx = _as_indices(subset)
    mt = ring.mul_table
    out = []
    for l, e in enumerate(profile.basic):
        col = mt[idx, e] if side == "right" else mt[e, idx]
        if (col != ring.zero).any():
            out.append(l)
    return tuple(out)


def homogeneous_component(ring: FiniteRing, profile: TopProfile, k: int,
                          side: str, bounds: Bounds = DEFAULT) -> Submodule:
    """The type-k homogeneous component of the right (left) socle.

    Generated as a one-sided ideal by S.e_k (right) or e_k.S (left);
    the generators pick out exactly the type-k constituents, so the
    closure is the full isotypic part.
    """
    e = profile.basic[k]
    s_r, s_l = socles(ring, bounds)
    mt = ring.mul_table
    if side == "right":
        seeds = np.unique(mt[s_r.indices, e])
    else:
        seeds = np.unique(mt[e, s_l.indices])
    return ideal_generated(ring, [int(x) for x in seeds if x != ring.zero], side)


def idempotent_socle_form(ring: FiniteRing,
                          bounds: Bounds = DEFAULT) -> list[dict]:
    """Per-class socle summary used by reports: sizes, types, simplicity."""
    prof = top_profile(ring, bounds)
    out = []
    for k in range(prof.n):
        entry: dict = {"class": k, "idempotent": int(prof.basic[k])}
        for side in ("right", "left"):
            sub = projective_socle(ring, prof, k, side, bounds)
            types = support_types(ring, prof, sub, side)
            simple = (len(types) == 1
                      and sub.size == prof.simple_sizes[types[0]])
            entry[side] = {"size": sub.size, "types": list(types),
                           "simple": bool(simple)}
        out.append(entry)
    return out


# -- the Nakayama permutation --------------------------------------------------


@dataclass(eq=False)
class NakayamaResult:
    """Outcome of the Nakayama analysis.

    status is "permutation" or "fails"; on failure ``reason`` is one of
    NotQF2Right, NotQF2Left, NotKaschRight, NotKaschLeft, SoclesDiffer
    (checked in exactly that order) and ``witness`` the offending class
    index (or element index for SoclesDiffer).
    """
    ring: FiniteRing
    profile: TopProfile
    status: str
    reason: str | None = None
    witness: int | None = None
    perm: tuple[int, ...] | None = None

    @property
    def exists(self) -> bool:
        return self.status == "permutation"


def _socle_simple_type(ring, prof, k, side, bounds):
    sub = projective_socle(ring, prof, k, side, bounds)
    if sub.size == 1:
        raise InternalInconsistency(f"projective socle of class {k} is zero")
    types = support_types(ring, prof, sub, side)
    if len(types) == 1 and sub.size == prof.simple_sizes[types[0]]:
        return types[0]
    return None


def is_qf2(ring: FiniteRing, side: str, bounds: Bounds = DEFAULT) -> bool:
    """Whether every primitive right (left) ideal has a simple socle."""
    prof = top_profile(ring, bounds)
    return all(_socle_simple_type(ring, prof, k, side, bounds) is not None
               for k in range(prof.n))


def is_kasch(ring: FiniteRing, side: str, bounds: Bounds = DEFAULT) -> bool:
    """Whether every simple right (left) module embeds in the ring,
    i.e. the right (left) socle supports every class."""
    prof = top_profile(ring, bounds)
    s_r, s_l = socles(ring, bounds)
    sub = s_r if side == "right" else s_l
    return len(support_types(ring, prof, sub, side)) == prof.n


def nakayama_permutation(ring: FiniteRing, bounds: Bounds = DEFAULT) -> NakayamaResult:
    """Compute the Nakayama permutation or the first failing condition.

    When a permutation pi is found, the left socles are re-checked
    independently: soc(R.e_pi(k)) must be the left simple of type k.
    """
    cached = ring._cache.get("nakayama")
    if cached is not None:
        return cached
    prof = top_profile(ring, bounds)
    s_r, s_l = socles(ring, bounds)
    mt = ring.mul_table

    result = None
    right_types = []
    for k in range(prof.n):
        t = _socle_simple_type(ring, prof, k, "right", bounds)
        if t is None:
            result = NakayamaResult(ring, prof, "fails", "NotQF2Right", k)
            break
        right_types.append(t)
    if result is None:
        for k in range(prof.n):
            if _socle_simple_type(ring, prof, k, "left", bounds) is None:
                result = NakayamaResult(ring, prof, "fails", "NotQF2Left", k)
                break
    if result is None:
        for k, e in enumerate(prof.basic):
            if not (mt[s_r.indices, e] != ring.zero).any():
                result = NakayamaResult(ring, prof, "fails", "NotKaschRight", k)
                break
    if result is None:
        for k, e in enumerate(prof.basic):
            if not (mt[e, s_l.indices] != ring.zero).any():
                result = NakayamaResult(ring, prof, "fails", "NotKaschLeft", k)
                break
    if result is None and not (s_r.mask == s_l.mask).all():
        diff = int(np.nonzero(s_r.mask != s_l.mask)[0][0])
        result = NakayamaResult(ring, prof, "fails", "SoclesDiffer", diff)

    if result is None:
        perm = tuple(right_types)
        if sorted(perm) != list(range(prof.n)):
            raise InternalInconsistency(f"socle types {perm} are not a permutation")
        # independent left-side confirmation: soc(R.e_pi(k)) has type k
        for k in range(prof.n):
            t = _socle_simple_type(ring, prof, perm[k], "left", bounds)
            if t != k:
                raise InternalInconsistency(
                    f"left socle of class {perm[k]} has type {t}, expected {k}")
        result = NakayamaResult(ring, prof, "permutation", None, None, perm)
    ring._cache["nakayama"] = result
    return result


# -- submodule lattices --------------------------------------------------------


@dataclass(eq=False)
class LatticeSnapshot:
    """All submodules of a finite module, with covering edges.

    ``nodes`` are sorted index tuples (module indices), ordered by
    (size, lexicographic); ``edges`` are covering pairs (i, j) meaning
    nodes[i] is covered by nodes[j].
    """
    module: FiniteModule
    nodes: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    @property
    def is_chain(self) -> bool:
        order = sorted(range(len(self.nodes)), key=lambda i: len(self.nodes[i]))
        for a, b in zip(order, order[1:]):
            if not set(self.nodes[a]) <= set(self.nodes[b]):
                return False
        return True

    def node_sizes(self) -> tuple[int, ...]:
        return tuple(len(n) for n in self.nodes)


_LATTICE_NODE_CAP = 4096


def submodule_lattice(module: FiniteModule, bounds: Bounds = DEFAULT) -> LatticeSnapshot:
    """Enumerate every submodule of a module of order <= bounds.lattice.

    Cyclic submodules are closed under pairwise join (the elementwise
    sum of two submodules is already a submodule), which reaches every
    submodule since each is the join of its cyclics.
    """
    if module.size > bounds.lattice:
        raise TooLarge(f"lattice enumeration gated to order {bounds.lattice}, "
                       f"module has {module.size}")
    cyclics: dict[bytes, np.ndarray] = {}
    for m in range(module.size):
        idx = np.ascontiguousarray(module.submodule_closure([m]), dtype=np.int64)
        cyclics.setdefault(idx.tobytes(), idx)
    gens = list(cyclics.values())
    subs: dict[bytes, np.ndarray] = dict(cyclics)
    work = list(cyclics.values())
    add = module.add_table
    while work:
        cur = work.pop()
        for g in gens:
            s = np.unique(add[np.ix_(cur, g)]).astype(np.int64)
            key = s.tobytes()
            if key not in subs:
                subs[key] = s
                work.append(s)
                if len(subs) > _LATTICE_NODE_CAP:
                    raise TooLarge(f"lattice has more than {_LATTICE_NODE_CAP} nodes")
    nodes = sorted((tuple(int(i) for i in v) for v in subs.values()),
                   key=lambda t: (len(t), t))
    k = len(nodes)
    masks = np.zeros((k, module.size), dtype=bool)
    for i, nd in enumerate(nodes):
        masks[i, list(nd)] = True
    strict = np.zeros((k, k), dtype=bool)
    for i in range(k):
        contains = ~(masks & ~masks[i][None, :]).any(axis=1)  # rows inside nodes[i]
        strict[:, i] = contains
    sizes = np.array([len(n) for n in nodes])
    strict &= sizes[:, None] < sizes[None, :]
    through = (strict.astype(np.float32) @ strict.astype(np.float32)) > 0.5
    cover = strict & ~through
    edges = tuple((int(i), int(j)) for i, j in zip(*np.nonzero(cover)))
    return LatticeSnapshot(module, tuple(nodes), edges)


# -- annihilator duality -------------------------------------------------------


def _lattice_ring_sets(ring: FiniteRing, sub: Submodule, side: str,
                       bounds: Bounds) -> list[np.ndarray]:
    """All submodules of a one-sided ideal, as ring index arrays."""
    mod = ideal_module(ring, sub.indices, side)
    lat = submodule_lattice(mod, bounds)
    carrier = mod.carrier
    return [np.sort(carrier[list(nd)]) for nd in lat.nodes]


def _ideals_over_radical(ring: FiniteRing, side: str, bounds: Bounds) -> list[np.ndarray]:
    """All one-sided ideals containing J, as ring index arrays."""
    key = f"over-rad-{side}-{bounds.lattice}"
    cached = ring._cache.get(key)
    if cached is not None:
        return cached
    rad = jacobson_radical(ring, bounds)
    reg = regular_module(ring, side)
    quo = quotient_module(reg, Submodule.from_indices(ring, side, rad.indices))
    lat = submodule_lattice(quo, bounds)
    proj = quo.projection
    out = []
    for nd in lat.nodes:
        keep = np.zeros(quo.size, dtype=bool)
        keep[list(nd)] = True
        out.append(np.nonzero(keep[proj])[0])
    ring._cache[key] = out
    return out


def annihilator_duality_report(ring: FiniteRing, bounds: Bounds = DEFAULT) -> dict:
    """Check both annihilator dualities, unconditionally.

    right_pair: submodules of the right socle against left ideals
    containing the radical, under I -> l(I) and L -> r(L);
    left_pair is the mirror.  Each side reports whether every closure
    r(l(I)) == I and l(r(L)) == L holds and whether the counts agree,
    with the first failing set recorded as a witness.
    """
    key = f"duality-{bounds.lattice}"
    cached = ring._cache.get(key)
    if cached is not None:
        return cached
    s_r, s_l = socles(ring, bounds)
    report: dict = {}
    for tag, sub, sub_side, over_side in (
            ("right_pair", s_r, "right", "left"),
            ("left_pair", s_l, "left", "right")):
        socle_subs = _lattice_ring_sets(ring, sub, sub_side, bounds)
        over = _ideals_over_radical(ring, over_side, bounds)
        socle_keys = {np.ascontiguousarray(a, dtype=np.int64).tobytes() for a in socle_subs}
        over_keys = {np.ascontiguousarray(a, dtype=np.int64).tobytes() for a in over}
        entry = {"socle_submodules": len(socle_subs),
                 "ideals_over_radical": len(over),
                 "counts_match": len(socle_subs) == len(over),
                 "closure_failures": 0, "image_failures": 0, "witness": None}

        def _fail(entry, idx):
            entry["closure_failures"] += 1
            if entry["witness"] is None:
                entry["witness"] = [int(i) for i in idx]

        first, second = ("left", "right") if sub_side == "right" else ("right", "left")
        for idx in socle_subs:
            image = annihilator(ring, idx, first)
            if np.ascontiguousarray(image.indices, dtype=np.int64).tobytes() not in over_keys:
                entry["image_failures"] += 1
                if entry["witness"] is None:
                    entry["witness"] = [int(i) for i in idx]
            back = annihilator(ring, image, second)
            if back.indices.size != idx.size or not (back.indices == idx).all():
                _fail(entry, idx)
        for idx in over:
            image = annihilator(ring, idx, second)
            if np.ascontiguousarray(image.indices, dtype=np.int64).tobytes() not in socle_keys:
                entry["image_failures"] += 1
                if entry["witness"] is None:
                    entry["witness"] = [int(i) for i in idx]
            back = annihilator(ring, image, first)
            if back.indices.size != idx.size or not (back.indices == idx).all():
                _fail(entry, idx)
        entry["holds"] = bool(entry["counts_match"]
                              and entry["closure_failures"] == 0
                              and entry["image_failures"] == 0)
        report[tag] = entry
    report["holds"] = bool(report["right_pair"]["holds"] and report["left_pair"]["holds"])
    ring._cache[key] = report
    return report


def verify_annihilator_duality(ring: FiniteRing, bounds: Bounds = DEFAULT) -> dict:
    """The duality report, gated on the Nakayama permutation existing.

    Raises PreconditionUnmet when the ring has no Nakayama permutation,
    and InternalInconsistency if it has one but a duality fails (that
    combination cannot occur for a correct implementation).
    """
    nak = nakayama_permutation(ring, bounds)
    if not nak.exists:
        raise PreconditionUnmet(f"no Nakayama permutation: {nak.reason}")
    report = annihilator_duality_report(ring, bounds)
    if not report["holds"]:
        raise InternalInconsistency("duality fails although a permutation exists")
    return report
