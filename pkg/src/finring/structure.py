"""Semiperfect structure extraction: radical, idempotents, top profile.

Every finite ring is semiperfect, so the identity splits into orthogonal
primitive idempotents and the quotient by the radical is a product of
matrix rings over finite fields.  This module computes that data
deterministically (smallest-index greedy peel, discovery-order classes)
and cross-validates it against size identities before anything
downstream gets to use it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import DEFAULT, Bounds
from .core import (
    FiniteRing,
    InternalInconsistency,
    NotSubmodule,
    PreconditionUnmet,
    Submodule,
    TooLarge,
    additive_closure,
    ideal_module,
    is_closed_ideal,
    quotient_module,
    validate_ring_tables,
)
from .core import FiniteModule


# -- radical -----------------------------------------------------------------


def jacobson_radical(ring: FiniteRing, bounds: Bounds = DEFAULT) -> Submodule:
    """The Jacobson radical, via quasi-regularity.

    x is in the radical iff 1 - yx is a unit for every y.  The scan is
    one fancy-indexing pass over the multiplication table.  The result
    is cross-checked to be a two-sided nilpotent ideal whose quotient
    has zero radical (the latter only while the quotient is small enough
    to rebuild cheaply).
    """
    cached = ring._cache.get("radical")
    if cached is not None:
        return cached
    mt = ring.mul_table
    mask = ring.unit_mask[ring.one_minus_vec[mt]].all(axis=0)
    rad = np.nonzero(mask)[0]
    if not is_closed_ideal(ring, rad, "two-sided"):
        raise InternalInconsistency("quasi-regular set is not a two-sided ideal")

    # nilpotency, recording the chain J, J^2, ... for Loewy consumers
    powers = [rad]
    cur = rad
    while cur.size > 1:
        prod = np.unique(mt[np.ix_(cur, cur)].reshape(-1))
        nxt = additive_closure(ring.add_table, prod)
        if nxt.size >= cur.size:
            raise InternalInconsistency("radical is not nilpotent")
        powers.append(nxt)
        cur = nxt
    if int(cur[0]) != ring.zero:
        raise InternalInconsistency("radical chain does not end at zero")

    sub = Submodule.from_indices(ring, "two-sided", rad)
    ring._cache["radical"] = sub
    ring._cache["radical_powers"] = [
        Submodule.from_indices(ring, "two-sided", p) for p in powers]

    if ring.size <= bounds.axiom_exhaustive:
        q = quotient_ring(ring, sub, validate=False)
        qmask = q.unit_mask[q.one_minus_vec[q.mul_table]].all(axis=0)
        if qmask.sum() != 1:
            raise InternalInconsistency("quotient by the radical is not semiprimitive")
    return sub


def radical_powers(ring: FiniteRing, bounds: Bounds = DEFAULT) -> list[Submodule]:
    """[J, J^2, ..., (0)] — computed alongside the radical and cached."""
    jacobson_radical(ring, bounds)
    return list(ring._cache["radical_powers"])


def quotient_ring(ring: FiniteRing, ideal, *, validate: bool = True) -> FiniteRing:
    """R/I for a two-sided ideal, cosets labelled by smallest element."""
    idx = ideal.indices if isinstance(ideal, Submodule) else \
        np.unique(np.asarray(list(ideal), dtype=np.int64))
    if not is_closed_ideal(ring, idx, "two-sided"):
        raise NotSubmodule("quotient requires a two-sided ideal")
    reps_of = ring.add_table[:, idx].min(axis=1)
    reps = np.unique(reps_of)
    proj = np.searchsorted(reps, reps_of).astype(np.int64)
    add = proj[reps_of[ring.add_table[np.ix_(reps, reps)]]]
    mul = proj[reps_of[ring.mul_table[np.ix_(reps, reps)]]]
    zero = int(proj[reps_of[ring.zero]])
    one = int(proj[reps_of[ring.one]])
    if validate:
        validate_ring_tables(add, mul, zero, one)
    out = FiniteRing(add, mul, zero=zero, one=one,
                     name=f"{ring.name}/I" if ring.name else "quotient",
                     provenance="quotient")
    out.reps = reps
    out.projection = proj
    return out


# -- primitive idempotents and isomorphism classes ---------------------------


@dataclass(eq=False)
class PrimitiveDecomposition:
    """An orthogonal decomposition 1 = e_1 + ... + e_m into primitives.

    ``prims`` is in greedy discovery order (smallest index first at each
    peel step); ``classes`` partitions positions of ``prims`` into
    isomorphism classes of the projectives e.R, ordered by first
    discovery; ``basic`` holds one representative idempotent per class
    and ``mu`` the class sizes.
    """
    ring: FiniteRing
    prims: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    basic: tuple[int, ...]
    mu: tuple[int, ...]
    witnesses: dict


def _is_primitive(ring: FiniteRing, e: int, idems: np.ndarray) -> bool:
    mt = ring.mul_table
    sub = (mt[e, idems] == idems) & (mt[idems, e] == idems)
    return int(sub.sum()) == 2


def iso_witness(ring: FiniteRing, ei: int, ej: int,
                bounds: Bounds = DEFAULT):
    """A pair (x, y) with x in ei.R.ej, y in ej.R.ei, xy = ei, yx = ej.

    Such a pair exists exactly when the projectives ei.R and ej.R are
    isomorphic; returns None when there is none.
    """
    mt = ring.mul_table
    A = np.unique(mt[mt[ei, :], ej])
    B = np.unique(mt[mt[ej, :], ei])
    if A.size * B.size > bounds.witness_pairs:
        raise TooLarge(f"witness search over {A.size * B.size} pairs "
                       f"exceeds {bounds.witness_pairs}")
    P = mt[np.ix_(A, B)]
    xs, ys = np.nonzero(P == ei)
    for x, y in zip(A[xs], B[ys]):
        if int(mt[y, x]) == ej:
            return int(x), int(y)
    return None


def primitive_decomposition(ring: FiniteRing,
                            bounds: Bounds = DEFAULT) -> PrimitiveDecomposition:
    """Greedy orthogonal decomposition of 1 with isomorphism classes."""
    cached = ring._cache.get("decomposition")
    if cached is not None:
        return cached
    mt = ring.mul_table
    idems = ring.idempotents()
    prims: list[int] = []
    u = ring.one
    while u != ring.zero:
        if int(mt[u, u]) != u:
            raise InternalInconsistency("peel complement is not idempotent")
        under = idems[(mt[u, idems] == idems) & (mt[idems, u] == idems)]
        under = under[under != ring.zero]
        for e in under:
            if _is_primitive(ring, int(e), idems):
                break
        else:
            raise InternalInconsistency("no primitive idempotent under the complement")
        e = int(e)
        prims.append(e)
        u = ring.sub(u, e)

    classes: list[list[int]] = []
    witnesses: dict = {}
    for pos, e in enumerate(prims):
        placed = False
        for c in classes:
            rep = prims[c[0]]
            w = iso_witness(ring, rep, e, bounds)
            if w is not None:
                c.append(pos)
                witnesses[(c[0], pos)] = w
                placed = True
                break
        if not placed:
            classes.append([pos])
    out = PrimitiveDecomposition(
        ring, tuple(prims), tuple(tuple(c) for c in classes),
        tuple(prims[c[0]] for c in classes),
        tuple(len(c) for c in classes), witnesses)
    ring._cache["decomposition"] = out
    return out


# -- the top profile ----------------------------------------------------------


@dataclass(eq=False)
class TopProfile:
    """Everything the semisimple quotient R/J determines.

    field_sizes[k] is |e_k.R.e_k / e_k.J.e_k| (the residue field of the
    k-th class), mu[k] the multiplicity, simple_sizes[k] the size
    field_sizes[k] ** mu[k] of the k-th simple right (or left) module.
    """
    ring: FiniteRing
    n: int
    prims: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    basic: tuple[int, ...]
    mu: tuple[int, ...]
    field_sizes: tuple[int, ...]
    simple_sizes: tuple[int, ...]
    radical: Submodule

    @property
    def decomposition(self) -> PrimitiveDecomposition:
        return self.ring._cache["decomposition"]

    def describe(self) -> str:
        parts = [f"M_{m}(GF({q}))" for m, q in zip(self.mu, self.field_sizes)]
        return " x ".join(parts)


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True  # n itself prime


def top_profile(ring: FiniteRing, bounds: Bounds = DEFAULT) -> TopProfile:
    """Compute and cross-validate the semisimple top of the ring.

    Validation: each residue size must be a prime power, the product of
    field_sizes[k] ** (mu[k]^2) must equal |R/J|, and each projective
    must satisfy |e_k.R| / |e_k.J| == simple_sizes[k].
    """
    cached = ring._cache.get("top_profile")
    if cached is not None:
        return cached
    rad = jacobson_radical(ring, bounds)
    dec = primitive_decomposition(ring, bounds)
    mt = ring.mul_table
    field_sizes: list[int] = []
    simple_sizes: list[int] = []
    for k, e in enumerate(dec.basic):
        corner = np.unique(mt[mt[e, :], e])
        corner_rad = np.unique(mt[mt[e, rad.indices], e])
        # e.J.e = eRe intersect J, and both scans land inside eRe
        if corner.size % corner_rad.size:
            raise InternalInconsistency("corner radical does not divide the corner")
        m = corner.size // corner_rad.size
        if not _is_prime_power(m):
            raise InternalInconsistency(f"residue size {m} is not a prime power")
        field_sizes.append(m)
        proj_size = int(np.unique(mt[e, :]).size)
        top_size = proj_size // int(np.unique(mt[e, rad.indices]).size)
        if top_size != m ** dec.mu[k]:
            raise InternalInconsistency(
                f"projective top has size {top_size}, expected {m}^{dec.mu[k]}")
        simple_sizes.append(m ** dec.mu[k])
    semis = ring.size // rad.size
    check = 1
    for m, mu in zip(field_sizes, dec.mu):
        check *= m ** (mu * mu)
    if check != semis:
        raise InternalInconsistency(
            f"top profile predicts |R/J| = {check}, actual {semis}")
    out = TopProfile(ring, len(dec.basic), dec.prims, dec.classes, dec.basic,
                     dec.mu, tuple(field_sizes), tuple(simple_sizes), rad)
    ring._cache["top_profile"] = out
    return out


# -- simple modules and isotypic recognition ---------------------------------


def simple_module(ring: FiniteRing, profile: TopProfile, k: int,
                  side: str = "right") -> FiniteModule:
    """The k-th simple module, as e_k.R / e_k.J (or its left mirror)."""
    e = profile.basic[k]
    mt = ring.mul_table
    rad = profile.radical.indices
    if side == "right":
        car = np.unique(mt[e, :])
        sub = np.unique(mt[e, rad]) if rad.size else np.array([ring.zero])
    elif side == "left":
        car = np.unique(mt[:, e])
        sub = np.unique(mt[rad, e]) if rad.size else np.array([ring.zero])
    else:
        raise ValueError(f"unknown side {side!r}")
    parent = ideal_module(ring, car, side, label=f"P{k}-{side}")
    q = quotient_module(parent, Submodule.from_indices(ring, side, sub))
    q.label = f"V{k}-{side}"
    if q.size != profile.simple_sizes[k]:
        raise InternalInconsistency(
            f"simple module {k} has size {q.size}, profile says {profile.simple_sizes[k]}")
    return q


def top_support(module: FiniteModule, profile: TopProfile) -> tuple[int, ...]:
    """Classes k whose basic idempotent acts nontrivially on the module."""
    return tuple(k for k, e in enumerate(profile.basic)
                 if bool((module.act_table[:, e] != 0).any()))


def simple_type(module: FiniteModule, profile: TopProfile) -> int:
    """The unique class supporting an isotypic (e.g. simple) module."""
    s = top_support(module, profile)
    if len(s) != 1:
        raise PreconditionUnmet(f"module is not isotypic: support {s}")
    return s[0]
