"""Dense-indexed finite rings and their modules.

A ring element is an integer index ``0 .. size-1``.  A ring is a pair of
index tables (addition, multiplication) plus distinguished zero/one
indices; subsets live as boolean masks over the index range.  All bulk
algebra is vectorised numpy over these tables, so everything downstream
(units, radicals, annihilators, closures) reduces to fancy indexing.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .bounds import DEFAULT, Bounds


class RingError(Exception):
    """Base class for all structured errors raised by this package."""


class AxiomViolation(RingError):
    """A ring axiom failed; carries the axiom name and a witness tuple."""

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at witness {witness}")


class AssociativityViolation(AxiomViolation):
    """Multiplication is not associative (formal-matrix product maps)."""

    def __init__(self, witness: tuple, slots: tuple | None = None):
        self.slots = slots
        where = f" in slot quadruple {slots}" if slots else ""
        AxiomViolation.__init__(self, "mul-associativity" + where, witness)


class NotSubmodule(RingError):
    """A claimed submodule is not closed under addition or the action."""


class NotSemisimple(RingError):
    """The module is not killed by the radical."""


class NonIntegralLength(RingError):
    """A component size is not an exact power |m_k|^(mu_k * n_k)."""


class NotIdempotent(RingError):
    pass


class NotLocal(RingError):
    """A base ring whose non-units do not form an ideal."""


class TooLarge(RingError):
    """A search space exceeds its configured bound."""


class PreconditionUnmet(RingError):
    """An operation's stated precondition does not hold for this input."""


class InternalInconsistency(RingError):
    """Two independent computations of the same value disagree (a bug)."""


def _dtype_for(size: int):
    if size > np.iinfo(np.int16).max:
        raise TooLarge(f"ring of size {size} exceeds the index dtype range")
    return np.int16


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class FiniteRing:
    """A finite unital ring on indices 0..size-1 with materialised tables."""

    def __init__(self, add_table: np.ndarray, mul_table: np.ndarray, *,
                 zero: int, one: int, name: str = "",
                 provenance: str = "table"):
        self.size = int(add_table.shape[0])
        self.add_table = _freeze(np.ascontiguousarray(add_table, dtype=_dtype_for(self.size)))
        self.mul_table = _freeze(np.ascontiguousarray(mul_table, dtype=self.add_table.dtype))
        self.zero = int(zero)
        self.one = int(one)
        self.name = name
        self.provenance = provenance
        self._cache: dict = {}

    def __repr__(self):
        tag = self.name or self.provenance
        return f"FiniteRing({tag}, size={self.size})"

    # -- scalar arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_vec[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_vec[b]])

    def elements(self) -> range:
        return range(self.size)

    def is_idempotent(self, e: int) -> bool:
        return int(self.mul_table[e, e]) == e

    # -- cached bulk views -------------------------------------------------

    @property
    def neg_vec(self) -> np.ndarray:
        """neg_vec[a] is the additive inverse of a."""
        v = self._cache.get("neg")
        if v is None:
            rows, cols = np.nonzero(self.add_table == self.zero)
            v = np.empty(self.size, dtype=self.add_table.dtype)
            v[rows] = cols
            self._cache["neg"] = _freeze(v)
        return self._cache["neg"]

    @property
    def one_minus_vec(self) -> np.ndarray:
        """one_minus_vec[a] = 1 - a, used by the quasi-regularity scan."""
        v = self._cache.get("one_minus")
        if v is None:
            v = _freeze(self.add_table[self.one][self.neg_vec])
            self._cache["one_minus"] = v
        return self._cache["one_minus"]

    @property
    def unit_mask(self) -> np.ndarray:
        """Boolean mask of invertible elements.

        One-sided inverses suffice: a finite ring is Dedekind-finite, so
        any x with xy = 1 is a two-sided unit.
        """
        m = self._cache.get("units")
        if m is None:
            m = _freeze((self.mul_table == self.one).any(axis=1))
            self._cache["units"] = m
        return self._cache["units"]

    def idempotents(self) -> np.ndarray:
        """All idempotent indices, ascending."""
        e = self._cache.get("idem")
        if e is None:
            ar = np.arange(self.size)
            e = _freeze(ar[self.mul_table[ar, ar] == ar])
            self._cache["idem"] = e
        return self._cache["idem"]


def units(ring: FiniteRing) -> np.ndarray:
    """Indices of the unit group of ``ring``, ascending."""
    return np.nonzero(ring.unit_mask)[0]


# -- table-ring construction (the oracle entry point) ----------------------


def _locate_identities(add_table: np.ndarray, mul_table: np.ndarray):
    n = add_table.shape[0]
    ar = np.arange(n)
    zero = one = None
    for z in range(n):
        if (add_table[z] == ar).all():
            zero = z
            break
    if zero is None:
        raise AxiomViolation("additive-identity", ("missing",))
    for u in range(n):
        if (mul_table[u] == ar).all() and (mul_table[:, u] == ar).all():
            one = u
            break
    if one is None:
        raise AxiomViolation("multiplicative-identity", ("missing",))
    return zero, one


def _first_bad(triple_mask: np.ndarray, offset: int) -> tuple:
    a, b, c = np.nonzero(triple_mask)
    return (int(a[0]) + offset, int(b[0]), int(c[0]))


def validate_ring_tables(add_table: np.ndarray, mul_table: np.ndarray,
                         zero: int, one: int, bounds: Bounds = DEFAULT,
                         rng_seed: int = 0) -> None:
    """Check the ring axioms on index tables.

    Exhaustive for orders up to ``bounds.axiom_exhaustive``; above that,
    associativity and distributivity are spot-checked on
    ``bounds.axiom_samples`` random triples (seeded, so reproducible).
    Raises AxiomViolation with a witness triple on the first failure.
    """
    n = add_table.shape[0]
    ar = np.arange(n)
    if add_table.shape != (n, n) or mul_table.shape != (n, n):
        raise AxiomViolation("table-shape", (add_table.shape, mul_table.shape))
    for tab, label in ((add_table, "add"), (mul_table, "mul")):
        if tab.min() < 0 or tab.max() >= n:
            raise AxiomViolation(f"{label}-closure", (int(tab.min()), int(tab.max())))

    if not (add_table == add_table.T).all():
        bad = np.nonzero(add_table != add_table.T)
        raise AxiomViolation("add-commutativity", (int(bad[0][0]), int(bad[1][0])))
    if not (add_table[zero] == ar).all():
        raise AxiomViolation("additive-identity", (zero,))
    # every element needs an additive inverse (exactly one zero per row)
    if not ((add_table == zero).sum(axis=1) == 1).all():
        bad = int(np.nonzero((add_table == zero).sum(axis=1) != 1)[0][0])
        raise AxiomViolation("additive-inverse", (bad,))
    if not (mul_table[one] == ar).all() or not (mul_table[:, one] == ar).all():
        raise AxiomViolation("multiplicative-identity", (one,))

    if n <= bounds.axiom_exhaustive:
        block = max(1, (1 << 22) // max(n * n, 1))
        for start in range(0, n, block):
            rows = slice(start, min(start + block, n))
            a_add = add_table[rows]
            a_mul = mul_table[rows]
            lhs = add_table[a_add, :]                     # (a+b)+c
            rhs = add_table[rows.start:rows.stop, add_table]  # a+(b+c)
            if not (lhs == rhs).all():
                raise AxiomViolation("add-associativity", _first_bad(lhs != rhs, start))
            lhs = mul_table[a_mul, :]                     # (ab)c
            rhs = mul_table[rows.start:rows.stop, mul_table]
            if not (lhs == rhs).all():
                raise AxiomViolation("mul-associativity", _first_bad(lhs != rhs, start))
            lhs = mul_table[rows.start:rows.stop, add_table]  # a(b+c)
            rhs = add_table[a_mul[:, :, None], mul_table[rows.start:rows.stop, None, :]]
            # rhs above is ab + ac with axes (a, b, c)
            if not (lhs == rhs).all():
                raise AxiomViolation("left-distributivity", _first_bad(lhs != rhs, start))
            lhs = mul_table[add_table[rows], :]            # (a+b)c
            rhs = add_table[mul_table[rows.start:rows.stop, None, :], mul_table[None, :, :]]
            # rhs is ac + bc with axes (a, b, c)
            if not (lhs == rhs).all():
                raise AxiomViolation("right-distributivity", _first_bad(lhs != rhs, start))
    else:
        rng = random.Random(rng_seed ^ n)
        k = bounds.axiom_samples
        a = np.fromiter((rng.randrange(n) for _ in range(k)), dtype=np.int64)
        b = np.fromiter((rng.randrange(n) for _ in range(k)), dtype=np.int64)
        c = np.fromiter((rng.randrange(n) for _ in range(k)), dtype=np.int64)
        bad = mul_table[mul_table[a, b], c] != mul_table[a, mul_table[b, c]]
        if bad.any():
            i = int(np.nonzero(bad)[0][0])
            raise AxiomViolation("mul-associativity", (int(a[i]), int(b[i]), int(c[i])))
        bad = mul_table[a, add_table[b, c]] != add_table[mul_table[a, b], mul_table[a, c]]
        if bad.any():
            i = int(np.nonzero(bad)[0][0])
            raise AxiomViolation("left-distributivity", (int(a[i]), int(b[i]), int(c[i])))
        bad = mul_table[add_table[a, b], c] != add_table[mul_table[a, c], mul_table[b, c]]
        if bad.any():
            i = int(np.nonzero(bad)[0][0])
            raise AxiomViolation("right-distributivity", (int(a[i]), int(b[i]), int(c[i])))


def build_table_ring(add_table, mul_table, *, name: str = "",
                     bounds: Bounds = DEFAULT) -> FiniteRing:
    """Build a ring straight from addition/multiplication index tables.

    This is the oracle path: tables come from independent constructions
    (modular arithmetic, explicit matrices) and are fully validated here.
    Rejects non-rings with an AxiomViolation carrying a witness.
    """
    add_table = np.asarray(add_table)
    mul_table = np.asarray(mul_table)
    if add_table.shape[0] > bounds.max_order:
        raise TooLarge(f"order {add_table.shape[0]} exceeds max_order={bounds.max_order}")
    zero, one = _locate_identities(add_table, mul_table)
    validate_ring_tables(add_table, mul_table, zero, one, bounds)
    return FiniteRing(add_table, mul_table, zero=zero, one=one,
                      name=name, provenance="table")


# -- subsets, closures, submodules ------------------------------------------


def additive_closure(add_table: np.ndarray, indices) -> np.ndarray:
    """Smallest subgroup of the additive group containing ``indices``."""
    cur = np.unique(np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices,
                               dtype=np.int64))
    if cur.size == 0:
        return np.array([0], dtype=np.int64)
    while True:
        nxt = np.union1d(cur, add_table[np.ix_(cur, cur)])
        if nxt.size == cur.size:
            return nxt
        cur = nxt


@dataclass(eq=False)
class Submodule:
    """A one-sided (or two-sided) ideal, or plain subgroup, as a bitmask.

    ``mask`` indexes the parent ring; ``side`` records the closure the
    set is known to have.  Equality and hashing compare the element set
    only, so a right and a left ideal with the same elements compare
    equal (that is exactly the "socles coincide" test).
    """
    ring: FiniteRing
    side: str                     # "right" | "left" | "two-sided" | "additive"
    mask: np.ndarray
    generators: tuple[int, ...] | None = None
    _indices: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def from_indices(cls, ring: FiniteRing, side: str, indices,
                     generators=None) -> "Submodule":
        mask = np.zeros(ring.size, dtype=bool)
        idx = np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices,
                         dtype=np.int64)
        mask[idx] = True
        return cls(ring, side, mask, tuple(generators) if generators else None)

    @property
    def indices(self) -> np.ndarray:
        if self._indices is None:
            self._indices = np.nonzero(self.mask)[0]
        return self._indices

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, i: int) -> bool:
        return bool(self.mask[i])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Submodule) and self.ring is other.ring
                and (self.mask == other.mask).all())

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask.tobytes()))

    def __le__(self, other: "Submodule") -> bool:
        return bool((~other.mask[self.indices]).sum() == 0)

    def __and__(self, other: "Submodule") -> "Submodule":
        return Submodule(self.ring, self.side, self.mask & other.mask)

    def __repr__(self):
        return f"Submodule({self.side}, size={self.size})"


def ideal_generated(ring: FiniteRing, generators, side: str,
                    _within: np.ndarray | None = None) -> Submodule:
    """Closure of ``generators`` as a right/left/two-sided ideal.

    Worklist algorithm: alternate a multiplication sweep with additive
    closure until a fixpoint.  Idempotent: feeding the result's elements
    back in returns the same set.
    """
    if side not in ("right", "left", "two-sided"):
        raise ValueError(f"unknown side {side!r}")
    gens = tuple(int(g) for g in generators)
    cur = additive_closure(ring.add_table, list(gens) + [ring.zero])
    while True:
        parts = [cur]
        if side in ("right", "two-sided"):
            parts.append(np.unique(ring.mul_table[cur, :]))
        if side in ("left", "two-sided"):
            parts.append(np.unique(ring.mul_table[:, cur]))
        grown = np.unique(np.concatenate(parts))
        if grown.size == cur.size:
            return Submodule.from_indices(ring, side, cur, generators=gens)
        cur = additive_closure(ring.add_table, grown)


def is_closed_ideal(ring: FiniteRing, indices: np.ndarray, side: str) -> bool:
    """True when the index set is already an ideal of the given side."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[indices] = True
    if not mask[ring.zero]:
        return False
    if not mask[ring.add_table[np.ix_(indices, indices)]].all():
        return False
    if side in ("right", "two-sided") and not mask[ring.mul_table[indices, :]].all():
        return False
    if side in ("left", "two-sided") and not mask[ring.mul_table[:, indices]].all():
        return False
    return True


# -- finite modules ----------------------------------------------------------


class FiniteModule:
    """A finite one-sided module, with the same dense-index discipline.

    ``act_table[m, r]`` is the index of ``m . r`` for right modules and
    of ``r . m`` for left modules; the zero element is always index 0.
    ``carrier`` maps module indices back to ring indices when the module
    is a subset of the ring, and is None for abstract quotients.
    """

    def __init__(self, ring: FiniteRing, side: str, add_table: np.ndarray,
                 act_table: np.ndarray, *, carrier: np.ndarray | None = None,
                 label: str = ""):
        self.ring = ring
        self.side = side
        self.size = int(add_table.shape[0])
        self.add_table = _freeze(np.ascontiguousarray(add_table))
        self.act_table = act_table if act_table.flags.writeable is False \
            else _freeze(np.ascontiguousarray(act_table))
        self.carrier = None if carrier is None else _freeze(np.asarray(carrier))
        self.label = label
        self.zero = 0

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"FiniteModule({self.side},{tag} size={self.size})"

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def act(self, m: int, r: int) -> int:
        return int(self.act_table[m, r])

    def socle_mask(self, radical_indices: np.ndarray) -> np.ndarray:
        """Elements killed by every radical element."""
        if radical_indices.size == 0:
            return np.ones(self.size, dtype=bool)
        return (self.act_table[:, radical_indices] == 0).all(axis=1)

    def submodule_closure(self, indices) -> np.ndarray:
        """Smallest submodule containing ``indices`` (module indices)."""
        cur = additive_closure(self.add_table, indices)
        while True:
            grown = np.union1d(cur, self.act_table[cur, :])
            if grown.size == cur.size:
                return cur
            cur = additive_closure(self.add_table, grown)


def regular_module(ring: FiniteRing, side: str) -> FiniteModule:
    """The ring as a module over itself; tables are shared views."""
    act = ring.mul_table if side == "right" else ring.mul_table.T
    return FiniteModule(ring, side, ring.add_table, act,
                        carrier=np.arange(ring.size), label="regular")


def ideal_module(ring: FiniteRing, indices, side: str, label: str = "") -> FiniteModule:
    """A one-sided ideal viewed as a module; raises NotSubmodule if not closed."""
    idx = indices.indices if isinstance(indices, Submodule) else \
        np.unique(np.asarray(list(indices), dtype=np.int64))
    if not is_closed_ideal(ring, idx, side):
        raise NotSubmodule(f"set of size {idx.size} is not a {side} ideal")
    if idx.size == ring.size:
        return regular_module(ring, side)
    pos = np.full(ring.size, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    add = pos[ring.add_table[np.ix_(idx, idx)]]
    raw = ring.mul_table[idx, :] if side == "right" else ring.mul_table[:, idx].T
    act = pos[raw]
    return FiniteModule(ring, side, add, act, carrier=idx, label=label)


class QuotientModule(FiniteModule):
    """Quotient M/N with smallest-index coset representatives."""

    def __init__(self, parent: FiniteModule, sub_indices: np.ndarray):
        reps_of = parent.add_table[:, sub_indices].min(axis=1)
        reps = np.unique(reps_of)
        proj = np.searchsorted(reps, reps_of).astype(np.int64)
        add = proj[parent.add_table[np.ix_(reps, reps)]]
        act = proj[parent.act_table[reps, :]]
        super().__init__(parent.ring, parent.side, add, act,
                         label=f"{parent.label}/N" if parent.label else "quotient")
        self.parent = parent
        self.reps = _freeze(reps)        # coset id -> parent rep index
        self.projection = _freeze(proj)  # parent index -> coset id


def quotient_module(parent: FiniteModule, sub) -> QuotientModule:
    """M/N for a submodule N, with cosets labelled by their smallest element."""
    if isinstance(sub, Submodule):
        if parent.carrier is None:
            raise NotSubmodule("ring-level Submodule against an abstract module")
        pos = np.full(parent.ring.size, -1, dtype=np.int64)
        pos[parent.carrier] = np.arange(parent.size)
        if (pos[sub.indices] < 0).any():
            raise NotSubmodule("submodule is not contained in the module")
        idx = pos[sub.indices]
    else:
        idx = np.unique(np.asarray(list(sub), dtype=np.int64))
    # closure checks: additive subgroup, stable under the ring action
    mask = np.zeros(parent.size, dtype=bool)
    mask[idx] = True
    if not mask[0] or not mask[parent.add_table[np.ix_(idx, idx)]].all():
        raise NotSubmodule("not an additive subgroup")
    if not mask[parent.act_table[idx, :]].all():
        raise NotSubmodule("not stable under the ring action")
    return QuotientModule(parent, idx)


# -- semisimple multiplicities ----------------------------------------------


def _exact_log(value: int, base: int) -> int:
    t = 0
    v = 1
    while v < value:
        v *= base
        t += 1
    if v != value:
        raise NonIntegralLength(f"{value} is not a power of {base}")
    return t


def semisimple_multiplicities(module: FiniteModule, profile) -> tuple[int, ...]:
    """Multiplicity vector of a semisimple module against a top profile.

    The k-th homogeneous component is the submodule generated by the
    image of the k-th basic idempotent; its size must be an exact power
    |m_k|^(mu_k * n_k).  Raises NotSemisimple if the radical does not
    kill the module, NonIntegralLength if a size is not such a power.
    """
    rad = profile.radical.indices
    if rad.size and not (module.act_table[:, rad] == 0).all():
        raise NotSemisimple("module is not killed by the radical")
    out = []
    total = 1
    for k in range(profile.n):
        e = profile.basic[k]
        seed = np.unique(module.act_table[:, e])
        comp = module.submodule_closure(seed)
        csize = int(comp.size)
        f = profile.field_sizes[k]
        t = _exact_log(csize, f)
        if t % profile.mu[k]:
            raise NonIntegralLength(
                f"component {k} has size {f}^{t}, not a multiple of mu={profile.mu[k]}")
        out.append(t // profile.mu[k])
        total *= csize
    if total != module.size:
        raise InternalInconsistency(
            f"homogeneous components multiply to {total}, module has {module.size}")
    return tuple(out)


# -- brute-force ring isomorphism (small orders only) ------------------------


def _subring_closure(ring: FiniteRing, seed: set[int]) -> set[int]:
    cur = set(seed) | {ring.zero, ring.one}
    while True:
        new = set()
        lst = list(cur)
        for a in lst:
            for b in lst:
                new.add(ring.add(a, b))
                new.add(ring.mul(a, b))
        new |= cur
        if len(new) == len(cur):
            return cur
        cur = new


def _hom_extends(r1: FiniteRing, r2: FiniteRing, seed_map: dict[int, int]):
    """Grow a partial map by add/mul consistency; None on conflict."""
    m = dict(seed_map)
    frontier = list(m.items())
    while frontier:
        known = list(m.items())
        next_frontier = []
        for a, fa in frontier:
            for b, fb in known:
                for x, fx in ((r1.add(a, b), r2.add(fa, fb)),
                              (r1.mul(a, b), r2.mul(fa, fb)),
                              (r1.mul(b, a), r2.mul(fb, fa))):
                    prev = m.get(x)
                    if prev is None:
                        m[x] = fx
                        next_frontier.append((x, fx))
                    elif prev != fx:
                        return None
        frontier = next_frontier
    return m


def table_isomorphic(r1: FiniteRing, r2: FiniteRing,
                     bounds: Bounds = DEFAULT) -> bool:
    """Decide ring isomorphism by exhaustive generator-image search.

    Gated to small orders (``bounds.iso_search``); used by tests and the
    catalog to confirm that different constructions coincide.
    """
    if r1.size != r2.size:
        return False
    if r1.size > bounds.iso_search:
        raise TooLarge(f"isomorphism search gated to {bounds.iso_search}")
    gens: list[int] = []
    reach = _subring_closure(r1, set())
    while len(reach) < r1.size:
        g = min(set(range(r1.size)) - reach)
        gens.append(g)
        reach = _subring_closure(r1, set(gens))
    if not gens:
        candidates = [()]
    else:
        candidates = itertools.product(range(r2.size), repeat=len(gens))
    for images in candidates:
        seed = {r1.zero: r2.zero, r1.one: r2.one}
        seed.update(dict(zip(gens, images)))
        m = _hom_extends(r1, r2, seed)
        if m is not None and len(m) == r1.size and len(set(m.values())) == r1.size:
            return True
    return False
