"""Formal matrix rings over finite local base rings.

A spec is an n x n grid: local corner rings on the diagonal, bimodules
off it.  Repeated diagonal classes are expressed with regular-copy
entries (block_expansion emits exactly those), and every product map is
derived from one rule: inside a class block multiply in the corner,
between a class block and a bimodule act on the bimodule, and all
remaining ("proper") products are zero unless an explicit table is
supplied.  The built ring is a dense-index FiniteRing whose element
codec is the mixed-radix product of the nonzero grid slots.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import DEFAULT, Bounds
from .core import (
    AssociativityViolation,
    FiniteRing,
    NotIdempotent,
    NotLocal,
    RingError,
    TooLarge,
    validate_ring_tables,
)


class SpecError(RingError):
    """A formal-matrix or base-ring spec that does not resolve."""


# -- local base ring specs ---------------------------------------------------


@dataclass(frozen=True)
class Zpk:
    p: int
    k: int

    @property
    def size(self) -> int:
        return self.p ** self.k

    @property
    def label(self) -> str:
        return f"Z/{self.p}^{self.k}"


@dataclass(frozen=True)
class GFq:
    q: int

    @property
    def size(self) -> int:
        return self.q

    @property
    def label(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class TruncatedPoly:
    q: int
    m: int

    @property
    def size(self) -> int:
        return self.q ** self.m

    @property
    def label(self) -> str:
        return f"GF({self.q})[x]/(x^{self.m})"


@dataclass(eq=False)
class TrivialExt:
    base: "BaseSpec"
    bimodule: "BimoduleSpec"

    @property
    def size(self) -> int:
        return self.base.size * _bimodule_size(self.bimodule, self.base)

    @property
    def label(self) -> str:
        return f"trivext({self.base.label},{_bimodule_label(self.bimodule)})"


BaseSpec = Zpk | GFq | TruncatedPoly | TrivialExt


# -- bimodule specs ----------------------------------------------------------


@dataclass(eq=False)
class BimRegular:
    """A regular copy of a corner; links its two indices into one class."""
    base: BaseSpec

    label = "regular"


@dataclass(eq=False)
class BimGroup:
    """An abelian group with explicit corner actions (zero proper products
    unless the enclosing spec supplies product tables)."""
    add_table: np.ndarray
    left_act: np.ndarray      # (|left corner| x size) -> size
    right_act: np.ndarray     # (size x |right corner|) -> size
    label: str = "group"

    @property
    def size(self) -> int:
        return int(self.add_table.shape[0])


BimoduleSpec = BimRegular | BimGroup  # None plays the zero bimodule


def _bimodule_size(b, base: BaseSpec) -> int:
    if b is None:
        return 1
    if isinstance(b, BimRegular):
        return b.base.size
    return b.size


def _bimodule_label(b) -> str:
    if b is None:
        return "0"
    return b.label


# -- base realisations -------------------------------------------------------

_base_cache: dict = {}


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            if q != 1:
                raise SpecError(f"{q * p ** e} is not a prime power")
            return p, e
    raise SpecError("q must be >= 2")


def _gf_tables(q: int):
    p, e = _factor_prime_power(q)
    if e == 1:
        i = np.arange(q)
        return (i[:, None] + i[None, :]) % q, (i[:, None] * i[None, :]) % q
    # find the lexicographically first monic degree-e polynomial with no
    # root in GF(p); for e <= 3 rootlessness is exactly irreducibility
    if e > 3:
        raise SpecError(f"GF({q}) exceeds the supported base catalog")
    import itertools
    for tail in itertools.product(range(p), repeat=e):
        f = list(tail)  # f = x^e + f[e-1] x^(e-1) + ... + f[0]
        if all(sum(c * pow(x, i, p) for i, c in enumerate(f)) % p != (-pow(x, e, p)) % p
               for x in range(p)):
            break
    else:
        raise SpecError(f"no irreducible polynomial found for GF({q})")
    # reduction table: x^d mod f for d < 2e-1
    red = [[0] * e for _ in range(2 * e - 1)]
    for d in range(e):
        red[d][d] = 1
    for d in range(e, 2 * e - 1):
        # x^d = x * x^(d-1), then replace x^e by -f[:e]
        prev = red[d - 1]
        shifted = [0] + prev[:-1]
        carry = prev[-1]
        red[d] = [(shifted[i] - carry * f[i]) % p for i in range(e)]

    def enc(coeffs):
        return sum(c * p ** i for i, c in enumerate(coeffs))

    def dec(idx):
        return [(idx // p ** i) % p for i in range(e)]

    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        ca = dec(a)
        for b in range(q):
            cb = dec(b)
            add[a, b] = enc([(x + y) % p for x, y in zip(ca, cb)])
            conv = [0] * (2 * e - 1)
            for i, x in enumerate(ca):
                for j, y in enumerate(cb):
                    conv[i + j] = (conv[i + j] + x * y) % p
            out = [0] * e
            for d, c in enumerate(conv):
                for i in range(e):
                    out[i] = (out[i] + c * red[d][i]) % p
            mul[a, b] = enc(out)
    return add, mul


def _check_local(ring: FiniteRing, label: str) -> FiniteRing:
    nu = np.nonzero(~ring.unit_mask)[0]
    mask = ~ring.unit_mask
    ok = (mask[ring.add_table[np.ix_(nu, nu)]].all()
          and mask[ring.mul_table[nu, :]].all()
          and mask[ring.mul_table[:, nu]].all())
    if not ok:
        raise NotLocal(f"{label}: non-units do not form an ideal")
    return ring


def make_local(spec: BaseSpec, bounds: Bounds = DEFAULT) -> FiniteRing:
    """Realise a local base spec as a validated FiniteRing (cached)."""
    key = spec if isinstance(spec, (Zpk, GFq, TruncatedPoly)) else id(spec)
    if key in _base_cache:
        return _base_cache[key]
    if isinstance(spec, Zpk):
        n = spec.size
        i = np.arange(n)
        add, mul = (i[:, None] + i[None, :]) % n, (i[:, None] * i[None, :]) % n
    elif isinstance(spec, GFq):
        add, mul = _gf_tables(spec.q)
    elif isinstance(spec, TruncatedPoly):
        f = make_local(GFq(spec.q), bounds)
        q, m = spec.q, spec.m
        n = q ** m
        add = np.zeros((n, n), dtype=np.int64)
        mul = np.zeros((n, n), dtype=np.int64)
        dec = lambda idx: [(idx // q ** i) % q for i in range(m)]
        enc = lambda cs: sum(c * q ** i for i, c in enumerate(cs))
        for a in range(n):
            ca = dec(a)
            for b in range(n):
                cb = dec(b)
                add[a, b] = enc([f.add(x, y) for x, y in zip(ca, cb)])
                out = [0] * m
                for i, x in enumerate(ca):
                    for j, y in enumerate(cb):
                        if i + j < m:
                            out[i + j] = f.add(out[i + j], f.mul(x, y))
                mul[a, b] = enc(out)
    elif isinstance(spec, TrivialExt):
        ring = trivial_extension(spec.base, spec.bimodule, bounds=bounds)
        _base_cache[key] = _check_local(ring, spec.label)
        return _base_cache[key]
    else:
        raise SpecError(f"unknown base spec {spec!r}")
    validate_ring_tables(add, mul, 0, 1, bounds)
    ring = FiniteRing(add, mul, zero=0, one=1, name=spec.label, provenance="base")
    _base_cache[key] = _check_local(ring, spec.label)
    return ring


# -- bimodule realisations ---------------------------------------------------


def zero_product_copy(base: BaseSpec) -> BimGroup:
    """The additive group of ``base`` with multiplication actions and no
    proper products — the standard square-zero bimodule."""
    r = make_local(base)
    return BimGroup(np.asarray(r.add_table), np.asarray(r.mul_table),
                    np.asarray(r.mul_table), label=f"zp({base.label})")


def free_bimodule_copy(base: BaseSpec, rank: int) -> BimGroup:
    """base^rank with componentwise actions on both sides."""
    r = make_local(base)
    n = r.size ** rank
    dec = lambda idx: [(idx // r.size ** i) % r.size for i in range(rank)]
    enc = lambda cs: sum(c * r.size ** i for i, c in enumerate(cs))
    add = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            add[a, b] = enc([r.add(x, y) for x, y in zip(dec(a), dec(b))])
    act = np.zeros((r.size, n), dtype=np.int64)
    for s in range(r.size):
        for b in range(n):
            act[s, b] = enc([r.mul(s, x) for x in dec(b)])
    # base is commutative in the catalog, so the right action mirrors it
    return BimGroup(add, act, act.T.copy(), label=f"{base.label}^{rank}")


def _validate_bimodule(gadd, left, right, lr: FiniteRing, rr: FiniteRing, where: str):
    n = gadd.shape[0]
    if left.shape != (lr.size, n) or right.shape != (n, rr.size):
        raise SpecError(f"{where}: action table shapes {left.shape}/{right.shape} "
                        f"do not match corners {lr.size}/{rr.size} and group {n}")
    b = np.arange(n)
    if not (left[lr.one] == b).all() or not (right[:, rr.one] == b).all():
        raise SpecError(f"{where}: corner identities do not act as identity")
    smul = np.asarray(lr.mul_table)
    tmul = np.asarray(rr.mul_table)
    # (st).b == s.(t.b)
    if not (left[smul.reshape(-1)].reshape(lr.size, lr.size, n) == left[:, left]).all():
        raise SpecError(f"{where}: left action is not associative")
    # b.(st) == (b.s).t
    if not (right[:, tmul.reshape(-1)].reshape(n, rr.size, rr.size) == right[right]).all():
        raise SpecError(f"{where}: right action is not associative")
    # s.(b.t) == (s.b).t
    if not (left[:, right] == right[left]).all():
        raise SpecError(f"{where}: left and right actions do not commute")
    # s.(b+c) == s.b + s.c
    if not (left[:, gadd] == gadd[left[:, :, None], left[:, None, :]]).all():
        raise SpecError(f"{where}: left action is not additive")
    # (b+c).t == b.t + c.t
    if not (right[gadd, :] == gadd[right[:, None, :], right[None, :, :]]).all():
        raise SpecError(f"{where}: right action is not additive")
    # (s+t).b == s.b + t.b
    la = left[np.asarray(lr.add_table).reshape(-1)].reshape(lr.size, lr.size, n)
    if not (la == gadd[left[:, None, :], left[None, :, :]]).all():
        raise SpecError(f"{where}: left action is not additive over the corner")
    # b.(s+t) == b.s + b.t
    ra = right[:, np.asarray(rr.add_table).reshape(-1)].reshape(n, rr.size, rr.size)
    if not (ra == gadd[right[:, :, None], right[:, None, :]]).all():
        raise SpecError(f"{where}: right action is not additive over the corner")


def _realize_bimodule(bspec, left_spec: BaseSpec, right_spec: BaseSpec, where: str):
    if isinstance(bspec, BimRegular):
        if left_spec != bspec.base or right_spec != bspec.base:
            raise SpecError(f"{where}: regular copy of {bspec.base.label} between "
                            f"corners {left_spec.label}/{right_spec.label}")
        r = make_local(bspec.base)
        return (np.asarray(r.add_table), np.asarray(r.mul_table),
                np.asarray(r.mul_table))
    lr, rr = make_local(left_spec), make_local(right_spec)
    gadd = np.asarray(bspec.add_table)
    left = np.asarray(bspec.left_act)
    right = np.asarray(bspec.right_act)
    _validate_bimodule(gadd, left, right, lr, rr, where)
    return gadd, left, right


# -- trivial extensions ------------------------------------------------------


def trivial_extension(base: BaseSpec, bimodule: BimoduleSpec | None = None,
                      *, bounds: Bounds = DEFAULT) -> FiniteRing:
    """The square-zero extension of a base by a bimodule.

    Elements are pairs (s, b); multiplication is
    (s, b)(s', b') = (ss', s.b' + b.s').  With the regular bimodule this
    reproduces the dual numbers over the base.
    """
    s_ring = make_local(base, bounds)
    bspec = bimodule if bimodule is not None else BimRegular(base)
    gadd, left, right = _realize_bimodule(bspec, base, base, "trivext")
    ns, nb = s_ring.size, gadd.shape[0]
    n = ns * nb
    if n > bounds.max_order:
        raise TooLarge(f"trivial extension of order {n} exceeds {bounds.max_order}")
    s = np.arange(n) // nb
    b = np.arange(n) % nb
    add = (np.asarray(s_ring.add_table)[s[:, None], s[None, :]] * nb
           + gadd[b[:, None], b[None, :]])
    mul = (np.asarray(s_ring.mul_table)[s[:, None], s[None, :]] * nb
           + gadd[left[s[:, None], b[None, :]], right[b[:, None], s[None, :]]])
    validate_ring_tables(add, mul, 0, int(s_ring.one) * nb, bounds)
    name = f"trivext({base.label},{_bimodule_label(bspec)})"
    return FiniteRing(add, mul, zero=0, one=int(s_ring.one) * nb,
                      name=name, provenance="trivial-extension")


# -- formal matrix specs -----------------------------------------------------


@dataclass(eq=False)
class FormalMatrixSpec:
    corners: tuple[BaseSpec, ...]
    bimodules: tuple[tuple[BimoduleSpec | None, ...], ...]
    products: dict[tuple[int, int, int], np.ndarray] | None = None
    expand: tuple[int, ...] | None = None
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.corners)

    def describe(self) -> str:
        rows = []
        for i in range(self.n):
            cells = []
            for j in range(self.n):
                cells.append(self.corners[i].label if i == j
                             else _bimodule_label(self.bimodules[i][j]))
            rows.append("[" + ",".join(cells) + "]")
        text = f"[{','.join(rows)}]"
        if self.expand:
            text += f"@{list(self.expand)}"
        return text


def block_expansion(spec: FormalMatrixSpec, mu: tuple[int, ...]) -> FormalMatrixSpec:
    """Rewrite a spec so class k appears mu[k] times.

    The expanded grid carries regular copies of each corner inside the
    repeated diagonal blocks and shares the parent bimodule objects
    across block rows/columns, so one build path serves both hand-written
    block specs and expansions.
    """
    if len(mu) != spec.n or any(m < 1 for m in mu):
        raise SpecError(f"multiplicity vector {mu} does not fit order {spec.n}")
    owner = [p for p, m in enumerate(mu) for _ in range(m)]
    m = len(owner)
    corners = tuple(spec.corners[owner[i]] for i in range(m))
    regulars = {p: BimRegular(spec.corners[p]) for p in range(spec.n) if mu[p] > 1}
    grid = []
    for i in range(m):
        row = []
        for j in range(m):
            a, b = owner[i], owner[j]
            if i == j:
                row.append(None)
            elif a == b:
                row.append(regulars[a])
            else:
                row.append(spec.bimodules[a][b])
        grid.append(tuple(row))
    products = None
    if spec.products:
        products = {}
        for (pi, pj, pk), table in spec.products.items():
            for i in range(m):
                for j in range(m):
                    for k in range(m):
                        if (owner[i], owner[j], owner[k]) == (pi, pj, pk):
                            products[(i, j, k)] = table
    name = f"{spec.name or 'spec'}@{list(mu)}"
    return FormalMatrixSpec(corners, tuple(grid), products, None, name)


# -- the builder -------------------------------------------------------------


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        self.p[self.find(a)] = self.find(b)


@dataclass(eq=False)
class FormalLayout:
    """Slot codec of a built formal matrix ring (used by tests and tools)."""
    spec: FormalMatrixSpec
    classes: tuple[int, ...]              # class id per grid index
    slots: tuple[tuple[int, int], ...]    # nonzero (i, j) grid positions
    sizes: tuple[int, ...]
    strides: tuple[int, ...]
    corner_rings: tuple[FiniteRing, ...]

    def slot(self, i: int, j: int) -> int:
        return self.slots.index((i, j))

    def encode(self, entries: dict[tuple[int, int], int]) -> int:
        idx = 0
        for (i, j), v in entries.items():
            s = self.slot(i, j)
            if not 0 <= v < self.sizes[s]:
                raise ValueError(f"value {v} out of range for slot {(i, j)}")
            idx += v * self.strides[s]
        return idx

    def decode(self, idx: int) -> dict[tuple[int, int], int]:
        out = {}
        for s, (i, j) in enumerate(self.slots):
            v = (idx // self.strides[s]) % self.sizes[s]
            if v:
                out[(i, j)] = v
        return out

    def unit_idempotent(self, i: int) -> int:
        """The diagonal matrix unit at position i."""
        return self.encode({(i, i): int(self.corner_rings[i].one)})


def _normalise_bimodule(b):
    if isinstance(b, BimGroup) and b.size == 1:
        return None
    return b


def build_formal_matrix(spec: FormalMatrixSpec, bounds: Bounds = DEFAULT) -> FiniteRing:
    """Materialise a formal matrix spec into a dense-index ring.

    Applies the expansion vector if present, validates the grid (class
    blocks, corner sizes, action tables, product tables), checks all
    proper-product associativity quadruples slot-by-slot, builds the
    add/mul index tables vectorised, and finally runs the generic axiom
    validation (exhaustive up to the configured bound, sampled above).
    """
    if spec.expand:
        spec = block_expansion(
            FormalMatrixSpec(spec.corners, spec.bimodules, spec.products,
                             None, spec.name), spec.expand)
    n = spec.n
    if n == 0:
        raise SpecError("empty spec")
    for c in spec.corners:
        if c.size > bounds.base_size:
            raise SpecError(f"corner {c.label} exceeds base size bound {bounds.base_size}")
    grid = [[_normalise_bimodule(spec.bimodules[i][j]) if i != j else None
             for j in range(n)] for i in range(n)]

    uf = _UnionFind(n)
    for i in range(n):
        for j in range(n):
            if i != j and isinstance(grid[i][j], BimRegular):
                if spec.corners[i] != grid[i][j].base or spec.corners[j] != grid[i][j].base:
                    raise SpecError(f"regular copy at {(i, j)} does not match its corners")
                uf.union(i, j)
    classes = tuple(uf.find(i) for i in range(n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            same = classes[i] == classes[j]
            if same and not isinstance(grid[i][j], BimRegular):
                raise SpecError(f"slot {(i, j)} must be a regular copy inside its class")
            if not same and isinstance(grid[i][j], BimRegular):
                raise SpecError(f"regular copy at {(i, j)} spans two classes")
    for i in range(n):
        for j in range(n):
            if classes[i] == classes[j] and i != j:
                for k in range(n):
                    if classes[k] != classes[i]:
                        if grid[i][k] is not grid[j][k] or grid[k][i] is not grid[k][j]:
                            raise SpecError(
                                f"rows {i},{j} share a class but differ at column {k}")

    corner_rings = tuple(make_local(c, bounds) for c in spec.corners)

    # realise slot groups
    slots: list[tuple[int, int]] = []
    gadds: list[np.ndarray] = []
    lacts: dict[int, np.ndarray] = {}
    racts: dict[int, np.ndarray] = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                slots.append((i, j))
                gadds.append(np.asarray(corner_rings[i].add_table))
            elif classes[i] == classes[j]:
                slots.append((i, j))
                gadds.append(np.asarray(corner_rings[i].add_table))
            elif grid[i][j] is not None:
                gadd, left, right = _realize_bimodule(
                    grid[i][j], spec.corners[i], spec.corners[j], f"slot {(i, j)}")
                slots.append((i, j))
                gadds.append(gadd)
                lacts[len(slots) - 1] = left
                racts[len(slots) - 1] = right
    sizes = [int(g.shape[0]) for g in gadds]
    total = 1
    for s in sizes:
        total *= s
    if total > bounds.max_order:
        raise TooLarge(f"spec of order {total} exceeds max_order={bounds.max_order}")

    slot_of = {ij: s for s, ij in enumerate(slots)}

    if spec.products:
        for (i, j, k) in spec.products:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise SpecError(f"product key ({i},{j},{k}) out of range")
            if classes[i] == classes[j] or classes[j] == classes[k]:
                raise SpecError(f"product ({i},{j},{k}) overrides a class-rule product")
            if (i, j) not in slot_of or (j, k) not in slot_of:
                raise SpecError(f"product ({i},{j},{k}) has a zero factor slot")
            if (i, k) not in slot_of:
                raise SpecError(f"product ({i},{j},{k}) targets a zero slot")

    _product_cache: dict = {}

    def slot_product(i: int, j: int, k: int):
        """Product table for slot (i,j) x slot (j,k) -> slot (i,k), or None."""
        key = (i, j, k)
        if key in _product_cache:
            return _product_cache[key]
        si, sj = slot_of.get((i, j)), slot_of.get((j, k))
        out = None
        if si is not None and sj is not None:
            ci, cj, ck = classes[i], classes[j], classes[k]
            if ci == cj == ck:
                out = np.asarray(corner_rings[i].mul_table)
            elif ci == cj:   # regular corner copy acting on the left
                out = lacts[sj]
            elif cj == ck:   # regular corner copy acting on the right
                out = racts[si]
            elif spec.products:
                table = spec.products.get(key)
                if table is not None:
                    sk = slot_of[(i, k)]
                    table = np.asarray(table)
                    if table.shape != (sizes[si], sizes[sj]):
                        raise SpecError(f"product ({i},{j},{k}) has shape {table.shape}")
                    _validate_biadditive(table, gadds[si], gadds[sj], gadds[sk], key)
                    out = table
        _product_cache[key] = out
        return out

    # slot-level associativity: phi(phi(a,b),c) == phi(a,phi(b,c)) for all
    # quadruples of grid indices, with missing maps read as zero
    for i in range(n):
        for j in range(n):
            if slot_of.get((i, j)) is None:
                continue
            for k in range(n):
                if slot_of.get((j, k)) is None:
                    continue
                for l in range(n):
                    if slot_of.get((k, l)) is None:
                        continue
                    _check_quad(i, j, k, l, slot_of, sizes, slot_product)

    strides = [1] * len(slots)
    for s in range(1, len(slots)):
        strides[s] = strides[s - 1] * sizes[s - 1]

    ar = np.arange(total, dtype=np.int64)
    coords = np.empty((total, len(slots)), dtype=np.int16)
    for s in range(len(slots)):
        coords[:, s] = (ar // strides[s]) % sizes[s]

    acc = np.zeros((total, total), dtype=np.int32)
    for s in range(len(slots)):
        acc += gadds[s][coords[:, s][:, None], coords[None, :, s]].astype(np.int32) * strides[s]
    add_table = acc.astype(np.int16 if total <= np.iinfo(np.int16).max else np.int32)

    acc = np.zeros((total, total), dtype=np.int32)
    for st, (i, k) in enumerate(slots):
        part = None
        for j in range(n):
            P = slot_product(i, j, k)
            if P is None:
                continue
            si, sj = slot_of[(i, j)], slot_of[(j, k)]
            term = P[coords[:, si][:, None], coords[None, :, sj]]
            part = term if part is None else gadds[st][part, term]
        if part is not None:
            acc += part.astype(np.int32) * strides[st]
    mul_table = acc.astype(add_table.dtype)

    one = 0
    for i in range(n):
        one += int(corner_rings[i].one) * strides[slot_of[(i, i)]]

    validate_ring_tables(add_table, mul_table, 0, one, bounds)
    ring = FiniteRing(add_table, mul_table, zero=0, one=one,
                      name=spec.name or spec.describe(), provenance="formal-matrix")
    ring.layout = FormalLayout(spec, classes, tuple(slots), tuple(sizes),
                               tuple(strides), corner_rings)
    return ring


def _validate_biadditive(table, gl, gr, gt, key):
    nl, nr = table.shape
    lhs = table[gl, :]                       # (a+a', b)
    rhs = gt[table[:, None, :], table[None, :, :]]
    if not (lhs == rhs).all():
        raise SpecError(f"product {key} is not additive in its left argument")
    lhs = table[:, gr]                       # (a, b+b')
    rhs = gt[table[:, :, None], table[:, None, :]]
    if not (lhs == rhs).all():
        raise SpecError(f"product {key} is not additive in its right argument")


def _check_quad(i, j, k, l, slot_of, sizes, slot_product):
    p_ijk = slot_product(i, j, k)
    p_ikl = slot_product(i, k, l) if slot_of.get((i, k)) is not None else None
    p_jkl = slot_product(j, k, l)
    p_ijl = slot_product(i, j, l) if slot_of.get((j, l)) is not None else None
    na, nb, nc = sizes[slot_of[(i, j)]], sizes[slot_of[(j, k)]], sizes[slot_of[(k, l)]]
    if p_ijk is not None and p_ikl is not None:
        lhs = p_ikl[p_ijk[:, :, None], np.arange(nc)[None, None, :]]
    else:
        lhs = np.zeros((na, nb, nc), dtype=np.int64)
    if p_jkl is not None and p_ijl is not None:
        rhs = p_ijl[np.arange(na)[:, None, None], p_jkl[None, :, :]]
    else:
        rhs = np.zeros((na, nb, nc), dtype=np.int64)
    if not (lhs == rhs).all():
        bad = np.nonzero(lhs != rhs)
        witness = (int(bad[0][0]), int(bad[1][0]), int(bad[2][0]))
        raise AssociativityViolation(witness, slots=(i, j, k, l))


# -- corners -----------------------------------------------------------------


def corner_ring(ring: FiniteRing, e: int, bounds: Bounds = DEFAULT) -> FiniteRing:
    """The corner e.R.e as a ring with unity e."""
    if not ring.is_idempotent(e):
        raise NotIdempotent(f"element {e} is not idempotent")
    if e == ring.one:
        return ring
    mt = ring.mul_table
    carrier = np.unique(mt[mt[e, :], e])
    pos = np.full(ring.size, -1, dtype=np.int64)
    pos[carrier] = np.arange(carrier.size)
    add = pos[ring.add_table[np.ix_(carrier, carrier)]]
    mul = pos[mt[np.ix_(carrier, carrier)]]
    if (add < 0).any() or (mul < 0).any():
        raise RingError("corner carrier is not closed")  # unreachable
    validate_ring_tables(add, mul, 0, int(pos[e]), bounds)
    out = FiniteRing(add, mul, zero=0, one=int(pos[e]),
                     name=f"{ring.name}.corner" if ring.name else "corner",
                     provenance="corner")
    out.corner_carrier = carrier
    return out


def basic_ring(ring: FiniteRing, bounds: Bounds = DEFAULT) -> FiniteRing:
    """Corner at the sum of one primitive idempotent per isomorphism class."""
    from .structure import primitive_decomposition
    dec = primitive_decomposition(ring, bounds)
    e = ring.zero
    for b in dec.basic:
        e = ring.add(e, b)
    return corner_ring(ring, e, bounds)
