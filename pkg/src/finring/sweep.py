"""Deterministic corpus of trivial formal matrix rings.

Sweeps grids of height n <= 3 over a small catalog of local bases
(sizes <= 4), every 0/1 pattern of square-zero off-diagonal cells, and
every expansion vector with total multiplicity <= 4, keeping rings of
order <= max_order.  A cell can only connect corners over the same
base (the catalog has no mixed-characteristic bimodules), and specs
that differ by a simultaneous relabelling of the corner indices are
deduplicated before anything is built.

Entries carry DSL text rather than prebuilt rings, so the corpus also
exercises the parser end to end; build_entry() materializes one ring.
"""

import hashlib
import itertools
from dataclasses import dataclass

from .bounds import Bounds, DEFAULT
from .core import FiniteRing
from .dsl import parse_spec, resolve
from .matrix import build_formal_matrix


# (code, size) per base; the code doubles as the DSL declaration name
CATALOG: tuple[tuple[str, str, int], ...] = (
    ("gf2", "GF(2)", 2),
    ("gf3", "GF(3)", 3),
    ("gf4", "GF(4)", 4),
    ("z4", "Z/2^2", 4),
    ("f2x", "GF(2)[x]/(x^2)", 4),
)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    text: str
    order: int

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.text.encode()).hexdigest()


def _mu_vectors(n: int, total: int = 4):
    for mu in itertools.product(range(1, total + 1), repeat=n):
        if sum(mu) <= total:
            yield mu


def _cell_sets(n: int):
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in itertools.product((0, 1), repeat=len(off)):
        yield frozenset(c for c, b in zip(off, bits) if b)


def _canonical_key(corners: tuple[int, ...], cells: frozenset,
                   mu: tuple[int, ...]) -> tuple:
    n = len(corners)
    best = None
    for perm in itertools.permutations(range(n)):
        key = (tuple(corners[perm[i]] for i in range(n)),
               tuple(sorted((perm.index(i), perm.index(j)) for i, j in cells)),
               tuple(mu[perm[i]] for i in range(n)))
        if best is None or key < best:
            best = key
    return best


def _entry_text(name: str, corners: tuple[int, ...], cells: frozenset,
                mu: tuple[int, ...]) -> str:
    n = len(corners)
    used_bases = sorted({corners[i] for i in range(n)})
    lines = [f"ring {name} {{"]
    for b in used_bases:
        code, decl, _ = CATALOG[b]
        lines.append(f"  base {code} = {decl}")
    bim_bases = sorted({corners[i] for i, j in cells})
    for b in bim_bases:
        code = CATALOG[b][0]
        lines.append(f"  bimodule e{code} = zero_product({code})")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(CATALOG[corners[i]][0])
            elif (i, j) in cells:
                row.append(f"e{CATALOG[corners[i]][0]}")
            else:
                row.append("0")
        rows.append("[" + ", ".join(row) + "]")
    lines.append(f"  matrix = [{', '.join(rows)}]")
    if any(m > 1 for m in mu):
        lines.append(f"  expand = [{', '.join(str(m) for m in mu)}]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def corpus_entries(max_order: int = 4096) -> list[CorpusEntry]:
    """The default corpus, in deterministic enumeration order."""
    out: list[CorpusEntry] = []
    seen: set[tuple] = set()
    for n in (1, 2, 3):
        for corners in itertools.product(range(len(CATALOG)), repeat=n):
            for cells in _cell_sets(n):
                if any(corners[i] != corners[j] for i, j in cells):
                    continue
                for mu in _mu_vectors(n):
                    order = 1
                    for i in range(n):
                        order *= CATALOG[corners[i]][2] ** (mu[i] * mu[i])
                    for i, j in cells:
                        order *= CATALOG[corners[i]][2] ** (mu[i] * mu[j])
                    if order > max_order:
                        continue
                    key = _canonical_key(corners, cells, mu)
                    if key in seen:
                        continue
                    seen.add(key)
                    bits = "".join(
                        "1" if (i, j) in cells else "0"
                        for i in range(n) for j in range(n) if i != j)
                    name = "c" + str(n) + "-" + "-".join(
                        CATALOG[c][0] for c in corners)
                    if bits:
                        name += "-p" + bits
                    if any(m > 1 for m in mu):
                        name += "-m" + "".join(str(m) for m in mu)
                    out.append(CorpusEntry(
                        name, _entry_text(name, corners, cells, mu), order))
    return out


def build_entry(entry: CorpusEntry, bounds: Bounds = DEFAULT) -> FiniteRing:
    return build_formal_matrix(resolve(parse_spec(entry.text)), bounds)
