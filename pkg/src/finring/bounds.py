"""Size cutoffs for the exhaustive parts of the toolkit.

Every brute-force search (axiom validation, lattice enumeration, ideal
sweeps, injectivity oracles) is gated by one of these defaults.  The CLI
exposes flags that override them per run.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    axiom_exhaustive: int = 256      # full N^3 axiom validation up to this order
    axiom_samples: int = 100_000     # random triples sampled above that order
    lattice: int = 256               # submodule-lattice enumeration cap (|M|)
    dring: int = 256                 # full one-sided ideal enumeration cap (|R|)
    baer: int = 16                   # injectivity-via-ideal-homomorphisms cap (|R|)
    iso_search: int = 16             # brute-force ring isomorphism search cap
    max_order: int = 4096            # largest ring the builders will materialise
    base_size: int = 9               # largest local base ring admitted by the catalog
    witness_pairs: int = 65_536      # idempotent-isomorphism witness search cap


DEFAULT = Bounds()
