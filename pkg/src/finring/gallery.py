"""Named example rings with frozen expected classifications.

Every entry is a spec text in the ring DSL plus the values its report
is locked to; the test suite rebuilds each ring and compares, so any
drift in the pipeline shows up as a gallery regression.  EXPECTED holds
freshly computed values (sizes, permutations, annihilator products),
not aspirations.
"""

from .bounds import Bounds, DEFAULT
from .core import FiniteRing
from .dsl import parse_spec, resolve
from .matrix import build_formal_matrix


GALLERY: dict[str, str] = {
    # two local corners glued by square-zero bimodules; the smallest
    # basic ring whose Nakayama permutation is a transposition
    "wood-basic": """\
ring wood-basic {
  base s = GF(2)
  bimodule e = zero_product(s)
  matrix = [[s, e], [e, s]]
}
""",
    # the same shell expanded with multiplicities (2, 1): still QF, but
    # the transposition no longer respects multiplicities, so the
    # Frobenius property is lost
    "wood": """\
ring wood {
  base s = GF(2)
  bimodule e = zero_product(s)
  matrix = [[s, e], [e, s]]
  expand = [2, 1]
}
""",
    # three corners in a directed cycle; basic Frobenius with a 3-cycle
    "b3": """\
ring b3 {
  base s = GF(2)
  bimodule e = zero_product(s)
  matrix = [[s, e, 0], [0, s, e], [e, 0, s]]
}
""",
    # b3 expanded by (1, 1, 2): QF with unequal multiplicities along
    # the cycle, so the annihilator products split three ways
    "r4": """\
ring r4 {
  base s = GF(2)
  bimodule e = zero_product(s)
  matrix = [[s, e, 0], [0, s, e], [e, 0, s]]
  expand = [1, 1, 2]
}
""",
    # upper triangular 2x2 over GF(2): fails Kasch on the right
    "t2": """\
ring t2 {
  base s = GF(2)
  bimodule e = zero_product(s)
  matrix = [[s, e], [0, s]]
}
""",
    "z4": """\
ring z4 {
  base s = Z/2^2
  matrix = [[s]]
}
""",
    "m2f2": """\
ring m2f2 {
  base s = GF(2)
  matrix = [[s]]
  expand = [2]
}
""",
    "gf2x2": """\
ring gf2x2 {
  base s = GF(2)[x]/(x^2)
  matrix = [[s]]
}
""",
}


EXPECTED: dict[str, dict] = {
    "wood-basic": {
        "size": 16, "m": 2, "n": 2, "mu": (1, 1), "field_sizes": (2, 2),
        "socle_right": 4, "socle_left": 4, "coincide": True,
        "perm": (1, 0), "qf": True, "frobenius": True,
        "socle_principal": True, "products": (16, 16),
    },
    "wood": {
        "size": 512, "m": 3, "n": 2, "mu": (2, 1), "field_sizes": (2, 2),
        "socle_right": 16, "socle_left": 16, "coincide": True,
        "perm": (1, 0), "qf": True, "frobenius": False,
        "socle_principal": False, "products": (256, 256, 1024),
    },
    "b3": {
        "size": 64, "m": 3, "n": 3, "mu": (1, 1, 1), "field_sizes": (2, 2, 2),
        "socle_right": 8, "socle_left": 8, "coincide": True,
        "perm": (1, 2, 0), "qf": True, "frobenius": True,
        "socle_principal": True, "products": (64, 64, 64),
    },
    "r4": {
        "size": 2048, "m": 4, "n": 3, "mu": (1, 1, 2),
        "field_sizes": (2, 2, 2),
        "socle_right": 32, "socle_left": 32, "coincide": True,
        "perm": (1, 2, 0), "qf": True, "frobenius": False,
        "socle_principal": False, "products": (1024, 1024, 2048, 4096),
    },
    "t2": {
        "size": 8, "m": 2, "n": 2, "mu": (1, 1), "field_sizes": (2, 2),
        "socle_right": 4, "socle_left": 4, "coincide": False,
        "perm": None, "reason": "NotKaschRight", "qf": False,
        "frobenius": False, "socle_principal": False,
    },
    "z4": {
        "size": 4, "m": 1, "n": 1, "mu": (1,), "field_sizes": (2,),
        "socle_right": 2, "socle_left": 2, "coincide": True,
        "perm": (0,), "qf": True, "frobenius": True,
        "socle_principal": True, "products": (4,),
    },
    "m2f2": {
        "size": 16, "m": 2, "n": 1, "mu": (2,), "field_sizes": (2,),
        "socle_right": 16, "socle_left": 16, "coincide": True,
        "perm": (0,), "qf": True, "frobenius": True,
        "socle_principal": True, "products": (16, 16),
    },
    "gf2x2": {
        "size": 4, "m": 1, "n": 1, "mu": (1,), "field_sizes": (2,),
        "socle_right": 2, "socle_left": 2, "coincide": True,
        "perm": (0,), "qf": True, "frobenius": True,
        "socle_principal": True, "products": (4,),
    },
}


def gallery_names() -> tuple[str, ...]:
    return tuple(GALLERY)


def gallery_text(name: str) -> str:
    if name not in GALLERY:
        raise KeyError(f"no gallery ring named {name!r}; "
                       f"available: {', '.join(GALLERY)}")
    return GALLERY[name]


def build_gallery_ring(name: str, bounds: Bounds = DEFAULT) -> FiniteRing:
    spec = resolve(parse_spec(gallery_text(name)))
    return build_formal_matrix(spec, bounds)
