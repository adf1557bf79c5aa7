"""Full classification of a single ring, with stable serialization.

classify() runs the whole pipeline — radical, decomposition, socles,
Nakayama analysis, cardinality predicates — and folds the outcome into
a ClassificationReport.  The JSON form has a fixed key order and no
environment-dependent content outside the timings block, so two runs
over the same spec produce byte-identical digest sections.
"""

import json
import time
from dataclasses import dataclass, field

from .bounds import Bounds, DEFAULT
from .core import FiniteRing, InternalInconsistency, TooLarge
from .structure import TopProfile, top_profile
from .socle import (socles, nakayama_permutation, is_qf2, is_kasch,
                    is_min_annihilator, NakayamaResult)
from .cardinality import (is_frobenius, is_qf, is_d_ring, socle_principal,
                          respects_multiplicities, honold_suite)


@dataclass
class ClassificationReport:
    """Everything the pipeline decides about one ring."""

    name: str
    size: int
    m: int                                  # primitive idempotents
    n: int                                  # classes of simples
    mu: tuple[int, ...]
    field_sizes: tuple[int, ...]
    socle_right: int
    socle_left: int
    coincide: bool
    kasch_r: bool
    kasch_l: bool
    qf2_r: bool
    qf2_l: bool
    minann_r: bool
    minann_l: bool
    d_ring: bool | None                     # None = skipped by bound
    qf: bool
    frobenius: bool
    pf: bool                                # recorded equal to qf
    socle_principal: bool
    nakayama_exists: bool
    perm: tuple[int, ...] | None
    respects: bool | None
    nakayama_reason: str | None
    size_condition: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "size": self.size,
            "m": self.m,
            "n": self.n,
            "mu": list(self.mu),
            "field_sizes": list(self.field_sizes),
            "socle": {
                "right_size": self.socle_right,
                "left_size": self.socle_left,
                "coincide": self.coincide,
            },
            "predicates": {
                "kasch_r": self.kasch_r,
                "kasch_l": self.kasch_l,
                "qf2_r": self.qf2_r,
                "qf2_l": self.qf2_l,
                "minann_r": self.minann_r,
                "minann_l": self.minann_l,
                "d_ring": self.d_ring,
                "qf": self.qf,
                "frobenius": self.frobenius,
                "pf": self.pf,
                "socle_principal": self.socle_principal,
            },
            "nakayama": {
                "exists": self.nakayama_exists,
                "perm": list(self.perm) if self.perm is not None else None,
                "respects_multiplicities": self.respects,
            },
            "size_condition": dict(self.size_condition),
            "timings": dict(self.timings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self) -> str:
        mu = ", ".join(str(v) for v in self.mu)
        fields = ", ".join(str(v) for v in self.field_sizes)
        if self.nakayama_exists:
            nak = (f"perm = ({', '.join(str(p) for p in self.perm)}), "
                   f"respects multiplicities = {_yn(self.respects)}")
        else:
            nak = f"none ({self.nakayama_reason})"
        d_ring = "skipped" if self.d_ring is None else _yn(self.d_ring)
        sc = self.size_condition
        lines = [
            f"ring            {self.name}",
            f"size            {self.size}",
            f"idempotents     m = {self.m}, classes n = {self.n}",
            f"multiplicities  ({mu})",
            f"residue fields  ({fields})",
            f"socles          |S_r| = {self.socle_right}, "
            f"|S_l| = {self.socle_left}, coincide = {_yn(self.coincide)}",
            f"kasch           right = {_yn(self.kasch_r)}, "
            f"left = {_yn(self.kasch_l)}",
            f"qf-2            right = {_yn(self.qf2_r)}, "
            f"left = {_yn(self.qf2_l)}",
            f"minannihilator  right = {_yn(self.minann_r)}, "
            f"left = {_yn(self.minann_l)}",
            f"nakayama        {nak}",
            f"d-ring          {d_ring}",
            f"qf              {_yn(self.qf)}",
            f"frobenius       {_yn(self.frobenius)}",
            f"pf              {_yn(self.pf)} (equal to qf for finite rings)",
            f"socle principal {_yn(self.socle_principal)}",
            f"size condition  radical = {_yn(sc.get('radical'))}, "
            f"components = {_yn(sc.get('components'))}, "
            f"maximal = {_tri(sc.get('maximal'))}, "
            f"all right ideals = {_tri(sc.get('all_right_ideals'))}",
            f"total time      {self.timings.get('total', 0.0):.3f}s",
        ]
        return "\n".join(lines) + "\n"


def _yn(v) -> str:
    return {True: "yes", False: "no"}.get(v, "?")


def _tri(v) -> str:
    return "skipped" if v is None else _yn(v)


def classify(ring: FiniteRing, *, name: str | None = None,
             bounds: Bounds = DEFAULT) -> ClassificationReport:
    """Run the full pipeline over one ring.

    Raises InternalInconsistency if the recorded implication chain
    frobenius => qf => nakayama-exists is violated by the computed
    predicates (each is derived independently).
    """
    t0 = time.perf_counter()
    timings: dict[str, float] = {}

    prof = top_profile(ring, bounds)
    timings["structure"] = time.perf_counter() - t0

    t1 = time.perf_counter()
    s_r, s_l = socles(ring, bounds)
    nak = nakayama_permutation(ring, bounds)
    timings["socle"] = time.perf_counter() - t1

    t2 = time.perf_counter()
    kasch_r = is_kasch(ring, "right", bounds)
    kasch_l = is_kasch(ring, "left", bounds)
    qf2_r = is_qf2(ring, "right", bounds)
    qf2_l = is_qf2(ring, "left", bounds)
    minann_r, _ = is_min_annihilator(ring, "right", bounds)
    minann_l, _ = is_min_annihilator(ring, "left", bounds)
    try:
        d_ring, _ = is_d_ring(ring, bounds)
    except TooLarge:
        d_ring = None
    qf = is_qf(ring, bounds)
    frob = is_frobenius(ring, prof, (s_r, s_l), bounds=bounds)
    principal = socle_principal(ring, s_r, bounds)
    hon = honold_suite(ring, prof, bounds)
    timings["predicates"] = time.perf_counter() - t2

    c3 = hon["criterion3"]["holds"]
    c4max = hon["criterion4"]["maximal"]
    size_condition = {
        "radical": bool(hon["criterion4"]["radical"]),
        "components": bool(hon["criterion4"]["components"]),
        "maximal": None if c4max is None else bool(c4max),
        "all_right_ideals": None if c3 is None else bool(c3),
        "agree": bool(hon["agree"]),
    }
    respects = (respects_multiplicities(nak, prof) if nak.exists else None)

    if frob and not qf:
        raise InternalInconsistency("frobenius ring failed the qf test")
    if qf and not nak.exists:
        raise InternalInconsistency("qf ring lacks a Nakayama permutation")

    timings["total"] = time.perf_counter() - t0
    return ClassificationReport(
        name=name if name is not None else (ring.name or "ring"),
        size=ring.size, m=len(prof.prims), n=prof.n,
        mu=tuple(int(v) for v in prof.mu),
        field_sizes=tuple(int(v) for v in prof.field_sizes),
        socle_right=s_r.size, socle_left=s_l.size, coincide=bool(s_r == s_l),
        kasch_r=bool(kasch_r), kasch_l=bool(kasch_l),
        qf2_r=bool(qf2_r), qf2_l=bool(qf2_l),
        minann_r=bool(minann_r), minann_l=bool(minann_l),
        d_ring=None if d_ring is None else bool(d_ring),
        qf=bool(qf), frobenius=bool(frob), pf=bool(qf),
        socle_principal=bool(principal),
        nakayama_exists=bool(nak.exists),
        perm=None if nak.perm is None else tuple(int(p) for p in nak.perm),
        respects=None if respects is None else bool(respects),
        nakayama_reason=nak.reason,
        size_condition=size_condition, timings=timings,
    )
