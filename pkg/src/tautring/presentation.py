"""Generators and relations of T(M_{0,0}(P^n, d))."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .ideal import GradedIdeal, NotHomogeneous
from .kappa import KappaContext, kappa_relations
from .partitions import chain_range, is_crossing, oriented_pair
from .poly import Poly, Ring

REL5_MODES = ("derived", "as-printed", "none")
SUBSET_MODES = ("strict", "inclusive")


@dataclass(frozen=True)
class Flags:
    rel5: str = "derived"
    subsets: str = "strict"  # endpoints of the chain sum in relations (3) and (5)
    formulas: str = "derived"
    own: int = 0

    def __post_init__(self):
        if self.rel5 not in REL5_MODES:
            raise ValueError(f"rel5 must be one of {REL5_MODES}")
        if self.subsets not in SUBSET_MODES:
            raise ValueError(f"subsets must be one of {SUBSET_MODES}")

    def as_dict(self):
        return {"rel5": self.rel5, "subsets": self.subsets, "formulas": self.formulas, "own": self.own}


@dataclass
class Presentation:
    n: int
    d: int
    ring: Ring
    relations: list = field(default_factory=list)  # (label, Poly)
    flags: Flags = field(default_factory=Flags)
    kc: KappaContext | None = None

    @property
    def dim(self) -> int:
        return self.n * self.d + self.n + self.d - 3

    @property
    def vars(self):
        return self.ring.vars

    def polys(self) -> list[Poly]:
        return [p for _, p in self.relations]

    def ideal(self) -> GradedIdeal:
        return GradedIdeal(self.ring, self.polys())

    def to_json(self) -> str:
        data = {
            "n": self.n,
            "d": self.d,
            "dim": self.dim,
            "vars": [{"name": v.name, "kind": v.kind, "degree": v.degree} for v in self.ring.vars],
            "relations": [{"label": lab, "poly": self.ring.serialize(p)} for lab, p in self.relations],
            "flags": self.flags.as_dict(),
        }
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        data = json.loads(text)
        flags = Flags(**data["flags"])
        kc = KappaContext(data["d"], flags.formulas, own=flags.own)
        pres = cls(data["n"], data["d"], kc.ctx.ring, flags=flags, kc=kc)
        names = [v.name for v in kc.ctx.ring.vars]
        if names != [v["name"] for v in data["vars"]]:
            raise ValueError("variable table does not match (n, d)")
        for r in data["relations"]:
            pres.relations.append((r["label"], kc.ctx.ring.deserialize(r["poly"])))
        return pres


def _nm(side) -> str:
    return "".join(map(str, side))


def lemma_relations(kc: KappaContext, flags: Flags) -> list[tuple[str, Poly]]:
    ctx = kc.ctx
    parts = ctx.partitions
    inclusive = flags.subsets == "inclusive"
    out = []
    for i, P in enumerate(parts):
        for Q in parts[i + 1 :]:
            if is_crossing(P, Q):
                tag = f"{P}~{Q}"
                FP, FQ = ctx.F(P.side), ctx.F(Q.side)
                DP, DQ = ctx.D(P), ctx.D(Q)
                out.append((f"DD:{tag}", DP * DQ))
                out.append((f"DF:{tag}", FP * DQ))
                out.append((f"DF:{tag}'", DP * FQ))
                out.append((f"DF:{tag}''", FP * FQ))
    for P in parts:
        S = kc.strata[P]
        DP, Fh = ctx.D(P), ctx.F(P.side)
        out.append((f"psi2:{P}", Fh * Fh + S.b * Fh * DP + S.c * DP * DP))
    for i, P in enumerate(parts):
        for Q in parts:
            if Q == P or is_crossing(P, Q):
                continue
            h, hp = oriented_pair(P, Q)
            DP, DQ = ctx.D(P), ctx.D(Q)
            chain = Poly()
            for R in chain_range(P, Q, inclusive):
                chain = chain + ctx.D(R)
            if P < Q:
                r3 = ctx.F(h) * DQ + ctx.F(hp) * DP - DP * DQ * chain
                out.append((f"chain:{_nm(h)},{_nm(hp)}", r3))
            if flags.rel5 == "none":
                continue
            if flags.rel5 == "as-printed":
                # F_h F_h' = (b_h D_P + chain) D_Q F_h + c_h D_P^2
                S = kc.strata[P]
                b, c = _bc_for_side(kc, P, h)
                r5 = ctx.F(h) * ctx.F(hp) - (b * DP + chain) * DQ * ctx.F(h) - c * DP * DP
                if ctx.ring.is_homogeneous(r5) is None:
                    raise NotHomogeneous(f"FF:{_nm(h)},{_nm(hp)} is not homogeneous")
            else:
                # F_h F_h' = push_P(psi_h * F_h'|_P), with F_h'|_P = -psi_h D_Q + D_Q chain from (3)
                S = kc.strata[P]
                ph = S.psi_side(h)
                r5 = ctx.F(h) * ctx.F(hp) - S.push(ph * (-(ph * DQ) + DQ * chain))
            out.append((f"FF:{_nm(h)},{_nm(hp)}", r5))
    return out


def _bc_for_side(kc: KappaContext, P, h):
    """b, c of the quadric satisfied by psi_h for either side h of P."""
    S = kc.strata[P]
    if tuple(h) == P.side:
        return S.b, S.c
    # psi_hbar = -D - psi: substitute into psi^2 + b psi + c
    DP = kc.ctx.D(P)
    return 2 * DP - S.b, DP * DP - S.b * DP + S.c


def build(n: int, d: int, flags: Flags | None = None, kc: KappaContext | None = None) -> Presentation:
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    flags = flags or Flags()
    if kc is None:
        kc = KappaContext(d, flags.formulas, own=flags.own)
    pres = Presentation(n, d, kc.ctx.ring, flags=flags, kc=kc)
    if d > 1:
        pres.relations.extend(lemma_relations(kc, flags))
    pres.relations.extend(kappa_relations(n, kc))
    pres.relations = [(lab, p) for lab, p in pres.relations if p]
    return pres


@dataclass
class ValidationReport:
    ok: bool
    problems: list = field(default_factory=list)
    rel5: str = ""


def validate(pres: Presentation, ideal: GradedIdeal | None = None, stability_degree: int | None = None) -> ValidationReport:
    from .symmetry import act_on_poly, transpositions

    ring = pres.ring
    rep = ValidationReport(True, rel5=pres.flags.rel5)
    for lab, p in pres.relations:
        if ring.is_homogeneous(p) is None:
            rep.problems.append(f"{lab}: not homogeneous")
    ideal = ideal or pres.ideal()
    if ideal.slice(0).quotient_dim != 1:
        rep.problems.append("degree 0: constant lies in the ideal")
    if pres.d > 1:
        ctx = pres.kc.ctx
        top = pres.dim + 2 if stability_degree is None else stability_degree
        for sigma in transpositions(pres.d):
            for lab, p in pres.relations:
                deg = ring.is_homogeneous(p)
                if deg is None or deg == "zero" or deg > top:
                    continue
                if not ideal.contains(act_on_poly(ctx, sigma, p)):
                    rep.problems.append(f"{lab}: image under {sigma} not in the ideal")
    rep.ok = not rep.problems
    return rep
