"""The kappa vector V_l and its recursion l -> l+1.

V_l collects k(H^{l+1}), k(H^l) and, for each side s of each boundary
partition, the stratum classes k_s(H^l) and psi_s k_s(H^l).  One step is
the splitting formula for k(H^l . H) applied on the open part and on each
boundary stratum; k_0 terms are expanded through the psi pullback
comparison.  Since H^{n+1} = 0, every entry of V_{n+1} is a relation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coefficients import CoeffContext
from .partitions import Partition, complement, proper_subsets
from .poly import Poly
from .stratum import StratumAlgebra


class KappaContext:
    """Coefficient context plus one stratum algebra per partition."""

    def __init__(self, d: int, formulas: str = "derived", sign: str = "symmetric", own: int = 0):
        if sign not in ("symmetric", "printed"):
            raise ValueError(f"unknown sign variant {sign!r}")
        self.ctx = CoeffContext(d)
        self.d = d
        self.sign = sign
        # weight a of E*dH_s, with -a on |s|*dK_s, for subsets of the own side
        self.own = own
        self.strata = {P: StratumAlgebra(self.ctx, P, formulas) for P in self.ctx.partitions}

    def stratum_of(self, side) -> StratumAlgebra:
        return self.strata[self.ctx.partition_of(side)]

    def sides(self):
        for P in self.ctx.partitions:
            for s in P.sides:
                yield P, s


@dataclass
class VVector:
    level: int
    open_top: Poly
    open: Poly
    k: dict = field(default_factory=dict)  # side -> stratum expr for k_s(H^l)
    psik: dict = field(default_factory=dict)  # side -> psi_s k_s(H^l), reduced

    def pushed(self, kc: KappaContext) -> dict:
        return {s: kc.stratum_of(s).pushforward(e) for s, e in self.k.items()}

    def entries(self, kc: KappaContext) -> list[tuple[str, Poly]]:
        """All entries as T polynomials, labelled by slot."""
        out = [("V-top", self.open_top), ("V-open", self.open)]
        for P, s in kc.sides():
            S = kc.strata[P]
            nm = "".join(map(str, s))
            out.append((f"V-k[{nm}]", S.pushforward(self.k[s])))
            out.append((f"V-psik[{nm}]", S.pushforward(self.psik[s])))
        return out


def seed_v1(kc: KappaContext) -> VVector:
    ctx = kc.ctx
    v = VVector(1, ctx.k2, Poly.const(ctx.d))
    for P, s in kc.sides():
        S = kc.strata[P]
        v.k[s] = Poly.const(len(s))
        v.psik[s] = S.reduce(S.psi_side(s) * len(s))
    return v


def k0_H(kc: KappaContext) -> Poly:
    """k_0(H) as a T polynomial."""
    ctx, d = kc.ctx, kc.d
    out = ctx.k2 * Fraction(-1, d)
    for P in ctx.partitions:
        out = out + ctx.D(P) * Fraction(len(P.side) * len(P.other), d)
    return out


def k0_from(kc: KappaContext, top: Poly, open_: Poly, pushed: dict) -> Poly:
    """k_0(H^l) from k(H^{l+1}), k(H^l) and the pushed k_s(H^l)."""
    ctx, d = kc.ctx, kc.d
    out = top * Fraction(-2, d) + open_ * ctx.k2 * Fraction(1, d * d)
    for P, s in kc.sides():
        out = out + pushed[P.opposite(s)] * Fraction(len(s) ** 2, d * d)
    return out


def step(kc: KappaContext, v: VVector) -> VVector:
    ctx, d = kc.ctx, kc.d
    if set(v.k) != {s for _, s in kc.sides()}:
        raise ValueError("malformed V vector: side slots do not match the partitions")
    pushed = v.pushed(kc)
    kH = k0_H(kc)
    kHl = k0_from(kc, v.open_top, v.open, pushed)
    h2 = {s: kc.strata[P].kh_H2(s) for P, s in kc.sides()}
    pushed_h2 = {s: kc.strata[P].pushforward(h2[s]) for P, s in kc.sides()}
    kH2 = k0_from(kc, ctx.k3, ctx.k2, pushed_h2)

    corr = Poly()
    for P, s in kc.sides():
        S = kc.strata[P]
        corr = corr + S.push(v.k[s] * h2[P.opposite(s)])
    top = (v.open * kH2 + kHl * ctx.k2 - corr) * Fraction(-1, 2)
    out = VVector(v.level + 1, top, v.open_top)

    for P, s in kc.sides():
        S = kc.strata[P]
        sb = P.opposite(s)
        e, eb = len(s), len(sb)
        E, Eb = v.k[s], v.k[sb]
        dH, dK = Poly(), Poly()
        for g in proper_subsets(sb):
            dH = dH + ctx.D(g) * len(g)
            dK = dK + pushed[g]
        oH, oK = Poly(), Poly()
        for g in proper_subsets(s):
            oH = oH + ctx.D(g) * len(g)
            oK = oK + pushed[g]
        inner = (
            E * S.restrict(kH)
            + S.restrict(kHl) * e
            + S.psi_side(sb) * (E * eb + Eb * e)
            - E * dH
            - dK * e
            + (E * oH - oK * e) * kc.own
        )
        acc = inner * Fraction(-1, 2)
        sgn = 1 if kc.sign == "symmetric" else -1
        for g in proper_subsets(s):
            gb = complement(g, d)
            rest = len(s) - len(g)
            term = (pushed[gb] - Eb * ctx.D(g)) * len(g) + pushed[g] * (sgn * rest)
            acc = acc + term * Fraction(1, 2)
        out.k[s] = S.reduce(acc)
    for P, s in kc.sides():
        S = kc.strata[P]
        out.psik[s] = S.reduce(S.psi_side(s) * out.k[s])
    return out


def v_vector(kc: KappaContext, level: int) -> VVector:
    v = seed_v1(kc)
    while v.level < level:
        v = step(kc, v)
    return v


def kappa_relations(n: int, kc: KappaContext) -> list[tuple[str, Poly]]:
    """Entries of V_{n+1}, all of which vanish on M_{0,0}(P^n, d)."""
    if n < 1:
        raise ValueError("n must be positive")
    return v_vector(kc, n + 1).entries(kc)
