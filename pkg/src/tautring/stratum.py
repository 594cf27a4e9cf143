"""Classes on a boundary stratum M_{h hbar} and their pushforward into T.

A stratum expression is a polynomial in the T variables plus ``psi``, the
psi class of the canonical side h of the partition.  T variables inside a
stratum expression stand for their restriction to the stratum (D_P is the
normal bundle class -psi_h - psi_hbar, D_Q for Q != P the induced boundary,
F_Q the induced boundary psi class).  Pushforward is then the projection
formula: m -> D_P * m and psi * m -> F_h * m.

The quadratic psi relation on the stratum is derived here from the
relation for psi^2 on M_{0,1}(P^n, e) applied to both factors of
M_{0,1}(P^n, |h|) x_{P^n} M_{0,1}(P^n, |hbar|).
"""
from __future__ import annotations

from fractions import Fraction

from .coefficients import CoeffContext, b_poly, c_poly, kh_H2_poly, n_pair, n_psi
from .partitions import Partition, is_crossing, proper_subsets
from .poly import Poly


class StratumAlgebra:
    def __init__(self, ctx: CoeffContext, P: Partition, formulas: str = "derived"):
        if formulas not in ("derived", "printed"):
            raise ValueError(f"unknown formula set {formulas!r}")
        self.ctx = ctx
        self.P = P
        self.formulas = formulas
        self.h, self.hb = P.side, P.other
        self.DP = ctx.D(P)
        self.Fh = ctx.F(self.h)
        self.psi = ctx.psi
        ring = ctx.ring
        self._crossing = set()
        for Q in ctx.partitions:
            if is_crossing(P, Q):
                self._crossing.add(ring.index("D" + _nm(ctx, Q)))
                self._crossing.add(ring.index("F" + _nm(ctx, Q)))
        self.b, self.c = self._psi_relation()

    # -- basic classes ---------------------------------------------------
    def psi_side(self, side) -> Poly:
        if tuple(sorted(side)) == self.h:
            return self.psi
        return -self.DP - self.psi

    def kh_H2(self, side) -> Poly:
        """k_s(H^2) on the stratum, linear in psi."""
        if self.formulas == "printed":
            return kh_H2_poly(self.ctx, self.P, side)
        ctx, d = self.ctx, self.ctx.d
        s = tuple(sorted(side))
        sb = self.P.opposite(s)
        e, eb = len(s), len(sb)
        out = ctx.k2 * Fraction(e, d) + self.psi_side(s) * (e * eb) + self.DP * Fraction(e * eb * eb, d)
        for g in proper_subsets(sb):
            out = out + ctx.D(g) * Fraction(e * len(g) ** 2, d)
        for g in proper_subsets(s):
            out = out - ctx.D(g) * Fraction(eb * len(g) ** 2, d)
        return out

    def node_H(self, side) -> Poly:
        """ev^*H at the node, computed from the factor of the given side."""
        ctx = self.ctx
        s = tuple(sorted(side))
        e = len(s)
        out = self.psi_side(s) * (-e) + self.kh_H2(s) * Fraction(1, e)
        for g in proper_subsets(s):
            out = out + ctx.D(g) * Fraction(len(g) ** 2, e)
        return out * Fraction(1, 2)

    def kh_H3(self, side) -> Poly:
        """k_s(H^3) from the psi^2 relation on the factor M_{0,1}(P^n, |s|)."""
        ctx = self.ctx
        s = tuple(sorted(side))
        e = len(s)
        ps = self.psi_side(s)
        subs = proper_subsets(s)
        inner = ps * ps
        for g in subs:
            inner = inner - ps * ctx.D(g) * n_psi(len(g), e)
        for g in subs:
            for g2 in subs:
                try:
                    c = n_pair(g, g2, e)
                except ValueError:
                    continue
                inner = inner + ctx.D(g) * ctx.D(g2) * c
        k = self.kh_H2(s)
        inner = inner + k * k * Fraction(3, e**4)
        return inner * Fraction(e**3, 4)

    def _psi_relation(self) -> tuple[Poly, Poly]:
        ctx = self.ctx
        if self.formulas == "printed":
            return b_poly(ctx, self.P, self.h), c_poly(ctx, self.P, self.h)
        rel = self.kh_H3(self.h) + self.kh_H3(self.hb) - ctx.k3
        pi = ctx.psi_index
        lead = rel.coefficient(((pi, 2),))
        rel = rel * (1 / lead)
        b, c = Poly(), Poly()
        for m, coef in rel.terms.items():
            e = dict(m).get(pi, 0)
            rest = tuple((i, x) for i, x in m if i != pi)
            if e == 2:
                if rest:
                    raise AssertionError("psi^2 with a nonconstant coefficient")
            elif e == 1:
                b.terms[rest] = coef
            elif e == 0:
                c.terms[m] = coef
            else:  # pragma: no cover
                raise AssertionError("cubic psi term")
        return b, c

    # -- calculus --------------------------------------------------------
    def restrict(self, p: Poly) -> Poly:
        """Restriction of a T polynomial: classes of crossing strata vanish."""
        if not self._crossing:
            return p
        return Poly({m: c for m, c in p.terms.items() if not any(i in self._crossing for i, _ in m)})

    def reduce(self, e: Poly) -> Poly:
        """Rewrite psi^k (k >= 2) via psi^2 = -b psi - c and drop crossing classes."""
        pi = self.ctx.psi_index
        e = self.restrict(e)
        rule = -(self.b * self.psi) - self.c
        out = Poly()
        work = e
        while work:
            nxt = Poly()
            for m, coef in work.terms.items():
                x = dict(m).get(pi, 0)
                if x < 2:
                    out = out + Poly({m: coef})
                    continue
                rest = tuple((i, y) if i != pi else (i, y - 2) for i, y in m)
                rest = tuple((i, y) for i, y in rest if y)
                nxt = nxt + Poly({rest: coef}) * rule
            work = self.restrict(nxt)
        return out

    def is_reduced(self, e: Poly) -> bool:
        pi = self.ctx.psi_index
        return all(dict(m).get(pi, 0) < 2 for m in e.terms)

    def pushforward(self, e: Poly) -> Poly:
        if not self.is_reduced(e):
            raise ValueError("pushforward needs a reduced stratum expression")
        pi = self.ctx.psi_index
        zero, one = Poly(), Poly()
        for m, c in e.terms.items():
            x = dict(m).get(pi, 0)
            rest = tuple((i, y) for i, y in m if i != pi)
            (one if x else zero).terms[rest] = c
        return self.DP * zero + self.Fh * one

    def push(self, e: Poly) -> Poly:
        return self.pushforward(self.reduce(e))

    def relation_quadric(self) -> Poly:
        """psi^2 + b psi + c as a stratum expression."""
        return self.psi * self.psi + self.b * self.psi + self.c


def _nm(ctx: CoeffContext, Q: Partition) -> str:
    from .coefficients import side_name

    return side_name(Q.side, ctx.d)
