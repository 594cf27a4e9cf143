"""Rational coefficients and divisor expansions for the boundary of M_{0,0}(P^n, d).

Everything here is written exactly as the closed forms are stated in the
literature, with total degree ``d``.  The formulas actually used by the
engine for stratum relations are derived in :mod:`tautring.stratum`;
the two are compared in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import Partition, enumerate_partitions, proper_subsets
from .poly import GradedVar, Poly, Ring


def side_name(side, d: int) -> str:
    if d < 10:
        return "".join(map(str, side))
    return "{" + ",".join(map(str, side)) + "}"


@dataclass
class CoeffContext:
    """Variable table of T(M_{0,0}(P^n, d)) plus an auxiliary psi for strata."""

    d: int
    partitions: list[Partition] = field(default_factory=list)
    ring: Ring = field(default_factory=Ring)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        if not self.partitions:
            self.partitions = enumerate_partitions(self.d)
        if not self.ring.vars:
            self.ring = Ring()
            self.ring.add(GradedVar("k2", "k2", 1))
            self.ring.add(GradedVar("k3", "k3", 2))
            for P in self.partitions:
                self.ring.add(GradedVar("D" + side_name(P.side, self.d), "D", 1, P))
            for P in self.partitions:
                self.ring.add(GradedVar("F" + side_name(P.side, self.d), "F", 2, P))
        # stratum ring: T variables followed by psi
        self.sring = Ring(list(self.ring.vars))
        self.psi_index = self.sring.add(GradedVar("psi", "psi", 1))
        self._by_side = {}
        for P in self.partitions:
            for s in P.sides:
                self._by_side[s] = P

    @property
    def k2(self) -> Poly:
        return self.ring.gen("k2")

    @property
    def k3(self) -> Poly:
        return self.ring.gen("k3")

    @property
    def psi(self) -> Poly:
        return Poly.var(self.psi_index)

    def partition_of(self, side) -> Partition:
        return self._by_side[tuple(sorted(side))]

    def D(self, P) -> Poly:
        if not isinstance(P, Partition):
            P = self.partition_of(P)
        return self.ring.gen("D" + side_name(P.side, self.d))

    def F(self, side) -> Poly:
        """F of an arbitrary side; the non-canonical one is -D^2 - F."""
        side = tuple(sorted(side))
        P = self.partition_of(side)
        f = self.ring.gen("F" + side_name(P.side, self.d))
        if side == P.side:
            return f
        return -(self.D(P) ** 2) - f


def n_psi(h_size: int, d: int) -> Fraction:
    if not 0 < h_size < d:
        raise ValueError("need 0 < |h| < d")
    x = Fraction(h_size, d)
    return x * x * (6 - 4 * x)


def n_pair(h, h_prime, d: int) -> Fraction:
    """N_{h h'}: nested or disjoint pairs only; symmetric."""
    a, b = set(h), set(h_prime)
    if a <= b or b <= a:
        small, big = (a, b) if len(a) <= len(b) else (b, a)
        s, t = Fraction(len(small), d), Fraction(len(big), d)
        return s * s * (6 * t - 2 * s - 3 * t * t)
    if not a & b:
        return Fraction(-3 * len(a) ** 2 * len(b) ** 2, d**4)
    raise ValueError("N is undefined for crossing subsets")


def _subsets(h, inclusive: bool):
    subs = proper_subsets(h)
    if inclusive:
        subs.append(tuple(sorted(h)))
    return subs


def b_poly(ctx: CoeffContext, P: Partition, side, inclusive: bool = False) -> Poly:
    h = tuple(sorted(side))
    hb = P.opposite(h)
    d = ctx.d
    out = ctx.D(P).scale(-n_psi(len(hb), d))
    for g in _subsets(h, inclusive):
        out = out + ctx.D(g).scale(n_psi(len(g), d))
    for g in _subsets(hb, inclusive):
        out = out - ctx.D(g).scale(n_psi(len(g), d))
    return out


def c_poly(ctx: CoeffContext, P: Partition, side, inclusive: bool = False) -> Poly:
    h = tuple(sorted(side))
    hb = P.opposite(h)
    d = ctx.d
    DP = ctx.D(P)
    out = ctx.k2 * ctx.k2 * Fraction(3, d**4) - ctx.k3 * Fraction(4, d**3)
    for part in (h, hb):
        subs = _subsets(part, inclusive)
        for g in subs:
            out = out + ctx.D(g) * ctx.D(g) * n_pair(g, g, d)
        for g in subs:
            for g2 in subs:
                if g2 == g:
                    continue
                try:
                    c = n_pair(g2, g, d)
                except ValueError:
                    continue
                out = out + ctx.D(g) * ctx.D(g2) * c
    out = out + DP * DP * n_pair(hb, hb, d)
    for g in _subsets(h, inclusive):
        if set(g) != set(h):
            out = out - DP * ctx.D(g) * (2 * n_pair(g, hb, d))
    for g in _subsets(hb, inclusive):
        if set(g) != set(hb):
            out = out + DP * ctx.D(g) * (2 * n_pair(g, hb, d))
    return out


def psi_of(ctx: CoeffContext, P: Partition, side) -> Poly:
    """psi of the given side as a stratum polynomial (psi is the canonical side)."""
    if tuple(sorted(side)) == P.side:
        return ctx.psi
    return -ctx.D(P) - ctx.psi


def kh_H2_poly(ctx: CoeffContext, P: Partition, side) -> Poly:
    """k_h(H^2) on the stratum of P, in the closed form as usually printed."""
    h = tuple(sorted(side))
    hb = P.opposite(h)
    d = ctx.d
    e, eb = len(h), len(hb)
    out = psi_of(ctx, P, h) * (e * eb) - ctx.D(P) * Fraction(e * eb * eb, d) + ctx.k2 * Fraction(e, d)
    for g in proper_subsets(h):
        out = out + ctx.D(g) * Fraction(len(g) ** 2 * eb, d)
    for g in proper_subsets(hb):
        out = out - ctx.D(g) * Fraction(len(g) ** 2 * e, d)
    return out


@dataclass(frozen=True)
class K0Term:
    """One summand coeff * slot of the k_0(H^l) expansion.

    slot is "top" (k(H^{l+1})), "open_k2" (k(H^l) * k2), or a side tuple s
    meaning the pushforward of k_s(H^l).
    """

    coeff: Fraction
    slot: object


def k0_expansion(ctx: CoeffContext, l: int) -> list[K0Term]:
    """k_0(H^l) = -(2/d) k(H^{l+1}) + (1/d^2) k(H^l) k2 + sum_h |h|^2/d^2 k_hbar(H^l)."""
    if l < 1:
        raise ValueError("l must be positive")
    d = ctx.d
    terms = [K0Term(Fraction(-2, d), "top"), K0Term(Fraction(1, d * d), "open_k2")]
    for P in ctx.partitions:
        for s in P.sides:
            terms.append(K0Term(Fraction(len(s) ** 2, d * d), P.opposite(s)))
    return terms


def evaluate_k0(ctx: CoeffContext, terms: list[K0Term], top: Poly, open_: Poly, pushed_k: dict) -> Poly:
    out = Poly()
    for t in terms:
        if t.slot == "top":
            out = out + top * t.coeff
        elif t.slot == "open_k2":
            out = out + open_ * ctx.k2 * t.coeff
        else:
            out = out + pushed_k[t.slot] * t.coeff
    return out
