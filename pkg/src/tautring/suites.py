"""Acceptance checks shared by ``tautring verify`` and the test suite.

Each check returns a ``CheckResult``; engine objects are cached per
(n, d, flags) inside a ``Session`` so that checks can share slices.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracles
from .ideal import GradedIdeal
from .kappa import KappaContext, seed_v1, step
from .presentation import Flags, build, lemma_relations, validate
from .quotient import GradedQuotient, socle_and_duality
from .symmetry import corollary35_presentation, lemma34_ideal_check

DUALITY_CASES = [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)]
VALIDATE_CASES = [(n, 1) for n in range(2, 6)] + DUALITY_CASES + [(3, 3)]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}"


class Session:
    def __init__(self, flags: Flags | None = None):
        self.flags = flags or Flags()
        self._q: dict = {}
        self._kc: dict = {}

    def kc(self, d: int) -> KappaContext:
        if d not in self._kc:
            self._kc[d] = KappaContext(d, self.flags.formulas, own=self.flags.own)
        return self._kc[d]

    def quotient(self, n: int, d: int) -> GradedQuotient:
        if (n, d) not in self._q:
            self._q[(n, d)] = GradedQuotient(build(n, d, self.flags, kc=self.kc(d)))
        return self._q[(n, d)]


def proportional(a, b) -> bool:
    a, b = [Fraction(x) for x in a], [Fraction(x) for x in b]
    if len(a) != len(b):
        return False
    idx = next((i for i, x in enumerate(b) if x), None)
    if idx is None or not a[idx]:
        return not any(a) and not any(b)
    lam = a[idx] / b[idx]
    return all(x == lam * y for x, y in zip(a, b))


def _timed(name, fn):
    t = time.time()
    ok, detail = fn()
    return CheckResult(name, ok, detail, round(time.time() - t, 3))


def check_grassmannian(s: Session) -> CheckResult:
    def run():
        rows = {}
        for n in range(2, 6):
            q = s.quotient(n, 1)
            expect = oracles.gaussian_binomial(n) + [0, 0]
            rows[n] = {"engine": q.hilbert(), "oracle": expect}
        return all(r["engine"] == r["oracle"] for r in rows.values()), rows

    return _timed("1 grassmannian d=1 vs q-binomial", run)


def check_conics_p1(s: Session) -> CheckResult:
    def run():
        inv = s.quotient(1, 2).invariant_hilbert()
        return inv == [1, 1, 1, 0, 0], {"invariant": inv}

    return _timed("2 P^1 conics invariant Hilbert (1,1,1)", run)


def check_duality(s: Session, cases=DUALITY_CASES) -> CheckResult:
    def run():
        out = {}
        for n, d in cases:
            q = s.quotient(n, d)
            rep = socle_and_duality(q.dim, q.invariant_hilbert())
            out[f"{n},{d}"] = {"invariant": rep.dims, "problems": rep.problems}
        return all(not v["problems"] for v in out.values()), out

    return _timed("3 duality of the invariant part", run)


def check_v2_gate(s: Session) -> CheckResult:
    def run():
        out = {}
        ok = True
        for d in (2, 3):
            kc = s.kc(d)
            ctx = kc.ctx
            lemma = GradedIdeal(ctx.ring, [p for _, p in lemma_relations(kc, s.flags)])
            v = step(kc, seed_v1(kc))
            top_ok = lemma.contains(v.open_top - ctx.k3)
            sides = {}
            for P, side in kc.sides():
                S = kc.strata[P]
                diff = S.reduce(v.k[side] - S.kh_H2(side))
                good = not diff or (
                    lemma.contains(S.pushforward(diff)) and lemma.contains(S.push(S.psi_side(side) * diff))
                )
                sides["".join(map(str, side))] = good
            ok &= top_ok and all(sides.values())
            out[d] = {"top_minus_k3": top_ok, "sides": sides}
        return ok, out

    return _timed("4 V2 consistency gate", run)


def check_d3_cross(s: Session, ns=(1, 2, 3)) -> CheckResult:
    def run():
        out = {}
        ok = True
        for n in ns:
            q = s.quotient(n, 3)
            model = corollary35_presentation(n, kc=s.kc(3))
            mh = GradedQuotient(model).hilbert(q.dim + 2)
            inv = q.invariant_hilbert()
            fixed = {lab: q.ideal.contains(model.phi(r)) for lab, r in model.relations[:3]}
            ok &= mh == inv and all(fixed.values())
            out[n] = {"model": mh, "engine_invariant": inv, "fixed_relations_vanish": fixed}
        return ok, out

    return _timed("5 d=3 cross-presentation", run)


def _kappa_monomials(q, pairs):
    k2, k3 = q.ring.gen("k2"), q.ring.gen("k3")
    return [k2**a * k3**b for a, b in pairs]


def check_lines(s: Session) -> CheckResult:
    def run():
        q = s.quotient(3, 1)
        r = q.integrate_ratio(_kappa_monomials(q, [(4, 0), (2, 1), (0, 2)]))
        o = oracles.schubert_g24_ratios()
        return proportional(r, o), {"engine": [str(x) for x in r], "oracle": o}

    return _timed("6 lines in P^3 ratios", run)


def check_conics_p3(s: Session) -> CheckResult:
    def run():
        q = s.quotient(3, 2)
        r = q.integrate_ratio(_kappa_monomials(q, [(8, 0), (6, 1), (4, 2), (2, 3), (0, 4)]))
        o = oracles.p3_degree2_counts()
        return proportional(r, o), {"engine": [str(x) for x in r], "oracle": [str(x) for x in o]}

    return _timed("7 conics in P^3 ratios", run)


def check_validate(s: Session, cases=VALIDATE_CASES) -> CheckResult:
    def run():
        out = {}
        for n, d in cases:
            q = s.quotient(n, d)
            rep = validate(q.pres, q.ideal)
            out[f"{n},{d}"] = rep.problems
        ok = all(not v for v in out.values())
        return ok, {"rel5": s.flags.rel5, "subsets": s.flags.subsets, "problems": out}

    return _timed("8 homogeneity and S_d stability", run)


def check_order_invariance(s: Session, n=1, d=3, trials=20, seed=20261016) -> CheckResult:
    from .poly import Ring

    def run():
        base = s.quotient(n, d)
        ref = base.hilbert()
        rels = base.pres.polys()
        rng = random.Random(seed)
        bad = []
        for t in range(trials):
            order = list(range(len(base.ring.vars)))
            rng.shuffle(order)
            ring = Ring([base.ring.vars[i] for i in order])
            where = {old: new for new, old in enumerate(order)}
            polys = [p.map_vars(where) for p in rels]
            rng.shuffle(polys)
            h = GradedIdeal(ring, polys).hilbert(base.dim + 2)
            if h != ref:
                bad.append({"trial": t, "hilbert": h})
        return not bad, {"reference": ref, "failures": bad}

    return _timed("9 order invariance", run)


def check_lemma34(s: Session, n=2, cap=6) -> CheckResult:
    def run():
        q = s.quotient(n, 3)
        out = {a: lemma34_ideal_check(a, cap, n, 3, q=q) for a in ("unit", "kh_H2")}
        return all(r["equal"] for r in out.values()), out

    return _timed("10 ideal of a boundary class", run)


SUITES = {
    "grassmannian": check_grassmannian,
    "conics-p1": check_conics_p1,
    "duality": check_duality,
    "v2-gate": check_v2_gate,
    "d3-cross": check_d3_cross,
    "lines": check_lines,
    "conics-p3": check_conics_p3,
    "validate": check_validate,
    "order": check_order_invariance,
    "alpha-ideal": check_lemma34,
}


def run_suites(names=None, flags: Flags | None = None) -> list[CheckResult]:
    s = Session(flags)
    names = list(SUITES) if names in (None, "all", ["all"]) else list(names)
    return [SUITES[name](s) for name in names]
