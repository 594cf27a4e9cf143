import pytest

from tautring.ideal import GradedIdeal
from tautring.kappa import KappaContext, VVector, kappa_relations, seed_v1, step, v_vector
from tautring.poly import Poly
from tautring.presentation import Flags, build, lemma_relations


def _degrees_ok(kc, v):
    ring = kc.ctx.ring
    # k(H^a) has degree a - 1
    ok = ring.is_homogeneous(v.open_top) in (v.level, "zero")
    ok &= ring.is_homogeneous(v.open) in (v.level - 1, "zero")
    for s, p in v.pushed(kc).items():
        ok &= ring.is_homogeneous(p) in (v.level, "zero")
    for s in v.psik:
        S = kc.stratum_of(s)
        ok &= ring.is_homogeneous(S.push(v.psik[s])) in (v.level + 1, "zero")
    return ok


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_degree_bookkeeping(d):
    kc = KappaContext(d)
    v = seed_v1(kc)
    for _ in range(4 if d < 4 else 3):
        assert _degrees_ok(kc, v)
        v = step(kc, v)


def test_seed():
    kc = KappaContext(3)
    ctx = kc.ctx
    v = seed_v1(kc)
    assert v.open_top == ctx.k2 and v.open == Poly.const(3)
    pushed = v.pushed(kc)
    assert pushed[(1, 2)] == ctx.D(ctx.partition_of((1, 2))) * 2


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_open_block(d):
    # with the boundary slots empty, the open entries transform by the 2x2
    # open block, up to boundary classes coming from k_0(H^2)
    kc = KappaContext(d)
    ctx = kc.ctx
    v = seed_v1(kc)
    X = ctx.k2 * ctx.k3 + ctx.k2**3
    Y = ctx.k3 * 3 - ctx.k2 * ctx.k2
    w = step(kc, VVector(1, X, Y, {s: Poly() for s in v.k}, {s: Poly() for s in v.psik}))
    want = ctx.k2 * X / d + (ctx.k3 / d - ctx.k2 * ctx.k2 / (d * d)) * Y
    kill = {i: Poly() for i, var in enumerate(ctx.ring.vars) if var.kind in ("D", "F")}
    assert (w.open_top - want).substitute(kill) == Poly()
    assert w.open == X
    # and the first step from the seed returns kappa_3 on the open part
    assert step(kc, seed_v1(kc)).open_top.substitute(kill) == ctx.k3


@pytest.mark.parametrize("d", [2, 3])
def test_v2_gate(d):
    kc = KappaContext(d)
    ctx = kc.ctx
    lemma = GradedIdeal(ctx.ring, [p for _, p in lemma_relations(kc, Flags())])
    v = step(kc, seed_v1(kc))
    assert lemma.contains(v.open_top - ctx.k3)
    for P, s in kc.sides():
        S = kc.strata[P]
        diff = S.reduce(v.k[s] - S.kh_H2(s))
        assert lemma.contains(S.pushforward(diff))
        assert lemma.contains(S.push(S.psi_side(s) * diff))


def test_own_side_terms_break_duality():
    from tautring.quotient import GradedQuotient, socle_and_duality

    kc = KappaContext(3, own=1)
    q = GradedQuotient(build(2, 3, kc=kc))
    assert not socle_and_duality(q.dim, q.invariant_hilbert()).ok


def test_d1_relations():
    kc = KappaContext(1)
    rels = kappa_relations(2, kc)
    assert len(rels) == 2
    ring = kc.ctx.ring
    assert sorted(ring.is_homogeneous(p) for _, p in rels) == [2, 3]
    # the second entry of V_3 is the first entry of V_2
    assert rels[1][1] == v_vector(kc, 2).open_top


def test_kappa2_dies_on_p1():
    # H^2 = 0 on P^1, so k2 lies in the ideal for n = 1
    q = build(1, 2).ideal()
    kc = KappaContext(2)
    assert q.contains(kc.ctx.k2)


@pytest.mark.parametrize("n,d", [(1, 2), (2, 2), (1, 3)])
def test_relation_degrees(n, d):
    kc = KappaContext(d)
    ring = kc.ctx.ring
    for lab, p in kappa_relations(n, kc):
        assert ring.is_homogeneous(p) in (n, n + 1, n + 2, "zero"), lab
