import random

import pytest
from hypothesis import given, strategies as st

from tautring.coefficients import CoeffContext
from tautring.poly import Poly
from tautring.presentation import build
from tautring.quotient import GradedQuotient
from tautring.symmetry import (
    act_on_poly,
    all_permutations,
    corollary35_presentation,
    lemma34_ideal_check,
    model_images,
    reynolds,
    transpositions,
)

CTX = {d: CoeffContext(d) for d in (2, 3)}


def _rand(ctx, rng, deg):
    ms = ctx.ring.monomials(deg)
    p = Poly()
    for m in rng.sample(ms, min(4, len(ms))):
        p = p + Poly.monomial(m, rng.randint(-4, 4))
    return p


@given(st.sampled_from([2, 3]), st.integers(0, 10**6), st.integers(0, 3), st.integers(0, 2))
def test_reynolds_projector(d, seed, dp, dx):
    ctx = CTX[d]
    rng = random.Random(seed)
    p = _rand(ctx, rng, dp)
    r = reynolds(ctx, p)
    assert reynolds(ctx, r) == r
    for s in all_permutations(d):
        assert act_on_poly(ctx, s, r) == r
    x = reynolds(ctx, _rand(ctx, rng, dx))
    assert reynolds(ctx, x * p) == x * r
    assert reynolds(ctx, p * 3 + x) == r * 3 + x


def test_transpositions_generate():
    assert len(transpositions(4)) == 6
    assert len(all_permutations(3)) == 6


def test_model_image_of_tau_is_invariant():
    ctx = CTX[3]
    for name, img in model_images(ctx).items():
        assert reynolds(ctx, img) == img, name


@pytest.mark.parametrize("n", [1, 2])
def test_model_matches_invariants(n):
    q = GradedQuotient(build(n, 3))
    model = corollary35_presentation(n)
    assert GradedQuotient(model).hilbert(q.dim + 2) == q.invariant_hilbert()
    for lab, r in model.relations[:3]:
        assert lab.startswith("model-")
        assert q.ideal.contains(model.phi(r)), lab


def test_alpha_ideal_check_unit_small():
    out = lemma34_ideal_check("unit", 3, 1)
    assert out["equal"]
    assert out["left"] == out["right"]
