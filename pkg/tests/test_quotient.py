import pytest

from tautring.ideal import MacaulayIdeal
from tautring.oracles import gaussian_binomial
from tautring.presentation import Flags, build
from tautring.quotient import GradedQuotient, TopDegreeError, socle_and_duality


@pytest.mark.parametrize("n", [2, 3, 4])
def test_grassmannian(n):
    assert GradedQuotient(build(n, 1)).hilbert() == gaussian_binomial(n) + [0, 0]


@pytest.mark.parametrize("n,d", [(1, 2), (2, 2), (1, 3)])
def test_engines_agree(n, d):
    p = build(n, d)
    assert GradedQuotient(p).hilbert() == GradedQuotient(p, MacaulayIdeal(p.ring, p.polys())).hilbert()


@pytest.mark.parametrize(
    "n,d,want",
    [
        (1, 2, [1, 1, 1]),
        (2, 2, [1, 2, 3, 3, 2, 1]),
        (1, 3, [1, 1, 2, 1, 1]),
        (1, 4, [1, 2, 4, 4, 4, 2, 1]),
    ],
)
def test_invariant_hilbert(n, d, want):
    q = GradedQuotient(build(n, d))
    inv = q.invariant_hilbert()
    assert inv == want + [0, 0]
    assert all(a <= b for a, b in zip(inv, q.hilbert()))


def test_inclusive_chains_break_duality():
    q = GradedQuotient(build(1, 3, Flags(subsets="inclusive")))
    assert not socle_and_duality(q.dim, q.invariant_hilbert()).ok


def test_duality_report():
    assert socle_and_duality(2, [1, 1, 1, 0, 0]).ok
    rep = socle_and_duality(4, [1, 1, 2, 2, 0, 0, 0])
    assert not rep.ok and rep.problems


def test_integrate_lines():
    q = GradedQuotient(build(3, 1))
    k2, k3 = q.ring.gen("k2"), q.ring.gen("k3")
    r = q.integrate_ratio([k2**4, k2 * k2 * k3, k3 * k3])
    assert [x / r[1] for x in r] == [2, 1, 1]


def test_integrate_rejects_wrong_degree():
    q = GradedQuotient(build(3, 1))
    with pytest.raises(Exception):
        q.integrate_ratio([q.ring.gen("k2")])


def test_normal_form_linear_on_top_degree():
    q = GradedQuotient(build(2, 2))
    ms = q.ring.monomials(q.dim)[:6]
    from fractions import Fraction

    from tautring.poly import Poly

    a, b = Poly.monomial(ms[1]), Poly.monomial(ms[4])
    x, y = Fraction(2, 3), Fraction(-5, 7)
    assert q.normal_form(a * x + b * y) == q.normal_form(a) * x + q.normal_form(b) * y
