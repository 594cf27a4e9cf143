from fractions import Fraction

import pytest

from tautring.oracles import (
    ProjectiveGW,
    gaussian_binomial,
    kontsevich_plane_counts,
    p3_degree2_counts,
    pieri,
    plane_counts_wdvv,
    schubert_g24_ratios,
    schubert_integral,
)


def test_gaussian_binomial():
    assert gaussian_binomial(2) == [1, 1, 1]
    assert gaussian_binomial(3) == [1, 1, 2, 1, 1]
    assert gaussian_binomial(4) == [1, 1, 2, 2, 2, 1, 1]
    for n in range(2, 7):
        g = gaussian_binomial(n)
        assert g == g[::-1]
        assert sum(g) == (n + 1) * n // 2


def test_kontsevich():
    assert kontsevich_plane_counts(5) == [1, 1, 12, 620, 87304]


def test_wdvv_solver_matches_kontsevich():
    assert [int(x) for x in plane_counts_wdvv(4)] == [1, 1, 12, 620]


def test_p3_conics():
    got = p3_degree2_counts()
    assert got == [92, 18, 4, 1, 0]
    assert all(Fraction(x).denominator == 1 for x in got)


def test_p3_lines():
    gw = ProjectiveGW(3)
    assert gw.value(1, (2, 2, 2, 2)) == 2
    assert gw.value(1, (3, 3)) == 1


def test_deterministic():
    assert p3_degree2_counts() == p3_degree2_counts()
    assert ProjectiveGW(3).value(2, (2,) * 8) == 92


def test_schubert():
    assert schubert_g24_ratios() == [2, 1, 1]
    assert schubert_integral([1] * 4, 2, 4) == 2
    assert schubert_integral([1] * 6, 2, 5) == 5
    assert sorted(pieri((1,), 1, 2, 2)) == [(1, 1), (2, 0)]
