import pytest

from tautring.ideal import NotHomogeneous
from tautring.presentation import Flags, Presentation, build, validate


def test_build_deterministic():
    assert build(2, 3).to_json() == build(2, 3).to_json()


@pytest.mark.parametrize("n,d", [(1, 2), (3, 1), (2, 3)])
def test_json_roundtrip(n, d):
    p = build(n, d)
    q = Presentation.from_json(p.to_json())
    assert q.to_json() == p.to_json()
    assert q.dim == n * d + n + d - 3


def test_small_presentations():
    p = build(1, 2)
    assert len(p.vars) == 4
    assert len(build(3, 1).vars) == 2


@pytest.mark.parametrize("n,d", [(2, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_validate(n, d):
    p = build(n, d)
    rep = validate(p)
    assert rep.ok and not rep.problems
    assert rep.rel5 == "derived"


def test_as_printed_rel5_is_rejected_at_d3():
    with pytest.raises(NotHomogeneous, match="FF:"):
        build(1, 3, Flags(rel5="as-printed"))


def test_invalid_arguments():
    with pytest.raises(ValueError):
        build(0, 2)


def test_relation_labels_unique():
    labels = [lab for lab, _ in build(2, 3).relations]
    assert len(labels) == len(set(labels))
