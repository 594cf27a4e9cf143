"""The ten acceptance criteria, at exact equality.

One PASS/FAIL line per criterion is printed to the terminal.
"""
import pytest

from tautring.suites import SUITES, Session



@pytest.fixture(scope="module")
def session():
    return Session()


@pytest.mark.parametrize("name", list(SUITES))
def test_criterion(name, session, capsys):
    res = SUITES[name](session)
    with capsys.disabled():
        print(f"\n{res.line()} ({res.seconds}s)")
    assert res.ok, res.detail
