import pytest

from belyitools.curves import RationalCurve

ACCEPTANCE_LINES = []


def record_criterion(number, title, passed, detail=""):
    line = f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def golden():
    from fractions import Fraction
    E = RationalCurve.from_cubic_roots(-2795, 1365, 1430)
    P = E.point(Fraction(5086347841, 1848**2), Fraction(-35496193060511, 1848**3))
    return E, P
