import pytest

from quadsub.field import Field
from quadsub.io import parse_polynomial

F5 = Field(5)
F7 = Field(7)
GF = Field(32003)
QQ = Field(None)


def polys(texts, names="x y z", field=GF):
    """Parse several polynomials in one ring (degree unrestricted)."""
    names = names.split() if isinstance(names, str) else list(names)
    return [parse_polynomial(t, names, field, max_degree=None) for t in texts]


def poly(text, names="x y z", field=GF):
    return polys([text], names, field)[0]


@pytest.fixture
def gf():
    return GF


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(number, ok, detail):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
