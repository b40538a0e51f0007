import pytest
from hypothesis import HealthCheck, settings, strategies as st

from g2hol.linalg import Matrix
from g2hol.scalar import Scalar

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def scalars(draw, irrational: bool = True):
    a = draw(small_rationals)
    b = draw(small_rationals) if irrational else 0
    return Scalar(f"{a.numerator}/{a.denominator}", f"{b.numerator}/{b.denominator}" if b else 0)


def vectors(n: int, irrational: bool = True):
    return st.tuples(*[scalars(irrational) for _ in range(n)])


@st.composite
def matrices(draw, rows: int, cols: int | None = None, irrational: bool = True):
    cols = rows if cols is None else cols
    return Matrix([[draw(scalars(irrational)) for _ in range(cols)] for _ in range(rows)])


@pytest.fixture(scope="session")
def registry():
    from g2hol.liegeom import examples_registry

    return examples_registry()


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, collected by tests/test_acceptance.py."""
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        parts = results[n]
        ok = all(p[0] for p in parts)
        detail = "; ".join(d for _, d in parts)
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
