from fractions import Fraction

import pytest
from hypothesis import strategies as st

from schur_entropy.heisenberg import HeisenbergElement

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record_acceptance(name: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def padic_rationals(p: int, vmin: int = -4, vmax: int = 4, nonzero: bool = True):
    """Rationals ``p**v * a/b`` with ``a, b`` prime to ``p``."""
    unit = st.tuples(st.integers(1, 10**6), st.integers(1, 10**4), st.booleans()).filter(
        lambda t: t[0] % p and t[1] % p).map(lambda t: Fraction(t[0] if t[2] else -t[0], t[1]))
    val = st.builds(lambda v, u: Fraction(p) ** v * u, st.integers(vmin, vmax), unit)
    return val if nonzero else st.one_of(st.just(Fraction(0)), val)


@pytest.fixture(params=[2, 3, 5, 7])
def prime(request):
    return request.param


def random_element(rng, R, n):
    def comp(kind):
        v = rng.randint(0, 3) if kind == "Zp" else rng.randint(-3, 3)
        if rng.random() < 0.15:
            return Fraction(0)
        unit = Fraction(rng.choice([x for x in range(1, 40) if x % R.p]) * rng.choice((1, -1)),
                        rng.choice([x for x in range(1, 9) if x % R.p]))
        return Fraction(R.p) ** v * unit

    entry = lambda: [comp(k) for k in R.factors]
    return HeisenbergElement(R, [entry() for _ in range(n)], [entry() for _ in range(n)], entry())
