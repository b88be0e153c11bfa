import random

import pytest

from tangentcone.family import _require
from tangentcone.semigroup import InvalidParameters, PseudoSymmetricParams, validate


def sweep_params(count, seed=2024, bound=60):
    """Valid alpha4 = 3 parameter sets with every alpha at most ``bound``."""
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        a21 = rng.randint(1, bound - 3)
        a1 = rng.randint(a21 + 2, bound)
        a2 = rng.randint(a21 + 2, bound)
        a3 = rng.randint(2, bound)
        p = PseudoSymmetricParams(a1, a2, a3, 3, a21)
        if p in seen or not validate(p).ok:
            continue
        try:
            _require(p)
        except InvalidParameters:
            continue
        seen.add(p)
        out.append(p)
    return out


@pytest.fixture(scope="session")
def family_sweep():
    return sweep_params(40, seed=7)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
