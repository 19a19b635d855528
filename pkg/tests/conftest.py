import numpy as np
import pytest


def random_triples(rng, n, lo=-100.0, hi=100.0, min_gap=1e-3):
    """Uniform triples whose pairwise gaps are at least ``min_gap``."""
    out = []
    while len(out) < n:
        t = rng.uniform(lo, hi, size=3)
        if np.min(np.diff(np.sort(t))) >= min_gap:
            out.append(tuple(float(v) for v in t))
    return out


def scale_of(values):
    return max(1.0, *(abs(v) for v in values))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record ``(criterion, passed, detail)``; printed in the terminal summary."""

    def record(number, name, passed, detail=""):
        ACCEPTANCE.append((number, name, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {name}: {detail}")
