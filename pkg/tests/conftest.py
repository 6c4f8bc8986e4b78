from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dirac_tensor.numbers import GaussQ, exact_array

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_q = st.fractions(min_value=-4, max_value=4, max_denominator=5)
gaussq = st.builds(GaussQ, small_q, small_q)
nonzero_gaussq = gaussq.filter(bool)


@st.composite
def spinors(draw):
    return exact_array([draw(gaussq) for _ in range(4)])


@st.composite
def chiral_spinors(draw, sign=None):
    s = draw(st.sampled_from([1, -1])) if sign is None else sign
    a, b = (0, 1) if s == 1 else (2, 3)
    out = exact_array([0, 0, 0, 0])
    out[a], out[b] = draw(gaussq), draw(gaussq)
    if not (out[a] or out[b]):
        out[a] = GaussQ(1)
    return s, out


@st.composite
def vec3s(draw):
    return exact_array([draw(gaussq) for _ in range(3)])


seeds = st.integers(min_value=0, max_value=2**31 - 1)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def frac(x):
    return Fraction(x)


# acceptance criteria report ------------------------------------------------------

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    ok = call.excinfo is None
    prev = _CRITERIA.get(number)
    _CRITERIA[number] = (title, (prev[1] if prev else True) and ok,
                         (prev[2] if prev else 0.0) + call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, secs = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.2f} s)")
