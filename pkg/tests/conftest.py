import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from monofilt import minimalize  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def monomials(d, max_exp=5):
    return st.tuples(*[st.integers(0, max_exp)] * d).filter(any)


@st.composite
def ideals(draw, d=2, max_exp=5, max_gens=4, m_primary=False):
    gens = draw(st.lists(monomials(d, max_exp), min_size=1, max_size=max_gens))
    if m_primary:
        for i in range(d):
            e = draw(st.integers(1, max_exp))
            gens.append(tuple(e if j == i else 0 for j in range(d)))
    return minimalize(gens, d)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
