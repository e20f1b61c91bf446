import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

# derandomized so two runs of the suite produce identical output
settings.register_profile("repo", derandomize=True, max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def fractions(lo=-4, hi=4, dens=(1, 2, 3)):
    return st.builds(lambda a, b: Fraction(a, b), st.integers(lo, hi), st.sampled_from(dens))


def matrices(rows, cols, **kw):
    return st.lists(st.lists(fractions(**kw), min_size=cols, max_size=cols), min_size=rows, max_size=rows)
