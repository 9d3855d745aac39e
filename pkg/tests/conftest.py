import sys
from pathlib import Path

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from cambrep.poset import from_covers

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def posets(draw, min_size=1, max_size=8):
    """Random posets: each pair i < j is related with a drawn probability."""
    n = draw(st.integers(min_size, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    # relabel so the natural order is not always a linear extension
    perm = draw(st.permutations(range(n)))
    return from_covers(n, [(perm[a], perm[b]) for a, b in chosen])
