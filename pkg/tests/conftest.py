import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from lexshell import build_complex  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent


@st.composite
def pure_complexes(draw, max_n=6, max_d=2, labels=None):
    """A random pure complex; labels are drawn from ``labels`` when given."""
    n = draw(st.integers(2, max_n))
    d = draw(st.integers(0, min(max_d, n - 1)))
    pool = labels if labels is not None else range(1, n + 1)
    verts = sorted(draw(st.lists(st.sampled_from(list(pool)), min_size=n, max_size=n, unique=True))) \
        if labels is not None else list(range(1, n + 1))
    skel = list(combinations(verts, d + 1))
    chosen = draw(st.lists(st.sampled_from(skel), min_size=1, max_size=len(skel), unique=True))
    return build_complex(chosen)


@pytest.fixture
def corpus_dir():
    return ROOT / "corpus"


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
