import sys
from pathlib import Path

from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

from stratcat.hfset import decode  # noqa: E402

# Ackermann codes below 2**16 cover every set of rank <= 4 built from the first 16 sets
hf_sets = st.integers(min_value=0, max_value=(1 << 16) - 1).map(decode)
small_hf_sets = st.integers(min_value=0, max_value=15).map(decode)


# Acceptance verdicts are collected here and repeated at the end of the run.
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"{status} criterion {n:>2}: {text}")
