import pytest
from hypothesis import settings

from skeintwist.skein import SkeinEngine

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def engine():
    return SkeinEngine(max_crossings=200)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE

    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %2d %s  %s: %s" % (k, "PASS" if passed else "FAIL", title, detail))
