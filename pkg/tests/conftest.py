import numpy as np
import pytest

from datacomplexity import Dataset


def line(values, labels):
    """One-feature dataset."""
    return Dataset.from_arrays(np.asarray(values, float), list(labels))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# ---- acceptance summary: one line per criterion at the end of the run ----

ACCEPTANCE = {}


def record(number, title, ok, detail=""):
    ACCEPTANCE[number] = (title, ok, detail)
    print(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}{' | ' + detail if detail else ''}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}{' | ' + detail if detail else ''}")
