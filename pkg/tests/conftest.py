import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from relmatroid import BinaryRelation, ExplicitMatroid, SetFamily, Universe  # noqa: E402
from relmatroid import kernels  # noqa: E402

# The worked relation on {1, 2, 3} and the worked matroid with I = {∅, {1}, {3}}.
EXAMPLE_PAIRS = [("1", "1"), ("1", "2"), ("2", "1"), ("2", "3"), ("3", "1"), ("3", "3")]
EXAMPLE_MATROID = [[], ["1"], ["3"]]


@pytest.fixture
def u3():
    return Universe(["1", "2", "3"])


@pytest.fixture
def example_relation(u3):
    return BinaryRelation.from_label_pairs(u3, EXAMPLE_PAIRS)


@pytest.fixture
def example_matroid(u3):
    return ExplicitMatroid(u3, SetFamily.from_labels(u3, EXAMPLE_MATROID))


def all_relations(n):
    u = Universe.of_size(n, start=1)
    return [BinaryRelation.from_code(u, code) for code in range(1 << (n * n))]


def pair_set(r):
    return set(r.pairs())


def fam(u, *members):
    return SetFamily.from_labels(u, [list(m) for m in members])


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    return kernels.backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    verdicts = getattr(acceptance, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(verdicts):
        terminalreporter.write_line(verdicts[k])
