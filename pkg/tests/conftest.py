import numpy as np
import pytest

from rankmetric import _kernels
from rankmetric.gf import field_new
from rankmetric.matfq import matrix

# lines recorded by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def F2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def F3():
    return field_new(3, 1)


@pytest.fixture(scope="session")
def F8():
    return field_new(2, 3, (1, 1, 0, 1))


@pytest.fixture(scope="session")
def F9():
    return field_new(3, 2)


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    F = field_new(2, 1)
    W = np.zeros((2, 2, 2), dtype=np.int64)
    _kernels.batch_rank(W, *F.kernel_args())
    _kernels.pairwise_min_distance(W, *F.kernel_args())
    _kernels.distance_adjacency(W, 1, *F.kernel_args())
    _kernels.rref_rows(W[0], *F.kernel_args())


EIGHT_VECTORS = [
    [1, 0, 1, 0, 0, 1, 1],
    [1, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 1],
    [0, 0, 1, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 0, 1],
    [1, 0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0],
]

EIGHT_VECTORS_RREF = [
    [1, 0, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 1, 1],
]


@pytest.fixture
def pair_code(F2):
    return [matrix(F2, [[1, 1], [1, 1]]), matrix(F2, [[1, 0], [0, 1]])]


def rank_by_span(A):
    """Independent rank oracle: log_q of the size of the row space, by enumeration."""
    F = A.field
    q = F.q
    m, n = A.shape
    span = set()
    rows = A.data
    for coeffs in np.ndindex(*([q] * m)):
        acc = np.zeros(n, dtype=np.int64)
        for c, row in zip(coeffs, rows):
            acc = np.array([F.add(int(x), F.mul(int(c), int(y))) for x, y in zip(acc, row)])
        span.add(tuple(acc))
    r = 0
    while q ** r < len(span):
        r += 1
    assert q ** r == len(span)
    return r
