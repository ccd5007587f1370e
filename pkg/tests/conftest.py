import numpy as np
import pytest

from pathpers.semimetric import SemimetricMatrix


# filled by test_acceptance.py, one line per criterion
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda x: int(x.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def four_cycle(scale: float = 1.0, diag: float = 2.0) -> SemimetricMatrix:
    d = np.array([[0, 1, diag, 1],
                  [1, 0, 1, diag],
                  [diag, 1, 0, 1],
                  [1, diag, 1, 0]], dtype=float)
    d[d == 1] = scale
    return SemimetricMatrix.from_dense(d)


def random_semimetric(rng, n: int, *, top: int = 4, p_inf: float = 0.2) -> SemimetricMatrix:
    vals = rng.integers(1, top + 1, size=n * (n - 1) // 2).astype(float)
    vals[rng.random(vals.size) < p_inf] = np.inf
    return SemimetricMatrix(n, vals)
