import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lcverify.graphs import Graph  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "lcverify" / "data"


def random_connected_graph(rng: np.random.Generator, n: int, p_extra: float = 0.3) -> Graph:
    edges = set()
    for v in range(1, n):
        u = int(rng.integers(0, v))
        edges.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_extra:
                edges.add((u, v))
    return Graph(n, edges)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
