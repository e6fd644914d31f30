from __future__ import annotations

import pytest

from graphmon import build_graph, fractal_cubic_network


@pytest.fixture
def c4():
    return build_graph(
        ["00", "01", "10", "11"],
        [("00", "01"), ("01", "11"), ("11", "10"), ("10", "00")],
    )


@pytest.fixture(scope="session")
def fcn1():
    return fractal_cubic_network(1)


@pytest.fixture(scope="session")
def fcn2():
    return fractal_cubic_network(2)


@pytest.fixture
def path4():
    return build_graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
