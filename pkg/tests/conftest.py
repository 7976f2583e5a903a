import numpy as np
import pytest

from coxspec import build_group, cayley_graph

PHI = (1 + np.sqrt(5)) / 2


@pytest.fixture(scope="session")
def groups():
    return {name: build_group(name) for name in ("A3", "B3", "H3")}


@pytest.fixture(scope="session")
def h3(groups):
    return groups["H3"]


@pytest.fixture(scope="session")
def a3(groups):
    return groups["A3"]


@pytest.fixture(scope="session")
def b3(groups):
    return groups["B3"]


@pytest.fixture(scope="session")
def graphs(groups):
    return {name: cayley_graph(g) for name, g in groups.items()}
