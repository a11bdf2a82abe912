import numpy as np
import pytest

from app.models.graph import Graph
from app.utils import constructions
from config import Config


@pytest.fixture(autouse=True)
def restore_config():
    """CLI global options write to Config; put every setting back after each test"""
    saved = {name: getattr(Config, name) for name in dir(Config) if name.isupper()}
    Config.RANDOM_SEED = 0
    Config.SHOW_PROGRESS = False
    yield
    for name, value in saved.items():
        setattr(Config, name, value)


@pytest.fixture
def c5():
    return constructions.cycle_graph(5)


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def k4():
    return constructions.complete_graph(4)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
