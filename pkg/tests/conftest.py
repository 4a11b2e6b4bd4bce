import pytest

from cuspedforms import RunConfig


@pytest.fixture(scope="session")
def cfg():
    return RunConfig()


@pytest.fixture(scope="session")
def qc(cfg):
    # one shared evaluation engine: the fill / distance / orbit caches carry
    # across tests, which the time budgets assume
    return cfg.build()


@pytest.fixture(scope="session")
def graph(qc):
    return qc.graph


@pytest.fixture(scope="session")
def engine(qc):
    return qc.engine
