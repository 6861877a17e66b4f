import pytest

from app import create_app

from ..fixtures import grid_graph, k33, k33_plus_grid, path_graph


@pytest.fixture(scope="session")
def app():
    """Flask app built from defaults only.

    One for the whole test session; the environment is ignored so local
    .env files cannot change results."""
    app = create_app(config_name="test", environ={})
    yield app


@pytest.fixture
def cli_runner(app):
    yield app.test_cli_runner()


@pytest.fixture
def path5():
    return path_graph(5)


@pytest.fixture
def grid4():
    return grid_graph(4, 4)


@pytest.fixture
def k33_graph():
    return k33()


@pytest.fixture
def k33_with_grid():
    return k33_plus_grid()
