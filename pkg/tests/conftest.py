import pytest

# Shared evaluation grid: every rho the experiments use, crossed with the
# sample sizes the tables cover.
RHO_GRID = (0.0, 0.25, -0.25, 0.56, 0.75, -0.75, 0.95)
N_GRID = (3, 5, 10, 30, 100)


@pytest.fixture(scope="session")
def rho_grid():
    return RHO_GRID


@pytest.fixture(scope="session")
def n_grid():
    return N_GRID
