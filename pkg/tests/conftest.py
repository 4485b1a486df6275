import pytest

from hopfext.gamma import induced_datum
from hopfext.groups import cyclic, group_algebra, piecewise_magma, trivial_action
from hopfext.gset import GSetDatum, to_gamma_datum
from hopfext.products import unified_product


@pytest.fixture(scope="session")
def c2x() -> GSetDatum:
    """G = C2, X = {1, x} piecewise, trivial action, γ(x) = g."""
    G, X = cyclic(2), piecewise_magma(2, ["1", "x"])
    return GSetDatum(G, X, trivial_action(X, G), (0, 1))


@pytest.fixture(scope="session")
def c2x_gamma(c2x):
    return to_gamma_datum(c2x)


@pytest.fixture(scope="session")
def c2x_datum(c2x_gamma):
    return induced_datum(c2x_gamma)


@pytest.fixture(scope="session")
def c2x_unified(c2x_datum):
    return unified_product(c2x_datum)


@pytest.fixture(scope="session")
def kc2():
    return group_algebra(cyclic(2))
