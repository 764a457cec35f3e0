import pytest

from localekit import corpus


@pytest.fixture(scope="session")
def c1():
    return corpus.chain(1)


@pytest.fixture(scope="session")
def c2():
    return corpus.chain(2)


@pytest.fixture(scope="session")
def c3():
    return corpus.chain(3)


@pytest.fixture(scope="session")
def c4():
    return corpus.chain(4)


@pytest.fixture(scope="session")
def b2():
    return corpus.boolean_cube(2)


@pytest.fixture(scope="session")
def b3():
    return corpus.boolean_cube(3)


@pytest.fixture(scope="session")
def grid(c2, c3):
    from localekit.lattice import product_frame
    return product_frame(c2, c3)


@pytest.fixture(scope="session")
def small_corpus():
    """Every labeled distributive lattice with at most 5 elements."""
    return [frame for _, frame in corpus.iter_distributive_frames(5)]


@pytest.fixture(scope="session")
def tiny_corpus():
    """One frame per shape that the unit tests lean on."""
    return {name: frame for name, frame in corpus.named_frames().items()}
