import pytest

from morphoword import Alphabet, Morphism


def words_of(alphabet, *texts):
    return {alphabet.word(t) for t in texts}


@pytest.fixture
def ab():
    return Alphabet("ab")


@pytest.fixture
def tm():
    return Morphism.parse("0 -> 0 1\n1 -> 1 0")


@pytest.fixture
def fib():
    return Morphism.parse("0 -> 0 1\n1 -> 0")
