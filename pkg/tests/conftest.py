import pytest

from qsigma.poset import parse_poset


@pytest.fixture
def V():
    return parse_poset("elements: z a b\norder: z<a z<b")


@pytest.fixture
def chain3():
    return parse_poset("elements: a b c\norder: a<b b<c")


@pytest.fixture
def anti2():
    return parse_poset("elements: a b\norder:")
