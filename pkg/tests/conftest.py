import pytest

from modlie.roots import Root, build_root_system
from modlie.chevalley import build_chevalley
from modlie.redenv import Character, baby_verma


@pytest.fixture(scope="session")
def a1_rs():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def b2_rs():
    return build_root_system("B", 2)


@pytest.fixture(scope="session")
def b3_rs():
    return build_root_system("B", 3)


@pytest.fixture(scope="session")
def a1_p5(a1_rs):
    return build_chevalley(a1_rs, 5, allow_small=True)


@pytest.fixture(scope="session")
def a1_p7(a1_rs):
    return build_chevalley(a1_rs, 7)


@pytest.fixture(scope="session")
def b2_p0(b2_rs):
    return build_chevalley(b2_rs, 0)


@pytest.fixture(scope="session")
def b2_p7(b2_rs):
    return build_chevalley(b2_rs, 7)


@pytest.fixture(scope="session")
def b2_p11(b2_rs):
    return build_chevalley(b2_rs, 11)


@pytest.fixture(scope="session")
def b3_p7(b3_rs):
    return build_chevalley(b3_rs, 7)


@pytest.fixture(scope="session")
def b2_rep7(b2_p7):
    """Baby Verma of B2 at p = 7 with chi(x(-e1)) = 1, lambda = 0 (dim 2401)."""
    L = b2_p7
    chi = Character(L, {L.xpos(Root((-1, 0))): 1})
    return baby_verma(L, chi, {1: 0, 2: 0})
