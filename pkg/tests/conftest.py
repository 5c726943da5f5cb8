import pytest

from gammaq.arquiver import build
from gammaq.rootsys import parse_quiver


@pytest.fixture(scope="session")
def q_ex():
    return parse_quiver(5, "><>>")


@pytest.fixture(scope="session")
def ar_ex(q_ex):
    return build(q_ex)


# (i, p) -> [a, b] for the five-vertex example quiver 1->2<-3->4->5
GOLDEN = {
    (1, -6): (5, 5), (1, -4): (4, 4), (1, -2): (2, 3), (1, 0): (1, 1),
    (2, -5): (4, 5), (2, -3): (2, 4), (2, -1): (1, 3),
    (3, -4): (2, 5), (3, -2): (1, 4), (3, 0): (3, 3),
    (4, -5): (2, 2), (4, -3): (1, 5), (4, -1): (3, 4),
    (5, -4): (1, 2), (5, -2): (3, 5),
}
