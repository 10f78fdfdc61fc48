import pytest

from ordfact.order import MonotoneMap, make_preorder
from ordfact.galois import Adjunction


def chain(n):
    labels = [str(i) for i in range(n)]
    return make_preorder(labels, [(str(i), str(i + 1)) for i in range(n - 1)])


def antichain(n):
    return make_preorder([str(i) for i in range(n)])


@pytest.fixture
def chain2():
    return chain(2)


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def indiscrete2():
    return make_preorder(["p", "q"], [("p", "q"), ("q", "p")])


@pytest.fixture
def collapse(chain3, chain2):
    """The chain-3 to chain-2 collapse adjunction: 0,1 -> 0 and 2 -> 1."""
    return Adjunction(
        MonotoneMap(chain3, chain2, (0, 0, 1)),
        MonotoneMap(chain2, chain3, (1, 2)),
    )


@pytest.fixture
def expand(chain2, chain3):
    """chain-2 into chain-3 hitting the endpoints; interior fixes {0, 2}."""
    return Adjunction(
        MonotoneMap(chain2, chain3, (0, 2)),
        MonotoneMap(chain3, chain2, (0, 0, 1)),
    )


ID2_CXT = "B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n.X\n"
FULL2_CXT = "B\n\n2\n2\n\ng1\ng2\nm1\nm2\nXX\nXX\n"
EMPTY2_CXT = "B\n\n2\n2\n\ng1\ng2\nm1\nm2\n..\n..\n"


def _square_cxt(n, cross):
    rows = [
        "".join("X" if cross(i, j) else "." for j in range(n)) for i in range(n)
    ]
    return "\n".join(
        ["B", "", str(n), str(n), ""]
        + [f"g{i + 1}" for i in range(n)]
        + [f"m{i + 1}" for i in range(n)]
        + rows
    ) + "\n"


def identity_cxt(n):
    """Diagonal (nominal) scale: each object bears exactly its own attribute."""
    return _square_cxt(n, lambda i, j: i == j)


def contranominal_cxt(n):
    """Off-diagonal scale: every subset of objects is an extent (2^n concepts)."""
    return _square_cxt(n, lambda i, j: i != j)
