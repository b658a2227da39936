import pytest

from multiloop.session import Session, SessionSpec


def make_session(family, rank, autos, orders, window=2, margin=1, seed=0) -> Session:
    return Session(
        SessionSpec.from_dict(
            {
                "algebra": {"family": family, "rank": rank},
                "autos": autos,
                "orders": orders,
                "window": window,
                "margin": margin,
                "seed": seed,
            }
        )
    )


@pytest.fixture(scope="session")
def a1_n1():
    return make_session("A", 1, [{"kind": "identity"}], [1])


@pytest.fixture(scope="session")
def a1_n2():
    return make_session("A", 1, [{"kind": "identity"}, {"kind": "identity"}], [1, 1], window=1)


@pytest.fixture(scope="session")
def a2_twisted():
    return make_session("A", 2, [{"kind": "diagram", "perm": [1, 0]}], [2])


@pytest.fixture(scope="session")
def d4_triality():
    return make_session("D", 4, [{"kind": "diagram", "perm": [2, 1, 3, 0]}], [3], window=1)
