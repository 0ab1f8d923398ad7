import pytest

from artintwist import INFINITY, CoxeterGraph


@pytest.fixture
def a2():
    """Two vertices with the braid label."""
    return CoxeterGraph(["a", "b"], {("a", "b"): 3})


@pytest.fixture
def a2_comm():
    """Two commuting vertices."""
    return CoxeterGraph(["a", "b"], {("a", "b"): 2})


@pytest.fixture
def a3():
    """The chain a - b - c with both labels 3."""
    return CoxeterGraph(["a", "b", "c"], {("a", "b"): 3, ("b", "c"): 3})


@pytest.fixture
def a4():
    return CoxeterGraph(
        ["a", "b", "c", "d"],
        {("a", "b"): 3, ("b", "c"): 3, ("c", "d"): 3},
    )


@pytest.fixture
def b3():
    return CoxeterGraph(["1", "2", "3"], {("1", "2"): 4, ("2", "3"): 3})


@pytest.fixture
def triangle():
    """All three pairs labeled 3."""
    return CoxeterGraph(
        ["a", "b", "c"],
        {("a", "b"): 3, ("a", "c"): 3, ("b", "c"): 3},
    )


@pytest.fixture
def inf_pair():
    return CoxeterGraph(["a", "b"], {("a", "b"): INFINITY})


def commutation_of(g):
    """The commutation predicate of a graph, for feeding the oracles."""
    return lambda s, t: g.label(s, t) == 2
