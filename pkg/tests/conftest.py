import pytest

from symfa import INF, Interval, Or, Sfa
from symfa.algebra import INTERVAL_NAT


@pytest.fixture
def nat():
    return INTERVAL_NAT


def build_two_state_target():
    # accepts words containing a letter < 100 followed only by letters < 200
    return Sfa(INTERVAL_NAT, ("q0", "q1"), "q0", ("q1",), (
        ("q0", Interval(0, 100), "q1"),
        ("q0", Interval(100, INF), "q0"),
        ("q1", Interval(0, 200), "q1"),
        ("q1", Interval(200, INF), "q0"),
    ))


# hand-computed characteristic sample of the two-state target
TWO_STATE_SAMPLE = {
    (): 0, (0,): 1, (100,): 0, (200,): 0,
    (0, 0): 1, (0, 100): 1, (0, 200): 0,
}


def build_four_state_target():
    # initial state branches on < 100; each branch loops on its own side
    # and falls into a rejecting sink on the other side
    return Sfa(INTERVAL_NAT, ("qi", "q1", "q2", "q3"), "qi", ("q1", "q2"), (
        ("qi", Interval(0, 100), "q1"),
        ("qi", Interval(100, INF), "q2"),
        ("q1", Interval(0, 100), "q1"),
        ("q1", Interval(100, INF), "q3"),
        ("q2", Interval(100, INF), "q2"),
        ("q2", Interval(0, 100), "q3"),
        ("q3", Interval(0, INF), "q3"),
    ))


# hand-computed sample for the four-state target; consistent with it but
# smaller than the full characteristic sample
FOUR_STATE_SAMPLE = {
    (): 0, (0,): 1, (100,): 1, (0, 0): 1, (0, 100): 0,
    (100, 100): 1, (100, 0): 0, (0, 100, 0): 0,
}


@pytest.fixture
def two_state_target():
    return build_two_state_target()


@pytest.fixture
def four_state_target():
    return build_four_state_target()
