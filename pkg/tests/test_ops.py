import random

import pytest

from symfa import (
    INF, Interval, Not, Or, Sfa, TOP, accepts, classify, complement,
    complete_sfa, determinize, equiv, includes, is_empty, minimize, product,
)
from symfa.algebra import INTERVAL_NAT, prop_algebra, Lit
from symfa.generate import random_sfa, rename_and_rebracket


def one_letter_machine(lo, hi):
    # accepts exactly the one-letter words with letter in [lo, hi)
    return complete_sfa(Sfa(INTERVAL_NAT, ("s", "t"), "s", ("t",), (
        ("s", Interval(lo, hi), "t"),
    )))


def test_product_intersection():
    m = product(one_letter_machine(0, 100), one_letter_machine(50, 200))
    assert accepts(m, (60,))
    assert not accepts(m, (10,))
    assert not accepts(m, (150,))
    assert not accepts(m, (60, 60))


def test_product_union():
    m = product(one_letter_machine(0, 100), one_letter_machine(50, 200),
                "union")
    assert accepts(m, (10,))
    assert accepts(m, (150,))
    assert not accepts(m, (300,))


def test_complement():
    m = complement(one_letter_machine(10, 20))
    assert accepts(m, ())
    assert accepts(m, (5,))
    assert not accepts(m, (15,))
    assert accepts(m, (15, 15))
    assert equiv(complement(m), one_letter_machine(10, 20)) is True


def test_complement_rejects_nondeterministic():
    m = Sfa(INTERVAL_NAT, ("a", "b"), "a", ("b",), (
        ("a", Interval(0, 10), "b"),
        ("a", Interval(5, 20), "a"),
    ))
    with pytest.raises(ValueError):
        complement(m)


def test_determinize():
    m = Sfa(INTERVAL_NAT, ("a", "b", "c"), "a", ("c",), (
        ("a", Interval(0, 10), "b"),
        ("a", Interval(5, 20), "c"),
        ("b", TOP, "b"),
        ("c", TOP, "c"),
    ))
    det = determinize(m)
    flags = classify(det)
    assert flags.deterministic
    for w in ((3,), (7,), (12,), (3, 3), (7, 1)):
        assert accepts(det, w) == accepts(m, w)


def test_determinize_prop():
    p2 = prop_algebra(2)
    m = Sfa(p2, ("a", "b", "c"), "a", ("b", "c"), (
        ("a", Lit(0, True), "b"),
        ("a", Lit(1, True), "c"),
    ))
    det = determinize(m)
    assert classify(det).deterministic
    for v in p2.letters():
        assert accepts(det, (v,)) == accepts(m, (v,))


def test_minimize_collapses_equivalent_states():
    # b and c are indistinguishable
    m = Sfa(INTERVAL_NAT, ("a", "b", "c"), "a", ("b", "c"), (
        ("a", Interval(0, 50), "b"),
        ("a", Interval(50, INF), "c"),
        ("b", TOP, "b"),
        ("c", TOP, "c"),
    ))
    small = minimize(m, "neat")
    assert len(small.states) == 2
    assert equiv(small, m) is True


def test_minimize_idempotent_and_canonical():
    rng = random.Random(5)
    for _ in range(25):
        m = random_sfa(rng, max_states=5)
        assert minimize(m, "neat") == m
        variant = rename_and_rebracket(rng, m)
        assert minimize(variant, "neat") == m


def test_minimize_normalized_form():
    rng = random.Random(6)
    m = random_sfa(rng, max_states=4)
    norm = minimize(m, "normalized")
    assert classify(norm).normalized
    assert equiv(norm, m) is True


def test_is_empty():
    assert is_empty(Sfa(INTERVAL_NAT, ("a",), "a", (), (("a", TOP, "a"),)))
    assert not is_empty(one_letter_machine(0, 10))
    # accepting state unreachable through satisfiable predicates
    m = Sfa(INTERVAL_NAT, ("a", "b"), "a", ("b",), (
        ("a", Interval(5, 5), "b"),
    ))
    assert is_empty(m)


def test_includes_and_witness():
    small = one_letter_machine(10, 20)
    big = one_letter_machine(0, 100)
    assert includes(small, big, "subset") is True
    witness = includes(big, small, "subset")
    assert witness == (0,)
    assert accepts(big, witness) and not accepts(small, witness)


def test_equiv_witness_is_shortest():
    m1 = one_letter_machine(0, 100)
    m2 = complete_sfa(Sfa(INTERVAL_NAT, ("s", "t"), "s", ("t",), (
        ("s", Or(Interval(0, 100), Interval(300, 400)), "t"),
    )))
    witness = includes(m1, m2, "equiv")
    assert witness == (300,)


def test_ops_against_concrete_walk():
    rng = random.Random(11)
    pool = [100, 200, 300]
    for _ in range(20):
        m1 = random_sfa(rng, max_out=3, endpoint_pool=pool)
        m2 = random_sfa(rng, max_out=3, endpoint_pool=pool)
        inter = product(m1, m2)
        union = product(m1, m2, "union")
        comp = complement(m1)
        letters = [0, 100, 150, 200, 250, 300, INF]
        words = [()] + [(a,) for a in letters] \
            + [(a, b) for a in letters for b in letters]
        for w in words:
            a1, a2 = accepts(m1, w), accepts(m2, w)
            assert accepts(inter, w) == (a1 and a2)
            assert accepts(union, w) == (a1 or a2)
            assert accepts(comp, w) == (not a1)
