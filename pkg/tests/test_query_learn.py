import pytest

from symfa import (
    And, BOT, Lit, Not, Or, TOP, accepts, basic_sfa, pred_equiv,
)
from symfa.algebra import prop_algebra
from symfa.query_learn import (
    Oracle, PredicateTeacher, adversarial_prop_teacher,
    algebra_learner_from_sfa_learner, enumerating_predicate_learner,
    sfa_teacher,
)


def test_basic_sfa_shape_and_language():
    p2 = prop_algebra(2)
    psi = And(Lit(0, True), Lit(1, True))
    m = basic_sfa(p2, psi)
    assert len(m.states) == 3
    assert len(m.transitions) == 4
    assert accepts(m, ("11",))
    assert not accepts(m, ("10",))
    assert not accepts(m, ())
    assert not accepts(m, ("11", "11"))


def test_sfa_teacher_is_honest():
    p2 = prop_algebra(2)
    target = basic_sfa(p2, Lit(0, True))
    teacher = sfa_teacher(target)
    assert teacher.mq(("10",)) == 1
    assert teacher.mq(("01",)) == 0
    assert teacher.mq(()) == 0
    assert teacher.eq(basic_sfa(p2, Lit(0, True))) is True
    w, b = teacher.eq(basic_sfa(p2, TOP))
    assert accepts(target, w) == bool(b)
    assert teacher.mq_count == 3 and teacher.eq_count == 2


def test_sfa_teacher_rejects_incomplete_target():
    p2 = prop_algebra(2)
    from symfa import Sfa
    with pytest.raises(ValueError):
        sfa_teacher(Sfa(p2, ("a",), "a", (), ()))


def test_enumerating_learner_against_honest_teacher():
    p2 = prop_algebra(2)
    for target in (And(Lit(0, True), Lit(1, True)), TOP, BOT,
                   Or(Lit(0, False), Lit(1, True))):
        teacher = sfa_teacher(basic_sfa(p2, target))
        learned = enumerating_predicate_learner(2, teacher)
        assert pred_equiv(p2, learned, target)


def test_enumerating_learner_query_count():
    p2 = prop_algebra(2)
    teacher = sfa_teacher(basic_sfa(p2, Lit(1, True)))
    enumerating_predicate_learner(2, teacher)
    # one membership query per valuation, then one successful equivalence
    assert teacher.mq_count == 4
    assert teacher.eq_count == 1


@pytest.mark.parametrize("k", [2, 3, 4])
def test_adversary_forces_lower_bound(k):
    teacher = adversarial_prop_teacher(k)
    learned = enumerating_predicate_learner(k, teacher)
    issued = teacher.query_count - 1  # the final yes answer is free
    assert issued >= 2 ** k - 1
    # the answers the adversary committed to are consistent with the result
    alg = teacher.algebra
    from symfa.algebra import contains
    for v in teacher.s_plus:
        assert contains(alg, learned, v)
    for v in teacher.s_minus:
        assert not contains(alg, learned, v)


def test_adversary_never_contradicts_itself():
    teacher = adversarial_prop_teacher(3)
    enumerating_predicate_learner(3, teacher)
    assert not set(teacher.s_plus) & set(teacher.s_minus)
    assert len(teacher.s_plus) + len(teacher.s_minus) \
        == len(teacher.algebra.letters())


def test_adversary_rejects_bad_k():
    with pytest.raises(ValueError):
        adversarial_prop_teacher(0)


def test_predicate_teacher():
    p2 = prop_algebra(2)
    t = PredicateTeacher(p2, Lit(0, True))
    assert t.mq("11") == 1
    assert t.mq("01") == 0
    assert t.eq(Lit(0, True)) is True
    d, b = t.eq(BOT)
    assert d in ("10", "11") and b == 1


def test_wrapper_end_to_end():
    p2 = prop_algebra(2)
    for target in (And(Lit(0, True), Lit(1, True)), TOP, Lit(1, False)):
        oracle = PredicateTeacher(p2, target)
        learned = algebra_learner_from_sfa_learner(
            enumerating_predicate_learner, oracle, p2)
        assert pred_equiv(p2, learned, target)


def test_wrapper_screens_out_bad_hypotheses():
    # a hypothesis accepting the empty word or longer words is rejected by
    # the wrapper itself, without consuming predicate-level queries
    p2 = prop_algebra(2)
    seen = []

    def probing_learner(k, oracle):
        from symfa import Sfa
        everything = Sfa(p2, ("a",), "a", ("a",), (("a", TOP, "a"),))
        seen.append(oracle.eq(everything))  # accepts the empty word
        nothing = Sfa(p2, ("a",), "a", (), (("a", TOP, "a"),))
        seen.append(oracle.eq(nothing))
        return BOT

    oracle = PredicateTeacher(p2, BOT)
    out = algebra_learner_from_sfa_learner(probing_learner, oracle, p2)
    assert pred_equiv(p2, out, BOT)
    assert seen[0] == ((), 0)
    assert seen[1] is True
    assert oracle.mq_count == 0 and oracle.eq_count == 1


def test_wrapper_counterexamples_never_repeat():
    p2 = prop_algebra(2)
    seen = []

    def probing_learner(k, oracle):
        from symfa import Sfa
        everything = Sfa(p2, ("a", "b"), "a", ("b",), (
            ("a", TOP, "b"), ("b", TOP, "b"),
        ))  # accepts every nonempty word
        for _ in range(3):
            seen.append(oracle.eq(everything))
        return BOT

    with pytest.raises(RuntimeError):
        algebra_learner_from_sfa_learner(probing_learner,
                                         PredicateTeacher(p2, BOT), p2,
                                         budget=2)
    words = [w for w, _ in seen]
    assert len(words) == len(set(words))
    assert all(len(w) == 2 for w in words)


def test_oracle_counts():
    class Yes(Oracle):
        def _mq(self, w):
            return 1

        def _eq(self, hypothesis):
            return True

    o = Yes()
    o.mq(())
    o.mq((1,))
    o.eq(None)
    assert o.query_count == 3
