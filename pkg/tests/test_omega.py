"""Omega-word algebra: classification, weak-DBA operations, emptiness."""

import random

import pytest

from rmckit import (
    NonWeakResult,
    NotWeakDeterministic,
    InputError,
    UltimatelyPeriodicWord,
    accepts_up_word,
    buchi_is_empty,
    classify,
    complement_weak_dba,
    determinize_weak,
    minimize_weak_dba,
    omega_boolean,
    omega_equivalent,
    omega_intersect,
    omega_project,
    omega_sync_product,
    omega_union,
    sample_lassos,
)
from rmckit.fixtures import build_fa, ring_alphabet
from rmckit.omega import omega_empty_automaton, omega_universal

from oracles import lasso_accepts_deterministic, random_weak_dba

NT = ring_alphabet()


def inf_many_t():
    return build_fa(
        NT, 2, [0], [1],
        [(0, "N", 0), (0, "T", 1), (1, "N", 0), (1, "T", 1)],
        omega=True,
    )


def eventually_t():
    return build_fa(
        NT, 2, [0], [1],
        [(0, "N", 0), (0, "T", 1), (1, "N", 1), (1, "T", 1)],
        omega=True,
    )


def eventually_t_nondet():
    return build_fa(
        NT, 2, [0], [1],
        [(0, "N", 0), (0, "T", 0), (0, "T", 1), (1, "N", 1), (1, "T", 1)],
        omega=True,
    )


def finitely_many_t():
    # weak NBA guessing the last T; the language has no deterministic form
    return build_fa(
        NT, 2, [0], [1],
        [(0, "N", 0), (0, "T", 0), (0, "N", 1), (1, "N", 1)],
        omega=True,
    )


def lasso(prefix: str, period: str) -> UltimatelyPeriodicWord:
    return UltimatelyPeriodicWord(NT.word(prefix), NT.word(period))


def test_classify_homogeneous_accepting_scc():
    a = build_fa(NT, 1, [0], [0], [(0, "N", 0), (0, "T", 0)], omega=True)
    assert classify(a) == {"weak": True, "inherently_weak": True, "deterministic": True}


def test_classify_mixed_scc_not_inherently_weak():
    # one SCC holding an accepting cycle and a rejecting self-loop
    flags = classify(inf_many_t())
    assert not flags["weak"] and not flags["inherently_weak"] and flags["deterministic"]


def test_classify_acyclic_plus_sinks_weak():
    a = build_fa(
        NT, 3, [0], [1],
        [(0, "N", 1), (0, "T", 2), (1, "N", 1), (1, "T", 1), (2, "N", 2), (2, "T", 2)],
        omega=True,
    )
    assert classify(a)["weak"]


def test_accepts_up_word():
    a = inf_many_t()
    assert accepts_up_word(a, lasso("N", "T"))
    assert not accepts_up_word(a, lasso("T", "N"))
    with pytest.raises(InputError):
        accepts_up_word(a, UltimatelyPeriodicWord((), (9,)))


def test_complement_weak_dba_involution_and_language():
    a = eventually_t()
    c = complement_weak_dba(a)  # always N
    assert accepts_up_word(c, lasso("", "N"))
    assert not accepts_up_word(c, lasso("", "NT"))
    for w in sample_lassos(NT, 50, seed=5):
        assert accepts_up_word(c, w) == (not accepts_up_word(a, w))
        assert accepts_up_word(complement_weak_dba(c), w) == accepts_up_word(a, w)


def test_complement_weak_dba_rejects_nondeterministic():
    with pytest.raises(NotWeakDeterministic):
        complement_weak_dba(eventually_t_nondet())


def test_determinize_weak_idempotent_language():
    a = eventually_t()
    d = determinize_weak(a)
    assert d.is_deterministic and d.is_weak and d.is_complete
    for w in sample_lassos(NT, 50, seed=6):
        assert accepts_up_word(d, w) == accepts_up_word(a, w)


def test_determinize_weak_breakpoint_vs_lasso_oracle():
    a = eventually_t_nondet()
    d = determinize_weak(a)
    assert d.is_deterministic and d.is_weak
    for w in sample_lassos(NT, 50, seed=7):
        assert lasso_accepts_deterministic(d, w) == accepts_up_word(a, w)


def test_determinize_weak_non_weak_result():
    # "finitely many T" admits no deterministic Buchi automaton at all, so
    # the determinization cannot stay (inherently) weak
    with pytest.raises(NonWeakResult):
        determinize_weak(finitely_many_t())


def test_minimize_weak_dba_canonical():
    v1 = eventually_t()
    v2 = build_fa(
        NT, 4, [0], [2, 3],
        [
            (0, "N", 1), (1, "N", 0), (0, "T", 2), (1, "T", 3),
            (2, "N", 3), (3, "N", 2), (2, "T", 2), (3, "T", 3),
        ],
        omega=True,
    )
    m1, m2 = minimize_weak_dba(v1), minimize_weak_dba(v2)
    assert m1 == m2
    assert classify(m1)["weak"]


def test_minimize_weak_dba_fixpoint_and_empty():
    m = minimize_weak_dba(eventually_t())
    assert minimize_weak_dba(m) == m
    empty = build_fa(NT, 2, [0], [], [(0, "N", 1), (1, "N", 0)], omega=True)
    m0 = minimize_weak_dba(empty)
    assert m0.n_states == 1 and not m0.accepting


def test_omega_intersection_two_buchi():
    inf_n = build_fa(
        NT, 2, [0], [1],
        [(0, "T", 0), (0, "N", 1), (1, "T", 0), (1, "N", 1)],
        omega=True,
    )
    both = omega_intersect(inf_many_t(), inf_n)
    assert accepts_up_word(both, lasso("", "TN"))
    assert not accepts_up_word(both, lasso("T", "N"))
    assert not accepts_up_word(both, lasso("N", "T"))


def test_omega_union_identity_on_lassos():
    a = inf_many_t()
    u = omega_union(a, omega_empty_automaton(NT))
    for w in sample_lassos(NT, 40, seed=10):
        assert accepts_up_word(u, w) == accepts_up_word(a, w)


def test_omega_project_product_recovers():
    a = inf_many_t()
    prod = omega_sync_product([a, omega_universal(NT)])
    back = omega_project(prod, 2)
    for w in sample_lassos(NT, 40, seed=9):
        assert accepts_up_word(back, w) == accepts_up_word(a, w)


def test_omega_boolean_complement_restriction():
    with pytest.raises(NotWeakDeterministic):
        omega_boolean("complement", inf_many_t())
    c = omega_boolean("complement", eventually_t())
    assert accepts_up_word(c, lasso("", "N"))
    diff = omega_boolean("difference", eventually_t(), eventually_t())
    assert buchi_is_empty(diff)[0]


def test_buchi_is_empty_cases():
    unreachable = build_fa(
        NT, 2, [0], [1], [(0, "N", 0), (0, "T", 0), (1, "N", 1)], omega=True
    )
    assert buchi_is_empty(unreachable)[0]
    empty, w = buchi_is_empty(inf_many_t())
    assert not empty
    assert NT.index("T") in w.period
    assert accepts_up_word(inf_many_t(), w)
    no_acc = build_fa(NT, 1, [0], [], [(0, "N", 0)], omega=True)
    assert buchi_is_empty(no_acc)[0]


def test_random_weak_dba_complement_against_lasso_oracle():
    rng = random.Random(11)
    for _ in range(25):
        a = random_weak_dba(rng, NT)
        assert a.is_weak and a.is_deterministic and a.is_complete
        c = complement_weak_dba(a)
        for w in sample_lassos(NT, 20, seed=rng.randrange(10**6)):
            assert lasso_accepts_deterministic(a, w) != lasso_accepts_deterministic(c, w)
            assert accepts_up_word(a, w) == lasso_accepts_deterministic(a, w)


def test_minimize_weak_dba_random_roundtrip():
    rng = random.Random(12)
    for _ in range(15):
        a = random_weak_dba(rng, NT)
        m = minimize_weak_dba(a)
        assert classify(m)["weak"] and m.is_deterministic
        assert omega_equivalent(a, m)
        assert minimize_weak_dba(m) == m


def test_omega_equivalent_exact():
    assert omega_equivalent(eventually_t(), eventually_t_nondet())
    assert not omega_equivalent(eventually_t(), omega_empty_automaton(NT))
