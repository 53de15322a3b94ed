"""Symbolic simulation fixpoint vs the explicit oracle, and sim-based emptiness."""

import pytest

from rmckit import (
    Alphabet,
    FiniteAutomaton,
    InputError,
    Transducer,
    UNKNOWN,
    VIOLATED,
    accepts_pair,
    brute_force_simulation,
    build_augmented_finite,
    check_emptiness_loop,
    check_emptiness_sim,
    enumerate_words,
    negated_gsp,
    reachable,
    relation_includes,
    replay_gsp_witness,
    sim_fixpoint,
    sim_init,
    sim_step,
    slice_system,
    state_property,
    validate_candidate,
)
from rmckit.fixtures import (
    cop_one_token,
    gsp_always_one_token_negated,
    ring_alphabet,
    token_ring,
    token_ring_dup_mutant,
)
from rmckit.gsp import cop_of
from rmckit.system import BuchiRegularSystem, RegularSystem
from rmckit.transducer import FINITE, identity

NT = ring_alphabet()


def ring_aug(n: int, system=None):
    cop = state_property("one_token", cop_one_token())
    neg = negated_gsp(gsp_always_one_token_negated(), 1)
    sl = slice_system(system or token_ring(), n)
    return build_augmented_finite(sl, neg, [cop]), cop


def toy_system(pairs, symbols=("x", "y")):
    base = Alphabet.base(symbols)
    pair = Alphabet.product(base, base)
    trans = frozenset((0, pair.index(p), 0) for p in pairs)
    t = Transducer(FiniteAutomaton(pair, 1, frozenset({0}), frozenset({0}), trans))
    init = FiniteAutomaton(
        base, 1, frozenset({0}), frozenset({0}),
        frozenset((0, s, 0) for s in range(base.size)),
    )
    return BuchiRegularSystem(RegularSystem(base, init, t, FINITE), init), base


def test_sim_init_membership():
    aug, cop = ring_aug(3)
    s0 = sim_init(aug.msys, [cop])
    # lift plain words into labelled augmented words via the initial automaton
    words = enumerate_words(aug.msys.system.initial, 3)
    by_sigma = {aug.sigma_word(w): w for w in words}
    w_tnn = by_sigma[NT.word("TNN")]
    assert accepts_pair(s0.relation, w_tnn, w_tnn)


def test_sim_init_cop_compatibility_and_length():
    msys, base = toy_system(["x/x"])
    cop = state_property("is_x", FiniteAutomaton(
        base, 2, frozenset({0}), frozenset({1}),
        frozenset({(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 0)}),
    ))
    s0 = sim_init(msys, [cop])
    wx, wy = base.word("x"), base.word("y")
    assert accepts_pair(s0.relation, wx, wx)
    assert not accepts_pair(s0.relation, wx, wy)  # cop sets differ
    # pairs of different length are unrepresentable over the pair alphabet
    with pytest.raises(InputError):
        accepts_pair(s0.relation, wx, base.word("xx"))


def test_sim_step_vacuous_when_relation_empty():
    msys, base = toy_system([])
    s0 = sim_init(msys, [])
    s1 = sim_step(s0, msys.system.relation)
    assert s1.relation == s0.relation


def test_sim_step_removes_unmatched_pair():
    msys, base = toy_system(["x/x"])  # x steps, y is stuck
    s0 = sim_init(msys, [])
    wx, wy = base.word("x"), base.word("y")
    assert accepts_pair(s0.relation, wx, wy)
    s1 = sim_step(s0, msys.system.relation)
    assert not accepts_pair(s1.relation, wx, wy)  # y cannot match x's move
    assert accepts_pair(s1.relation, wy, wx)  # vacuous for stuck y
    assert accepts_pair(s1.relation, wx, wx)
    s2 = sim_step(s1, msys.system.relation)
    assert s2.relation == s1.relation  # fixpoint reached


def chain_system():
    return toy_system(["s0/s1", "s1/s2", "s2/s3"], symbols=("s0", "s1", "s2", "s3"))


def test_sim_fixpoint_budget():
    msys, _ = chain_system()
    assert not sim_fixpoint(msys, [], budget=1).exact
    full = sim_fixpoint(msys, [], budget=8)
    assert full.exact and full.iteration_index == 4


def test_sim_fixpoint_identity_relation():
    msys, base = toy_system(["x/x", "y/y"])
    # make the relation the full identity
    msys = BuchiRegularSystem(
        RegularSystem(base, msys.system.initial, identity(base), FINITE),
        msys.acceptance,
    )
    s = sim_fixpoint(msys, [], budget=8)
    assert s.exact and s.iteration_index == 1
    assert s.relation == sim_init(msys, []).relation


def test_sim_fixpoint_exact_on_sliced_ring():
    aug, cop = ring_aug(2)
    s = sim_fixpoint(aug.msys, [cop], budget=30)
    assert s.exact


def test_validate_candidate():
    msys, _ = chain_system()
    exact = sim_fixpoint(msys, [], budget=8)
    assert validate_candidate(exact.relation, msys, []).validated
    base = msys.system.alphabet
    assert validate_candidate(identity(base), msys, []).validated
    s0 = sim_init(msys, [])
    assert not validate_candidate(s0.relation, msys, []).validated


def test_sim_restricted_to_enumerated_states_equals_brute_force():
    for n in (2, 3):
        aug, cop = ring_aug(n)
        msys = aug.msys
        sim = sim_fixpoint(msys, [cop], budget=30)
        assert sim.exact
        words = enumerate_words(reachable(msys.system, budget=32).automaton, n)
        idx = {w: i for i, w in enumerate(words)}
        edges = [
            (idx[a], idx[b])
            for a in words
            for b in words
            if accepts_pair(msys.system.relation, a, b)
        ]
        labels = [cop_of(aug.sigma_word(w), [cop]).mask for w in words]
        expected = brute_force_simulation(len(words), edges, labels)
        got = {
            (i, j)
            for i in range(len(words))
            for j in range(len(words))
            if accepts_pair(sim.relation, words[i], words[j])
        }
        assert got == expected


def test_sim_iterates_shrink_monotonically():
    aug, cop = ring_aug(2)
    s = sim_init(aug.msys, [cop])
    for _ in range(3):
        nxt = sim_step(s, aug.msys.system.relation)
        assert relation_includes(s.relation, nxt.relation)
        s = nxt


def test_check_emptiness_sim_agrees_with_loop():
    for system, n in ((token_ring(), 2), (token_ring(), 3), (token_ring_dup_mutant(), 2)):
        aug, cop = ring_aug(n, system)
        sim = sim_fixpoint(aug.msys, [cop], budget=30)
        v_sim = check_emptiness_sim(aug.msys, sim, budget=32)
        v_loop = check_emptiness_loop(aug.msys, budget=32)
        assert v_sim.status == v_loop.status
        if v_sim.status == VIOLATED:
            ok, why = replay_gsp_witness(aug, v_sim.witness)
            assert ok, why


def test_check_emptiness_sim_underapproximation_unknown():
    # validated strict under-approximation + empty formula: only Unknown
    aug, cop = ring_aug(2)
    ident = validate_candidate(identity(aug.msys.system.alphabet), aug.msys, [cop])
    assert ident.validated
    verdict = check_emptiness_sim(aug.msys, ident, budget=32)
    assert verdict.status == UNKNOWN


def test_check_emptiness_sim_rejects_inexact_iterate():
    msys, _ = chain_system()
    partial = sim_fixpoint(msys, [], budget=1)
    with pytest.raises(InputError):
        check_emptiness_sim(msys, partial, budget=8)


def test_brute_force_simulation_basics():
    # deterministic 3-state chain: simulation contains language-equal pairs
    rel = brute_force_simulation(3, [(0, 1), (1, 2)], ["a", "a", "a"])
    assert (2, 0) in rel and (2, 1) in rel  # stuck state simulated by all
    assert (0, 1) not in rel  # 1 dies one step earlier than 0
    assert all((q, q) in rel for q in range(3))
    empty = brute_force_simulation(2, [], ["a", "b"])
    assert empty == {(0, 0), (1, 1)}
    with pytest.raises(InputError):
        brute_force_simulation(1000, [], ["a"] * 1000)
