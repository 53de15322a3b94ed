"""Global-system-property pipeline: augmentation and loop-detection emptiness."""

import random

import pytest

from rmckit import (
    HOLDS,
    UNKNOWN,
    VIOLATED,
    CopSet,
    IncompleteCopAutomaton,
    NotWeakDeterministic,
    build_augmented_finite,
    build_augmented_omega,
    check_emptiness_loop,
    cop_alphabet,
    cop_of,
    enumerate_words,
    negate_gsp,
    negated_gsp,
    reachable,
    replay_gsp_witness,
    slice_system,
    state_property,
    validate,
)
from rmckit.fixtures import (
    build_fa,
    cop_one_token,
    gsp_always_one_token_negated,
    ring_alphabet,
    token_ring,
    token_ring_dup_mutant,
)
from rmckit.omega import omega_universal
from rmckit.system import RegularSystem
from rmckit.transducer import FINITE, OMEGA, identity

from oracles import (
    gsp_violation_oracle,
    random_dfa_complete,
    random_sliced_system,
    random_weak_dba,
)

NT = ring_alphabet()


def one_token_prop():
    return state_property("one_token", cop_one_token())


def always_one_neg():
    return negated_gsp(gsp_always_one_token_negated(), 1)


def test_cop_of():
    cops = [one_token_prop()]
    assert cop_of(NT.word("NTN"), cops).members() == (0,)
    assert cop_of(NT.word("NTT"), cops).members() == ()
    assert cop_of(NT.word("NNN"), []).mask == 0


def test_negate_gsp_weak_flip():
    # gsp = always one token, as a weak DBA over the mask alphabet
    masks = cop_alphabet(1)
    gsp = build_fa(
        masks, 2, [0], [0],
        [(0, "m1", 0), (0, "m0", 1), (1, "m0", 1), (1, "m1", 1)],
        omega=True,
    )
    neg = negate_gsp(gsp, 1)
    # the flip accepts exactly the traces leaving m1 at some point
    from rmckit.omega import UltimatelyPeriodicWord, accepts_up_word

    assert accepts_up_word(neg.automaton, UltimatelyPeriodicWord((0,), (1,)))
    assert not accepts_up_word(neg.automaton, UltimatelyPeriodicWord((), (1,)))
    nondet = build_fa(masks, 2, [0, 1], [0], [(0, "m0", 0)], omega=True)
    with pytest.raises(NotWeakDeterministic):
        negate_gsp(nondet, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_token_ring_gsp_holds_per_slice(n):
    sl = slice_system(token_ring(), n)
    aug = build_augmented_finite(sl, always_one_neg(), [one_token_prop()])
    verdict = check_emptiness_loop(aug.msys, budget=40)
    assert verdict.status == HOLDS


def test_degenerate_property_tracks_all_executions():
    # A_neg accepting everything: augmented accepting executions are exactly
    # the executions of M, so the check is nonempty iff M has any execution
    masks = cop_alphabet(1)
    all_traces = build_fa(
        masks, 1, [0], [0], [(0, "m0", 0), (0, "m1", 0)], omega=True
    )
    sl = slice_system(token_ring(), 3)
    aug = build_augmented_finite(sl, negated_gsp(all_traces, 1), [one_token_prop()])
    verdict = check_emptiness_loop(aug.msys, budget=40)
    assert verdict.status == VIOLATED  # the ring always has infinite executions
    ok, why = replay_gsp_witness(aug, verdict.witness)
    assert ok, why


def test_empty_initial_gives_empty_augmented_initial():
    empty_init = build_fa(NT, 1, [0], [], [])
    m = RegularSystem(NT, empty_init, token_ring().relation, FINITE)
    aug = build_augmented_finite(m, always_one_neg(), [one_token_prop()])
    from rmckit.automata import is_empty

    assert is_empty(aug.msys.system.initial)
    assert check_emptiness_loop(aug.msys, budget=8).status == HOLDS


def test_dup_mutant_violated_with_replayable_lasso():
    sl = slice_system(token_ring_dup_mutant(), 3)
    aug = build_augmented_finite(sl, always_one_neg(), [one_token_prop()])
    verdict = check_emptiness_loop(aug.msys, budget=40)
    assert verdict.status == VIOLATED
    ok, why = replay_gsp_witness(aug, verdict.witness)
    assert ok, why
    # the projected lasso must reach a two-token word
    projected = [aug.sigma_word(w) for w in verdict.witness.words]
    assert any(sum(1 for s in w if s == NT.index("T")) >= 2 for w in projected)


def test_budget_exhaustion_reports_unknown():
    aug = build_augmented_finite(token_ring(), always_one_neg(), [one_token_prop()])
    verdict = check_emptiness_loop(aug.msys, budget=3)
    assert verdict.status == UNKNOWN


def test_incomplete_cop_rejected():
    partial = build_fa(NT, 1, [0], [0], [(0, "N", 0)])  # missing T moves
    with pytest.raises(IncompleteCopAutomaton):
        build_augmented_finite(
            slice_system(token_ring(), 2),
            always_one_neg(),
            [type(one_token_prop())("p", partial)],
        )


def test_augmented_words_keep_label_shape():
    # requirement: every reachable word is bot-labelled except the last letter
    sl = slice_system(token_ring(), 3)
    aug = build_augmented_finite(sl, always_one_neg(), [one_token_prop()])
    reach = reachable(aug.msys.system, budget=32)
    for w in enumerate_words(reach.automaton, 3):
        labels = aug.labels(w)
        assert all(q is None and m is None for q, m in labels[:-1])
        assert labels[-1][0] is not None and labels[-1][1] is not None


def test_loop_check_agrees_with_explicit_oracle_federated():
    rng = random.Random(1234)
    agreements = 0
    for _ in range(12):
        n = rng.randint(2, 3)
        system = random_sliced_system(rng, n)
        k = rng.randint(1, 2)
        cops = [
            state_property(f"c{i}", random_dfa_complete(rng, system.alphabet))
            for i in range(k)
        ]
        neg = negated_gsp(random_weak_dba(rng, cop_alphabet(k), max_states=3), k)
        aug = build_augmented_finite(system, neg, cops)
        verdict = check_emptiness_loop(aug.msys, budget=40)
        expected = gsp_violation_oracle(system, n, neg.automaton, cops)
        assert verdict.status == (VIOLATED if expected else HOLDS)
        if verdict.status == VIOLATED:
            ok, why = replay_gsp_witness(aug, verdict.witness)
            assert ok, why
        agreements += 1
    assert agreements == 12


# ---------------------------------------------------------------------------
# omega mode


def omega_identity_system():
    init = build_fa(NT, 1, [0], [0], [(0, "N", 0)], omega=True)
    return validate(RegularSystem(NT, init, identity(NT, OMEGA), OMEGA))


def test_omega_unfalsifiable_property_holds():
    cop_all = state_property("all", omega_universal(NT), "omega")
    aug = build_augmented_omega(omega_identity_system(), always_one_neg(), [cop_all])
    verdict = check_emptiness_loop(aug.msys, budget=12)
    assert verdict.status == HOLDS


def test_omega_nondeterministic_cop_rejected():
    from rmckit.gsp import StateProperty

    nd = build_fa(NT, 2, [0, 1], [1], [(0, "T", 1)], omega=True)
    with pytest.raises(IncompleteCopAutomaton):
        build_augmented_omega(omega_identity_system(), always_one_neg(), [StateProperty("nd", nd)])


def test_omega_violation_found_by_loop_check():
    # cop = "first letter is T"; initial word N^w violates always-cop
    cop_t = state_property(
        "starts_t",
        build_fa(
            NT, 3, [0], [1],
            [
                (0, "T", 1), (0, "N", 2), (1, "T", 1),
                (1, "N", 1), (2, "T", 2), (2, "N", 2),
            ],
            omega=True,
        ),
        "omega",
    )
    aug = build_augmented_omega(omega_identity_system(), always_one_neg(), [cop_t])
    verdict = check_emptiness_loop(aug.msys, budget=12)
    assert verdict.status == VIOLATED
    ok, why = replay_gsp_witness(aug, verdict.witness)
    assert ok, why


def test_copset_helpers():
    c = CopSet(0b101, 3)
    assert c.members() == (0, 2)
    assert c.contains(2) and not c.contains(1)


def test_cop_count_cap():
    from rmckit import AlphabetCapExceeded

    with pytest.raises(AlphabetCapExceeded):
        cop_alphabet(9)
