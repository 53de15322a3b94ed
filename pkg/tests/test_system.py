"""Regular systems: validation, slicing, reachability, parametric driver."""

import pytest

from rmckit import (
    Alphabet,
    HOLDS,
    UNKNOWN,
    VIOLATED,
    ModeMismatch,
    NotDeterministic,
    NotWeak,
    RegularSystem,
    check_reachability_property,
    enumerate_words,
    includes,
    locality_evidence,
    minimize,
    reachable,
    slice_system,
    universal,
    validate,
    verify_parametric,
)
from rmckit.fixtures import (
    bad_two_tokens,
    build_fa,
    ring_alphabet,
    ring_initial,
    ring_relation,
    token_ring,
)
from rmckit.transducer import FINITE, OMEGA, identity

from oracles import naive_accepts, word_graph

NT = ring_alphabet()


def test_validate_token_ring():
    m = validate(token_ring())
    assert m.mode == FINITE


def test_validate_rejects_wrong_alphabet_relation():
    other = Alphabet.base(("X", "Y"))
    rel = identity(other)
    with pytest.raises(ModeMismatch):
        validate(RegularSystem(NT, ring_initial(), rel, FINITE))


def test_validate_rejects_nondeterministic_initial():
    nd = build_fa(NT, 2, [0, 1], [1], [(0, "T", 1)])
    with pytest.raises(NotDeterministic):
        validate(RegularSystem(NT, nd, ring_relation(), FINITE))


def test_validate_omega_needs_weak_initial():
    inf_t = build_fa(
        NT, 2, [0], [1],
        [(0, "N", 0), (0, "T", 1), (1, "N", 0), (1, "T", 1)],
        omega=True,
    )
    with pytest.raises(NotWeak):
        validate(RegularSystem(NT, inf_t, identity(NT, OMEGA), OMEGA))


def test_slice_initial_and_relation():
    sl = slice_system(token_ring(), 3)
    assert enumerate_words(sl.initial, 3) == [NT.word("TNN")]
    sl1 = slice_system(token_ring(), 1)
    from rmckit.automata import is_empty

    assert is_empty(sl1.relation.inner)  # both branches need length >= 2


def test_slice_idempotent():
    sl = slice_system(token_ring(), 4)
    again = slice_system(sl, 4)
    assert sl.initial == again.initial
    assert sl.relation.inner == again.relation.inner


def test_slice_rejects_omega_and_bad_length():
    with pytest.raises(ModeMismatch):
        omega_sys = RegularSystem(
            NT,
            build_fa(NT, 1, [0], [0], [(0, "N", 0)], omega=True),
            identity(NT, OMEGA),
            OMEGA,
        )
        slice_system(omega_sys, 2)
    with pytest.raises(Exception):
        slice_system(token_ring(), 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_reachable_matches_explicit_bfs(n):
    sl = slice_system(token_ring(), n)
    result = reachable(sl, budget=32)
    assert result.converged
    words = set(enumerate_words(result.automaton, n))
    # independent oracle: explicit BFS over all words of length n
    _, initial, edges = word_graph(sl, n)
    seen = set(initial)
    frontier = list(initial)
    while frontier:
        w = frontier.pop()
        for v in edges[w]:
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    assert words == seen
    assert len(words) == n  # one word per token position


def test_reachable_empty_initial():
    empty = build_fa(NT, 1, [0], [], [])
    m = RegularSystem(NT, empty, ring_relation(), FINITE)
    result = reachable(m, budget=4)
    assert result.converged
    from rmckit.automata import is_empty

    assert is_empty(result.automaton)


@pytest.mark.parametrize("n", range(2, 9))
def test_mutual_exclusion_holds_per_slice(n):
    sl = slice_system(token_ring(), n)
    verdict = check_reachability_property(sl, bad_two_tokens(), budget=32)
    assert verdict.status == HOLDS


def test_reachability_violated_at_step_zero():
    # mutated system whose initial set is TN*TN*
    bad_init = build_fa(
        NT, 3, [0], [2],
        [(0, "T", 1), (1, "N", 1), (1, "T", 2), (2, "N", 2)],
    )
    m = RegularSystem(NT, bad_init, ring_relation(), FINITE)
    verdict = check_reachability_property(m, bad_two_tokens(), budget=8)
    assert verdict.status == VIOLATED
    assert verdict.diagnostics["steps"] == 0
    w = verdict.witness
    assert w.loop_start is None and len(w.words) == 1
    assert naive_accepts(bad_init, w.words[0])
    assert naive_accepts(bad_two_tokens(), w.words[0])


def test_reachability_witness_replays_through_relation():
    # force a multi-step violation: start from TN..., bad = token at last position
    bad_last = build_fa(NT, 2, [0], [1], [(0, "N", 0), (0, "T", 1)])  # N*T
    sl = slice_system(token_ring(), 4)
    verdict = check_reachability_property(sl, bad_last, budget=16)
    assert verdict.status == VIOLATED
    words = verdict.witness.words
    assert naive_accepts(sl.initial, words[0])
    from rmckit.transducer import accepts_pair

    for a, b in zip(words, words[1:]):
        assert accepts_pair(sl.relation, a, b)
    assert naive_accepts(bad_last, words[-1])


def test_reachability_unknown_on_budget():
    verdict = check_reachability_property(token_ring(), bad_two_tokens(), budget=3)
    assert verdict.status == UNKNOWN


def test_locality_evidence():
    assert locality_evidence(token_ring()).locally_finite
    omega_sys = RegularSystem(
        NT,
        build_fa(NT, 1, [0], [0], [(0, "N", 0)], omega=True),
        identity(NT, OMEGA),
        OMEGA,
    )
    assert not locality_evidence(omega_sys).locally_finite


def test_sliced_reach_included_in_converging_unsliced_reach():
    # with a universal initial set the unsliced fixpoint converges in one step
    m = RegularSystem(NT, minimize(universal(NT)), ring_relation(), FINITE)
    full = reachable(m, budget=4)
    assert full.converged
    sl_reach = reachable(slice_system(m, 3), budget=8)
    assert includes(sl_reach.automaton, full.automaton)


def test_verify_parametric_conjunction():
    results, overall = verify_parametric(
        token_ring(),
        lambda m, n: check_reachability_property(m, bad_two_tokens(), budget=32),
        lo=2,
        hi=5,
    )
    assert set(results) == {2, 3, 4, 5}
    assert overall.status == HOLDS
    assert all(v.status == HOLDS for v in results.values())
