"""Finite-word algebra: examples and enumeration-oracle properties."""

import itertools
import random

import pytest

from rmckit import (
    Alphabet,
    FiniteAutomaton,
    InputError,
    accepts,
    boolean,
    complement,
    determinize,
    difference,
    enumerate_words,
    equivalent,
    includes,
    intersect,
    is_empty,
    minimize,
    pick_word,
    project,
    serialize_aut,
    sync_product,
    union,
    universal,
    word_automaton,
)
from rmckit.fixtures import build_fa, ring_alphabet, ring_initial

from oracles import language_upto, naive_accepts, random_nfa

NT = ring_alphabet()
AB = Alphabet.base(("a", "b"))


def nfa_last_a():
    # (a|b)*a
    return build_fa(AB, 2, [0], [1], [(0, "a", 0), (0, "b", 0), (0, "a", 1)])


def nfa_one_token():
    # N*TN*
    return build_fa(NT, 2, [0], [1], [(0, "N", 0), (0, "T", 1), (1, "N", 1)])


def test_accepts_token_ring_initial():
    assert accepts(ring_initial(), NT.word("TNN"))
    assert not accepts(ring_initial(), NT.word("NTN"))


def test_accepts_wrong_alphabet_symbol_is_error():
    with pytest.raises(InputError):
        accepts(ring_initial(), (5,))


def test_accepts_last_a():
    assert not accepts(nfa_last_a(), AB.word("ab"))
    assert accepts(nfa_last_a(), AB.word("ba"))


def test_determinize_is_deterministic_and_complete():
    d = determinize(nfa_last_a())
    assert d.is_deterministic and d.is_complete
    for w in itertools.product(range(2), repeat=4):
        assert accepts(d, w) == naive_accepts(nfa_last_a(), w)


def test_determinize_dfa_keeps_language():
    d = ring_initial()
    dd = determinize(d)
    assert dd.is_complete
    assert equivalent(d, dd)


def test_determinize_empty_language_single_sink():
    empty = FiniteAutomaton(AB, 1, frozenset({0}), frozenset(), frozenset())
    d = determinize(empty)
    assert d.n_states == 1 and not d.accepting and d.is_complete


def test_minimize_last_a_two_states():
    m = minimize(nfa_last_a())
    assert m.n_states == 2  # complete minimal DFA for (a|b)*a
    assert equivalent(m, nfa_last_a())


def test_minimize_canonical_for_equal_languages():
    # two syntactically different automata for N*TN*
    a = nfa_one_token()
    b = build_fa(
        NT, 4, [0], [2, 3],
        [(0, "N", 1), (1, "N", 1), (0, "T", 2), (1, "T", 2), (2, "N", 3), (3, "N", 3)],
    )
    assert equivalent(a, b)
    assert minimize(a) == minimize(b)
    assert serialize_aut(minimize(a)) == serialize_aut(minimize(b))


def test_minimize_fixpoint_and_empty():
    m = minimize(nfa_one_token())
    assert minimize(m) == m
    empty = FiniteAutomaton(NT, 3, frozenset({0}), frozenset(), frozenset())
    m0 = minimize(empty)
    assert m0.n_states == 1 and not m0.accepting and m0.is_complete


def test_boolean_intersect_at_length_one():
    tn = ring_initial()  # TN*
    nt = build_fa(NT, 2, [0], [1], [(0, "N", 0), (0, "T", 1)])  # N*T
    both = intersect(tn, nt)
    assert enumerate_words(both, 1) == [NT.word("T")]


def test_complement_involution_and_union_identity():
    a = nfa_one_token()
    assert equivalent(complement(complement(a)), a)
    empty = FiniteAutomaton(NT, 1, frozenset({0}), frozenset(), frozenset())
    assert equivalent(union(a, empty), a)


def test_boolean_dispatcher():
    a, b = nfa_one_token(), ring_initial()
    assert equivalent(boolean("union", a, b), union(a, b))
    assert equivalent(boolean("intersect", a, b), intersect(a, b))
    assert equivalent(boolean("difference", a, b), difference(a, b))
    assert equivalent(boolean("complement", a), complement(a))
    with pytest.raises(InputError):
        boolean("xor", a, b)


def test_sync_product_singletons():
    t = word_automaton(NT, NT.word("T"))
    n = word_automaton(NT, NT.word("N"))
    prod = sync_product([t, n])
    words = enumerate_words(prod, 1)
    assert words == [(prod.alphabet.index("T/N"),)]


def test_sync_product_enumeration():
    tn = ring_initial()  # TN*
    nstar = build_fa(NT, 1, [0], [0], [(0, "N", 0)])  # N*
    prod = sync_product([tn, nstar])
    words = enumerate_words(prod, 2)
    names = {tuple(prod.alphabet.name(s) for s in w) for w in words if len(w) == 2}
    assert names == {("T/N", "N/N")}


def test_sync_product_annihilator():
    empty = FiniteAutomaton(NT, 1, frozenset({0}), frozenset(), frozenset())
    assert is_empty(sync_product([ring_initial(), empty]))


def test_project_singleton():
    t = word_automaton(NT, NT.word("T"))
    n = word_automaton(NT, NT.word("N"))
    prod = sync_product([t, n])
    p = project(prod, 2)
    assert equivalent(minimize(p), minimize(t))


def test_project_token_move_pairs():
    # graph of the one-step token move at length 2: {(TN,NT), (NT,TN)}
    from rmckit.fixtures import ring_relation
    from rmckit.automata import exact_length

    rel2 = intersect(ring_relation().inner, exact_length(Alphabet.product(NT, NT), 2))
    outputs = project(rel2, 1)
    names = {tuple(NT.name(s) for s in w) for w in enumerate_words(outputs, 2)}
    assert names == {("N", "T"), ("T", "N")}


def test_project_empty():
    pair = Alphabet.product(NT, NT)
    empty = FiniteAutomaton(pair, 1, frozenset({0}), frozenset(), frozenset())
    assert is_empty(project(empty, 1))


def test_project_bad_index():
    with pytest.raises(InputError):
        project(ring_initial(), 1)  # arity 1
    pair = sync_product([ring_initial(), ring_initial()])
    with pytest.raises(InputError):
        project(pair, 3)


def test_decision_procedures():
    assert is_empty(complement(universal(NT)))
    assert includes(ring_initial(), nfa_one_token())  # TN* within N*TN*
    assert not includes(nfa_one_token(), ring_initial())
    rng = random.Random(7)
    for _ in range(10):
        x = random_nfa(rng, AB)
        assert equivalent(minimize(x), x)


def test_includes_matches_difference_emptiness():
    # the implementation contract: includes(a, b) iff L(a) minus L(b) empty
    rng = random.Random(8)
    for _ in range(25):
        a, b = random_nfa(rng, AB), random_nfa(rng, AB)
        assert includes(a, b) == is_empty(difference(a, b))


def test_determinize_matches_enumeration_on_random_nfas():
    rng = random.Random(1)
    for _ in range(60):
        a = random_nfa(rng, AB)
        d = determinize(a)
        m = minimize(a)
        expected = language_upto(a, 5)
        assert language_upto(d, 5) == expected
        assert language_upto(m, 5) == expected


def test_de_morgan_on_random_nfas():
    rng = random.Random(2)
    for _ in range(30):
        a = random_nfa(rng, AB)
        b = random_nfa(rng, AB)
        lhs = complement(union(a, b))
        rhs = intersect(complement(a), complement(b))
        assert equivalent(lhs, rhs)


def test_project_of_product_with_universal_recovers():
    rng = random.Random(3)
    for _ in range(20):
        a = random_nfa(rng, AB)
        prod = sync_product([a, universal(AB)])
        assert equivalent(project(prod, 2), a)


def test_minimize_bit_identical_on_random_equivalent_pairs():
    rng = random.Random(4)
    for _ in range(30):
        a = random_nfa(rng, AB)
        b = union(a, a)  # same language, different shape
        assert serialize_aut(minimize(a)) == serialize_aut(minimize(b))


def test_pick_word_shortest_then_lex():
    a = nfa_one_token()
    assert pick_word(a) == NT.word("T")
    empty = FiniteAutomaton(NT, 1, frozenset({0}), frozenset(), frozenset())
    assert pick_word(empty) is None
