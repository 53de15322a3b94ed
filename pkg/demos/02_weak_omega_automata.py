"""Omega-word automata: weakness, cheap complementation, determinization.

Weak Buchi automata (every strongly connected component homogeneous in
acceptance) are the workhorse for omega-encoded state sets: deterministic
weak automata complement by flipping acceptance and admit a canonical
minimal form.  The breakpoint determinization keeps us inside the class
whenever the language allows it, and fails loudly when it does not.
"""

from rmckit import (
    NonWeakResult,
    UltimatelyPeriodicWord,
    accepts_up_word,
    buchi_is_empty,
    classify,
    complement_weak_dba,
    determinize_weak,
    minimize_weak_dba,
    sample_lassos,
)
from rmckit.fixtures import build_fa, ring_alphabet

NT = ring_alphabet()

# "eventually T" is weak; "infinitely many T" is not
ev_t = build_fa(
    NT, 2, [0], [1],
    [(0, "N", 0), (0, "T", 1), (1, "N", 1), (1, "T", 1)], omega=True,
)
inf_t = build_fa(
    NT, 2, [0], [1],
    [(0, "N", 0), (0, "T", 1), (1, "N", 0), (1, "T", 1)], omega=True,
)
print("eventually T   :", classify(ev_t))
print("infinitely many:", classify(inf_t))

# weak deterministic: complement = acceptance flip
always_n = complement_weak_dba(ev_t)
n_forever = UltimatelyPeriodicWord((), NT.word("N"))
print("\ncomplement accepts N^w:", accepts_up_word(always_n, n_forever))
for w in sample_lassos(NT, 50, seed=1):
    assert accepts_up_word(always_n, w) != accepts_up_word(ev_t, w)
print("flip-complement verified on 50 sampled lassos")

# nondeterministic weak automata determinize via the breakpoint construction
nd = build_fa(
    NT, 2, [0], [1],
    [(0, "N", 0), (0, "T", 0), (0, "T", 1), (1, "N", 1), (1, "T", 1)], omega=True,
)
det = determinize_weak(nd)
print("\nbreakpoint determinization:", classify(det), det.n_states, "states")
print("canonical minimal form   :", minimize_weak_dba(det).n_states, "states")

# "finitely many T" has no deterministic Buchi automaton at all, so the
# pipeline reports the loss of weakness instead of guessing
fin_t = build_fa(
    NT, 2, [0], [1],
    [(0, "N", 0), (0, "T", 0), (0, "N", 1), (1, "N", 1)], omega=True,
)
try:
    determinize_weak(fin_t)
except NonWeakResult as e:
    print("\nfinitely-many-T:", e)

# Buchi emptiness returns a lasso witness
empty, witness = buchi_is_empty(inf_t)
print("\ninf-many-T emptiness:", empty, "witness:", witness)
assert accepts_up_word(inf_t, witness)
