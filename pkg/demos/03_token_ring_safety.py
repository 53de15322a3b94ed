"""The token ring as a regular system: slicing, reachability, safety.

A parametric network is encoded with one letter per process; the transition
relation is a structure-preserving transducer, so every execution stays at
one word length and per-slice verification is exact.  The unrestricted
closure does not converge under naive iteration, and the toolkit says so
instead of guessing.
"""

from rmckit import (
    check_reachability_property,
    closure,
    enumerate_words,
    locality_evidence,
    reachable,
    slice_system,
)
from rmckit.fixtures import bad_two_tokens, ring_alphabet, token_ring

NT = ring_alphabet()
ring = token_ring()
print("locality:", locality_evidence(ring))

for n in range(2, 7):
    sl = slice_system(ring, n)
    result = reachable(sl, budget=32)
    words = enumerate_words(result.automaton, n)
    print(f"slice {n}: {len(words)} reachable states, converged={result.converged}:",
          ", ".join(NT.word_name(w) for w in words))

print("\nmutual exclusion (no two tokens) per slice:")
for n in range(2, 9):
    verdict = check_reachability_property(slice_system(ring, n), bad_two_tokens(), budget=32)
    print(f"  slice {n}: {verdict.status}")

print("\nunsliced closure with budget 8 (the honest answer is 'not yet'):")
result = closure(ring.relation, "star", budget=8)
print("  converged:", result.converged, " steps used:", result.steps_used)
