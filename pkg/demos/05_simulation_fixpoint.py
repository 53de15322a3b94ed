"""Greatest simulation, computed symbolically as a transducer fixpoint.

When configurations grow unboundedly, an accepting execution may never
repeat a state, so cycle detection needs a coarser notion: a state that
*simulates* an earlier one.  The initial relation pairs equal-length words
with equal property labels; each refinement removes pairs with an unmatched
move.  On sliced systems the fixpoint is exact and matches the brute-force
simulation on the enumerated state space.
"""

from rmckit import (
    accepts_pair,
    brute_force_simulation,
    build_augmented_finite,
    check_emptiness_loop,
    check_emptiness_sim,
    enumerate_words,
    negated_gsp,
    reachable,
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
    token_ring,
    token_ring_dup_mutant,
)
from rmckit.gsp import cop_of
from rmckit.transducer import identity

one_token = state_property("one_token", cop_one_token())
neg = negated_gsp(gsp_always_one_token_negated(), 1)

aug = build_augmented_finite(slice_system(token_ring(), 2), neg, [one_token])
msys = aug.msys

s = sim_init(msys, [one_token])
print("Sim_0:", s.relation.inner.n_states, "transducer states")
s1 = sim_step(s, msys.system.relation)
print("Sim_1:", s1.relation.inner.n_states, "states (refined)")

sim = sim_fixpoint(msys, [one_token], budget=30)
print("fixpoint after", sim.iteration_index, "iterations, exact =", sim.exact)

# agreement with the explicit greatest simulation on enumerated states
words = enumerate_words(reachable(msys.system, budget=32).automaton, 2)
idx = {w: i for i, w in enumerate(words)}
edges = [(idx[a], idx[b]) for a in words for b in words
         if accepts_pair(msys.system.relation, a, b)]
labels = [cop_of(aug.sigma_word(w), [one_token]).mask for w in words]
explicit = brute_force_simulation(len(words), edges, labels)
symbolic = {(i, j) for i in range(len(words)) for j in range(len(words))
            if accepts_pair(sim.relation, words[i], words[j])}
print("explicit == symbolic on", len(words), "states:", explicit == symbolic)

# a validated under-approximation is sound for refutation only
candidate = validate_candidate(identity(msys.system.alphabet), msys, [one_token])
print("identity candidate validated:", candidate.validated)
print("under-approx verdict:", check_emptiness_sim(msys, candidate, budget=32).status)

# exact fixpoints decide both ways and agree with loop detection
print("\nexact-simulation verdicts (ring / duplicating mutant):")
for system in (token_ring(), token_ring_dup_mutant()):
    aug = build_augmented_finite(slice_system(system, 2), neg, [one_token])
    sim = sim_fixpoint(aug.msys, [one_token], budget=30)
    v_sim = check_emptiness_sim(aug.msys, sim, budget=32)
    v_loop = check_emptiness_loop(aug.msys, budget=32)
    print(f"  sim={v_sim.status}  loop={v_loop.status}")
