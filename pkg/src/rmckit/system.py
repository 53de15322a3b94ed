"""(Omega-)regular systems and reachability-style verification.

A regular system encodes a state-transition system: states are words over a
base alphabet, the initial set is an automaton and the transition relation a
structure-preserving transducer.  Parametric verification slices a finite
system to one word length per network instance; sliced systems have finitely
many reachable states, so the fixpoint computations below are exact on them.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .alphabet import Alphabet
from .automata import (
    FiniteAutomaton,
    accepts,
    exact_length,
    intersect,
    is_empty,
    minimize,
    pick_word,
    union,
    word_automaton,
)
from .errors import InputError, ModeMismatch, NonWeakResult, NotDeterministic, NotWeak
from .omega import (
    OmegaAutomaton,
    UltimatelyPeriodicWord,
    accepts_up_word,
    buchi_is_empty,
    minimize_weak_dba,
    omega_intersect,
    omega_is_empty,
    omega_union,
    to_weak_dba,
    up_word_automaton,
)
from .transducer import FINITE, OMEGA, Transducer, image, preimage

HOLDS = "holds"
VIOLATED = "violated"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class RegularSystem:
    """Triple (alphabet, initial-set automaton, relation transducer)."""

    alphabet: Alphabet
    initial: FiniteAutomaton
    relation: Transducer
    mode: str = FINITE


@dataclass(frozen=True)
class BuchiRegularSystem:
    """Regular system plus a Buchi acceptance-condition automaton."""

    system: RegularSystem
    acceptance: FiniteAutomaton


@dataclass(frozen=True)
class LassoWitness:
    """Execution fragment: words, with an optional loop closing to loop_start.

    `loop_start is None` marks a plain path witness (reachability); words are
    symbol-id tuples in finite mode and UltimatelyPeriodicWord in omega mode.
    """

    words: tuple
    loop_start: int | None
    slice_length: int | None = None


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: LassoWitness | None = None
    diagnostics: dict = field(default_factory=dict)

    @staticmethod
    def holds(**diag) -> "Verdict":
        return Verdict(HOLDS, None, diag)

    @staticmethod
    def violated(witness: LassoWitness, **diag) -> "Verdict":
        return Verdict(VIOLATED, witness, diag)

    @staticmethod
    def unknown(reason: str, **diag) -> "Verdict":
        diag["reason"] = reason
        return Verdict(UNKNOWN, None, diag)


def validate(m: RegularSystem) -> RegularSystem:
    """Check system invariants; flags are recomputed, never trusted."""
    if m.mode not in (FINITE, OMEGA):
        raise ModeMismatch(f"unknown mode {m.mode!r}")
    is_omega = m.mode == OMEGA
    if isinstance(m.initial, OmegaAutomaton) != is_omega:
        raise ModeMismatch("initial automaton does not match the system mode")
    if m.relation.mode != m.mode:
        raise ModeMismatch("relation transducer does not match the system mode")
    if m.initial.alphabet != m.alphabet or m.relation.base != m.alphabet:
        raise ModeMismatch("system components are over different alphabets")
    if not m.initial.is_deterministic:
        raise NotDeterministic("initial-set automaton must be deterministic")
    if is_omega:
        if not m.initial.is_weak:
            raise NotWeak("initial-set automaton must be weak in omega mode")
        rel = m.relation.inner
        if not rel.is_deterministic:
            raise NotDeterministic("relation must be deterministic in omega mode")
        if not rel.is_weak:
            raise NotWeak("relation must be weak in omega mode")
    return m


def slice_system(m: RegularSystem, n: int) -> RegularSystem:
    """Restrict a finite-mode system to words of exactly length n."""
    if m.mode != FINITE:
        raise ModeMismatch("slicing is defined for finite-mode systems only")
    if n < 1:
        raise InputError("slice length must be at least 1")
    initial = minimize(intersect(m.initial, exact_length(m.alphabet, n)))
    rel_inner = minimize(
        intersect(m.relation.inner, exact_length(m.relation.inner.alphabet, n)),
        completion=False,
    )
    return RegularSystem(m.alphabet, initial, Transducer(rel_inner), FINITE)


# ---------------------------------------------------------------------------
# reachability


def _canon_set(a: FiniteAutomaton) -> FiniteAutomaton:
    if isinstance(a, OmegaAutomaton):
        return minimize_weak_dba(to_weak_dba(a))
    return minimize(a, completion=False)


def _union_set(a: FiniteAutomaton, b: FiniteAutomaton) -> FiniteAutomaton:
    if isinstance(a, OmegaAutomaton):
        return omega_union(a, b)
    return union(a, b)


def _intersect_set(a: FiniteAutomaton, b: FiniteAutomaton) -> FiniteAutomaton:
    if isinstance(a, OmegaAutomaton):
        return omega_intersect(a, b)
    return intersect(a, b)


def _empty_set(a: FiniteAutomaton) -> bool:
    if isinstance(a, OmegaAutomaton):
        return omega_is_empty(a)
    return is_empty(a)


@dataclass(frozen=True)
class ReachResult:
    automaton: FiniteAutomaton
    converged: bool
    steps: int


def _reach_layers(
    m: RegularSystem, budget: int
) -> tuple[list[FiniteAutomaton], FiniteAutomaton, bool, int]:
    """Per-step image layers plus the canonical cumulative union."""
    layer = _canon_set(m.initial)
    layers = [layer]
    cumulative = layer
    for step in range(1, budget + 1):
        layer = _canon_set(image(m.relation, layer))
        layers.append(layer)
        nxt = _canon_set(_union_set(cumulative, layer))
        if nxt == cumulative:
            return layers, cumulative, True, step
        cumulative = nxt
    return layers, cumulative, False, budget


def reachable(m: RegularSystem, budget: int = 64) -> ReachResult:
    """Iterated-image fixpoint for T*(initial) with exact convergence."""
    _, cumulative, converged, steps = _reach_layers(m, budget)
    return ReachResult(cumulative, converged, steps)


def _pick(a: FiniteAutomaton):
    if isinstance(a, OmegaAutomaton):
        empty, w = buchi_is_empty(a)
        return None if empty else w
    return pick_word(a)


def _singleton(alphabet: Alphabet, w) -> FiniteAutomaton:
    if isinstance(w, UltimatelyPeriodicWord):
        return up_word_automaton(alphabet, w)
    return word_automaton(alphabet, w)


def _backchain(
    m: RegularSystem, layers: Sequence[FiniteAutomaton], k: int, target
) -> list:
    """Concrete path w_0 .. w_k with w_k = target and w_i in layer i."""
    words = [target]
    for i in range(k - 1, -1, -1):
        back = _intersect_set(
            layers[i], preimage(m.relation, _singleton(m.alphabet, words[0]))
        )
        w = _pick(back)
        if w is None:
            raise InputError("witness backchain broke (bug)")
        words.insert(0, w)
    return words


def check_reachability_property(
    m: RegularSystem, bad: FiniteAutomaton, budget: int = 64
) -> Verdict:
    """Holds iff no reachable word is bad; `bad` encodes the unsafe words."""
    if bad.alphabet != m.alphabet:
        raise ModeMismatch("bad-set automaton is over a different alphabet")
    try:
        layer = _canon_set(m.initial)
        layers = [layer]
        cumulative = layer
        for step in range(budget + 1):
            hit = _intersect_set(layers[-1], bad)
            if not _empty_set(hit):
                target = _pick(hit)
                words = _backchain(m, layers, len(layers) - 1, target)
                return Verdict.violated(
                    LassoWitness(tuple(words), None), steps=step
                )
            if step == budget:
                break
            layer = _canon_set(image(m.relation, layers[-1]))
            layers.append(layer)
            nxt = _canon_set(_union_set(cumulative, layer))
            if nxt == cumulative:
                return Verdict.holds(steps=step + 1)
            cumulative = nxt
    except NonWeakResult as e:
        return Verdict.unknown(f"weak representability lost: {e}")
    return Verdict.unknown("budget exhausted before convergence", steps=budget)


@dataclass(frozen=True)
class LocalityEvidence:
    locally_finite: bool
    reason: str


def locality_evidence(m: RegularSystem) -> LocalityEvidence:
    """Length preservation implies every execution stays in one finite slice."""
    if m.mode == FINITE:
        return LocalityEvidence(
            True,
            "structure-preserving finite-word transducer: executions are "
            "confined to words of one length",
        )
    return LocalityEvidence(False, "no syntactic criterion applies in omega mode")


# ---------------------------------------------------------------------------
# parametric driver


def thread_cap() -> int:
    raw = os.environ.get("RMCKIT_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n >= 1 else min(4, os.cpu_count() or 1)


def verify_parametric(
    m: RegularSystem,
    check: Callable[[RegularSystem, int], Verdict],
    lo: int = 2,
    hi: int = 8,
    threads: int | None = None,
) -> tuple[dict[int, Verdict], Verdict]:
    """Run a per-slice check over a length range; conjunction of verdicts.

    Slice verifications are independent and run on a small thread pool
    (capped by RMCKIT_THREADS); results are reported in slice order.
    """
    if lo < 1 or hi < lo:
        raise InputError("bad slice range")
    slices = list(range(lo, hi + 1))
    workers = threads or thread_cap()
    results: dict[int, Verdict] = {}
    if workers <= 1 or len(slices) == 1:
        for n in slices:
            results[n] = check(slice_system(m, n), n)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {n: pool.submit(check, slice_system(m, n), n) for n in slices}
            for n in slices:
                results[n] = futures[n].result()
    return results, combine_conjunction(results)


def combine_conjunction(results: dict[int, Verdict]) -> Verdict:
    for n in sorted(results):
        if results[n].status == VIOLATED:
            return Verdict(VIOLATED, results[n].witness, {"slice": n})
    if all(v.status == HOLDS for v in results.values()):
        return Verdict.holds(slices=sorted(results))
    unknowns = [n for n in sorted(results) if results[n].status == UNKNOWN]
    return Verdict.unknown("some slices unknown", slices=unknowns)


# ---------------------------------------------------------------------------
# witness replay


def replay_lasso(msys: BuchiRegularSystem, witness: LassoWitness) -> tuple[bool, str]:
    """Check a lasso against initialness, the step relation, loop closure and
    the acceptance condition; witnesses must replay before being reported."""
    from .transducer import accepts_pair

    m = msys.system
    words = witness.words
    if not words:
        return False, "empty witness"
    if witness.loop_start is None or not (0 <= witness.loop_start < len(words)):
        return False, "missing or out-of-range loop start"
    if m.mode == OMEGA:
        return _replay_lasso_omega(msys, witness)
    if not accepts(m.initial, words[0]):
        return False, "first word is not initial"
    ring = list(words) + [words[witness.loop_start]]
    for i in range(len(ring) - 1):
        if not accepts_pair(m.relation, ring[i], ring[i + 1]):
            return False, f"step {i} is not in the transition relation"
    loop = words[witness.loop_start:]
    if not any(accepts(msys.acceptance, w) for w in loop):
        return False, "no loop word satisfies the acceptance condition"
    return True, "ok"


def _replay_lasso_omega(
    msys: BuchiRegularSystem, witness: LassoWitness
) -> tuple[bool, str]:
    from .transducer import pair_up_word

    m = msys.system
    words = witness.words
    if not accepts_up_word(m.initial, words[0]):
        return False, "first word is not initial"
    ring = list(words) + [words[witness.loop_start]]
    for i in range(len(ring) - 1):
        pw = pair_up_word(m.alphabet, ring[i], ring[i + 1])
        if not accepts_up_word(m.relation.inner, pw):
            return False, f"step {i} is not in the transition relation"
    loop = words[witness.loop_start:]
    if not any(accepts_up_word(msys.acceptance, w) for w in loop):
        return False, "no loop word satisfies the acceptance condition"
    return True, "ok"
