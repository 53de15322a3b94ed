"""Text file formats for automata, transducers and systems.

Automaton files are line-oriented UTF-8 with LF endings and `#` comments:

    kind: dfa                # nfa | dfa | buchi | weak-dba |
    alphabet: N T            #   transducer | omega-transducer
    states: 2
    initial: 0
    accepting: 1
    trans:
    0 T 1
    1 N 1                    # transducer letters are written in/out

Symbol names match [A-Za-z0-9_]+; transducer letters are written `a/b`.
Serialization is canonical (fixed key order, sorted state sets and
transitions), so minimized automata have byte-stable golden forms and
parse/serialize round-trips are exact.

System files reference automaton files (paths relative to the system file)
and declare state properties, local execution properties and property
blocks:

    alphabet: N T
    mode: finite
    initial: initial.aut
    relation: relation.aut
    cop: one_token cop_one_token.aut
    lep: liveness lep_liveness.aut lep_liveness_neg.aut
    property: reach-bad two_tokens bad_two_tokens.aut
    property: gsp-negated always_one gsp_neg.aut
    property: losp-negated all_live losp_neg.aut
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .alphabet import Alphabet
from .automata import FiniteAutomaton
from .errors import InputError, ParseError
from .gsp import StateProperty, negate_gsp, negated_gsp, state_property
from .losp import LocalExecutionProperty, local_execution_property, losp_property
from .omega import OmegaAutomaton
from .system import RegularSystem, validate
from .transducer import FINITE, OMEGA, Transducer

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")
KINDS = ("nfa", "dfa", "buchi", "weak-dba", "transducer", "omega-transducer")


def _strip(line: str) -> str:
    if "#" in line:
        line = line[: line.index("#")]
    return line.strip()


def parse_aut(text: str):
    """Parse an automaton/transducer file; strict about keys and symbols."""
    kind: str | None = None
    names: list[str] | None = None
    n_states: int | None = None
    initial: list[int] = []
    accepting: list[int] = []
    triples: list[tuple[int, str, int, int]] = []
    in_trans = False
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if in_trans:
            fields = line.split()
            if len(fields) != 3:
                raise ParseError("transition needs `src symbol dst`", lineno)
            try:
                src, dst = int(fields[0]), int(fields[2])
            except ValueError:
                raise ParseError("transition endpoints must be state numbers", lineno)
            triples.append((src, fields[1], dst, lineno))
            continue
        if ":" not in line:
            raise ParseError("expected `key: value`", lineno)
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key in seen:
            raise ParseError(f"duplicate key {key!r}", lineno)
        seen.add(key)
        if key == "kind":
            if value not in KINDS:
                raise ParseError(f"unknown kind {value!r}", lineno)
            kind = value
        elif key == "alphabet":
            names = value.split()
            if not names:
                raise ParseError("empty alphabet", lineno)
            for n in names:
                if not _NAME.match(n):
                    raise ParseError(f"bad symbol name {n!r}", lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate symbol names", lineno)
        elif key == "states":
            try:
                n_states = int(value)
            except ValueError:
                raise ParseError("states must be a number", lineno)
        elif key == "initial":
            initial = _state_list(value, lineno)
        elif key == "accepting":
            accepting = _state_list(value, lineno)
        elif key == "trans":
            if value:
                raise ParseError("transitions start on the following lines", lineno)
            in_trans = True
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if kind is None:
        raise ParseError("missing kind")
    if names is None:
        raise ParseError("missing alphabet")
    if n_states is None:
        raise ParseError("missing states count")
    base = Alphabet.base(tuple(names))
    is_trans = kind in ("transducer", "omega-transducer")
    alphabet = Alphabet.product(base, base) if is_trans else base
    transitions = set()
    for src, symname, dst, lineno in triples:
        if is_trans:
            if "/" not in symname:
                raise ParseError(
                    f"transducer letter {symname!r} needs the `in/out` form", lineno
                )
        elif "/" in symname:
            raise ParseError(f"plain automaton letter {symname!r} has arity 2", lineno)
        try:
            sym = alphabet.index(symname)
        except InputError as e:
            raise ParseError(str(e), lineno)
        if not (0 <= src < n_states and 0 <= dst < n_states):
            raise ParseError(f"transition references undeclared state", lineno)
        transitions.add((src, sym, dst))
    for q in initial + accepting:
        if not (0 <= q < n_states):
            raise ParseError(f"state {q} out of range")
    is_omega = kind in ("buchi", "weak-dba", "omega-transducer")
    cls = OmegaAutomaton if is_omega else FiniteAutomaton
    aut = cls(alphabet, n_states, frozenset(initial), frozenset(accepting), frozenset(transitions))
    if kind == "dfa" and not aut.is_deterministic:
        raise ParseError("kind dfa but the automaton is nondeterministic")
    if kind == "weak-dba":
        if not aut.is_deterministic:
            raise ParseError("kind weak-dba but the automaton is nondeterministic")
        if not aut.is_weak:
            raise ParseError("kind weak-dba but the automaton is not weak")
    if is_trans:
        return Transducer(aut)
    return aut


def _state_list(value: str, lineno: int) -> list[int]:
    out = []
    for field in value.split():
        try:
            out.append(int(field))
        except ValueError:
            raise ParseError(f"bad state number {field!r}", lineno)
    return out


def _kind_of(value) -> str:
    if isinstance(value, Transducer):
        return "omega-transducer" if value.mode == OMEGA else "transducer"
    if isinstance(value, OmegaAutomaton):
        return "weak-dba" if (value.is_deterministic and value.is_weak) else "buchi"
    return "dfa" if value.is_deterministic else "nfa"


def serialize_aut(value) -> str:
    """Canonical text form; inverse of parse_aut up to comments."""
    kind = _kind_of(value)
    aut = value.inner if isinstance(value, Transducer) else value
    if isinstance(value, Transducer):
        base = value.base
        if base.arity != 1:
            raise InputError("only transducers over a plain base alphabet serialize")
    else:
        if aut.alphabet.arity != 1:
            raise InputError("only plain-alphabet automata serialize")
        base = aut.alphabet
    for n in base.components[0]:
        if not _NAME.match(n):
            raise InputError(f"symbol name {n!r} is not serializable")
    lines = [
        f"kind: {kind}",
        f"alphabet: {' '.join(base.components[0])}",
        f"states: {aut.n_states}",
        f"initial: {' '.join(str(q) for q in sorted(aut.initial))}",
        f"accepting: {' '.join(str(q) for q in sorted(aut.accepting))}",
        "trans:",
    ]
    named = sorted(
        (src, aut.alphabet.name(sym), dst) for src, sym, dst in aut.transitions
    )
    lines.extend(f"{src} {name} {dst}" for src, name, dst in named)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# system files


@dataclass(frozen=True)
class PropertyBlock:
    kind: str  # reach-bad | gsp-negated | gsp | losp-negated
    name: str
    automaton: object


@dataclass(frozen=True)
class LoadedSystem:
    system: RegularSystem
    cops: tuple[StateProperty, ...]
    leps: tuple[LocalExecutionProperty, ...]
    properties: tuple[PropertyBlock, ...]

    def property_named(self, kind: str, name: str | None) -> PropertyBlock:
        matches = [p for p in self.properties if p.kind == kind]
        if name is not None:
            matches = [p for p in matches if p.name == name]
        if not matches:
            raise InputError(
                f"no {kind} property" + (f" named {name!r}" if name else "") + " declared"
            )
        return matches[0]


PROPERTY_KINDS = ("reach-bad", "gsp-negated", "gsp", "losp-negated")


def parse_system_file(text: str, directory: Path):
    """Raw key lines of a system file, with paths resolved."""
    entries: list[tuple[str, list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected `key: value`", lineno)
        key, _, value = line.partition(":")
        entries.append((key.strip(), value.split(), lineno))
    return entries


def load_system(path: str | Path) -> LoadedSystem:
    path = Path(path)
    if not path.exists():
        raise InputError(f"system file {str(path)!r} not found")
    directory = path.parent
    entries = parse_system_file(path.read_text(), directory)

    def read_aut(name: str, lineno: int):
        target = directory / name
        if not target.exists():
            raise ParseError(f"referenced file {name!r} not found", lineno)
        return parse_aut(target.read_text())

    alphabet: Alphabet | None = None
    mode = FINITE
    initial = relation = None
    cops: list[StateProperty] = []
    lep_entries: list[tuple[str, object, object]] = []
    prop_entries: list[tuple[str, str, object]] = []
    seen_single: set[str] = set()
    for key, fields, lineno in entries:
        if key in ("alphabet", "mode", "initial", "relation"):
            if key in seen_single:
                raise ParseError(f"duplicate key {key!r}", lineno)
            seen_single.add(key)
        if key == "alphabet":
            alphabet = Alphabet.base(tuple(fields))
        elif key == "mode":
            if fields != ["finite"] and fields != ["omega"]:
                raise ParseError("mode must be finite or omega", lineno)
            mode = fields[0]
        elif key == "initial":
            if len(fields) != 1:
                raise ParseError("initial takes one file", lineno)
            initial = read_aut(fields[0], lineno)
        elif key == "relation":
            if len(fields) != 1:
                raise ParseError("relation takes one file", lineno)
            relation = read_aut(fields[0], lineno)
        elif key == "cop":
            if len(fields) != 2:
                raise ParseError("cop takes `name file`", lineno)
            cops.append((fields[0], read_aut(fields[1], lineno), lineno))
        elif key == "lep":
            if len(fields) not in (2, 3):
                raise ParseError("lep takes `name file [complement-file]`", lineno)
            comp = read_aut(fields[2], lineno) if len(fields) == 3 else None
            lep_entries.append((fields[0], read_aut(fields[1], lineno), comp, lineno))
        elif key == "property":
            if len(fields) != 3 or fields[0] not in PROPERTY_KINDS:
                raise ParseError(
                    f"property takes `kind name file` with kind in {PROPERTY_KINDS}", lineno
                )
            prop_entries.append((fields[0], fields[1], read_aut(fields[2], lineno), lineno))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)

    if alphabet is None or initial is None or relation is None:
        raise ParseError("system file needs alphabet, initial and relation")
    if not isinstance(relation, Transducer):
        raise ParseError("relation file must hold a transducer")
    system = validate(RegularSystem(alphabet, initial, relation, mode))

    cop_list = tuple(
        state_property(name, aut, mode) for name, aut, _ln in cops
    )
    lep_list = tuple(
        local_execution_property(name, aut, comp)
        for name, aut, comp, _ln in lep_entries
    )

    blocks: list[PropertyBlock] = []
    for kind, name, aut, lineno in prop_entries:
        try:
            blocks.append(PropertyBlock(kind, name, _typed_property(kind, aut, cop_list, lep_list)))
        except InputError as e:
            raise ParseError(f"property {name!r}: {e}", lineno)
    return LoadedSystem(system, cop_list, lep_list, tuple(blocks))


def _typed_property(kind: str, aut, cops, leps):
    if kind == "reach-bad":
        if isinstance(aut, (Transducer, OmegaAutomaton)):
            raise InputError("reach-bad property must be a finite-word automaton")
        return aut
    if kind == "gsp-negated":
        if not isinstance(aut, OmegaAutomaton):
            raise InputError("gsp-negated property must be a Buchi automaton")
        return negated_gsp(aut, len(cops))
    if kind == "gsp":
        if not isinstance(aut, OmegaAutomaton):
            raise InputError("gsp property must be a Buchi automaton")
        return negate_gsp(aut, len(cops))
    if kind == "losp-negated":
        if isinstance(aut, (Transducer, OmegaAutomaton)):
            raise InputError("losp-negated property must be a finite-word automaton")
        return losp_property(aut, len(leps))
    raise InputError(f"unknown property kind {kind!r}")
