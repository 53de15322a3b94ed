"""Text formats: round trips, strictness, location-reported errors."""

import pytest

from rmckit import ParseError, parse_aut, serialize_aut
from rmckit.fixtures import (
    bad_two_tokens,
    cop_one_token,
    gsp_always_one_token_negated,
    lep_liveness,
    ring_initial,
    ring_relation,
)

ALL_FIXTURES = [
    ring_initial(),
    ring_relation(),
    cop_one_token(),
    gsp_always_one_token_negated(),
    bad_two_tokens(),
    lep_liveness(),
]


@pytest.mark.parametrize("value", ALL_FIXTURES, ids=lambda v: type(v).__name__ + str(id(v) % 97))
def test_round_trip_structural_identity(value):
    text = serialize_aut(value)
    again = parse_aut(text)
    assert again == value
    assert serialize_aut(again) == text


def test_serialize_is_canonical_fixpoint():
    text = serialize_aut(ring_relation())
    assert serialize_aut(parse_aut(text)) == text
    assert text.endswith("\n") and "\r" not in text


def test_parse_error_reports_line():
    bad = "kind: dfa\nalphabet: N T\nstates: 2\ninitial: 0\naccepting: 1\ntrans:\n0 T 5\n"
    with pytest.raises(ParseError) as err:
        parse_aut(bad)
    assert "line 7" in str(err.value)


def test_unknown_key_rejected():
    with pytest.raises(ParseError) as err:
        parse_aut("kind: dfa\ncolour: blue\n")
    assert "colour" in str(err.value)


def test_transducer_symbol_needs_slash():
    bad = (
        "kind: transducer\nalphabet: N T\nstates: 1\ninitial: 0\naccepting: 0\n"
        "trans:\n0 N 0\n"
    )
    with pytest.raises(ParseError) as err:
        parse_aut(bad)
    assert "in/out" in str(err.value)


def test_plain_automaton_rejects_pair_symbol():
    bad = "kind: nfa\nalphabet: N T\nstates: 1\ninitial: 0\naccepting: 0\ntrans:\n0 N/T 0\n"
    with pytest.raises(ParseError):
        parse_aut(bad)


def test_kind_flags_verified_not_trusted():
    nondet = (
        "kind: dfa\nalphabet: N T\nstates: 2\ninitial: 0 1\naccepting: 1\ntrans:\n"
    )
    with pytest.raises(ParseError):
        parse_aut(nondet)
    not_weak = (
        "kind: weak-dba\nalphabet: N T\nstates: 2\ninitial: 0\naccepting: 1\ntrans:\n"
        "0 N 0\n0 T 1\n1 N 0\n1 T 1\n"
    )
    with pytest.raises(ParseError):
        parse_aut(not_weak)


def test_comments_and_blank_lines_ignored():
    text = (
        "# header\nkind: dfa  # inline\n\nalphabet: N T\nstates: 2\n"
        "initial: 0\naccepting: 1\ntrans:\n0 T 1  # move\n"
    )
    aut = parse_aut(text)
    assert aut.n_states == 2 and aut.is_deterministic


def test_bad_symbol_name_rejected():
    with pytest.raises(ParseError):
        parse_aut("kind: dfa\nalphabet: N T$\nstates: 1\ninitial: 0\naccepting:\ntrans:\n")


def test_omega_transducer_round_trip():
    from rmckit.fixtures import ring_alphabet
    from rmckit.transducer import OMEGA, identity

    t = identity(ring_alphabet(), OMEGA)
    text = serialize_aut(t)
    assert "kind: omega-transducer" in text
    assert parse_aut(text) == t


def test_load_omega_system(tmp_path):
    from rmckit import load_system, serialize_aut
    from rmckit.fixtures import build_fa, ring_alphabet
    from rmckit.transducer import OMEGA, identity

    init = build_fa(ring_alphabet(), 1, [0], [0], [(0, "N", 0)], omega=True)
    (tmp_path / "init.aut").write_text(serialize_aut(init))
    (tmp_path / "rel.aut").write_text(serialize_aut(identity(ring_alphabet(), OMEGA)))
    (tmp_path / "sys.sys").write_text(
        "alphabet: N T\nmode: omega\ninitial: init.aut\nrelation: rel.aut\n"
    )
    loaded = load_system(tmp_path / "sys.sys")
    assert loaded.system.mode == "omega"
    assert loaded.system.initial.is_weak
