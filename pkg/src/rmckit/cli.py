"""Command-line verification pipelines.

Exit codes: 0 the property holds (on every requested slice), 1 violated
(a replayed witness is printed), 2 unknown (budget or approximation), 3
input error.  Slice checks run in parallel, capped by RMCKIT_THREADS;
output is ordered by slice.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import fixtures
from .errors import InputError, RmckitError
from .fileformat import LoadedSystem, load_system, parse_aut
from .gsp import (
    GspAugmentation,
    NegatedGsp,
    build_augmented_finite,
    build_augmented_omega,
    check_emptiness_loop,
    negated_gsp,
    replay_gsp_witness,
)
from .losp import LospAugmentation, build_augmented_losp, check_losp, replay_losp_witness
from .omega import OmegaAutomaton
from .simulation import check_emptiness_sim, sim_fixpoint
from .system import (
    HOLDS,
    UNKNOWN,
    VIOLATED,
    RegularSystem,
    Verdict,
    check_reachability_property,
    slice_system,
    thread_cap,
)
from .transducer import OMEGA, closure

SCHEMA = 1
_EXIT = {HOLDS: 0, VIOLATED: 1, UNKNOWN: 2}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (RmckitError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmckit",
        description="regular model checking of linear temporal properties",
    )
    sub = parser.add_subparsers(required=True)

    def common(p, engine=False):
        p.add_argument("--system", required=True, help="system file (.sys)")
        p.add_argument(
            "--property",
            default=None,
            help="property name declared in the system file, or an automaton file",
        )
        p.add_argument(
            "--slice",
            default="2..8",
            help="slice range LO..HI, a single length, or `none` (default 2..8)",
        )
        p.add_argument("--budget", type=int, default=64, help="fixpoint budget (default 64)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--threads", type=int, default=None, help="cap slice parallelism")
        if engine:
            p.add_argument("--engine", choices=("loop", "sim"), default="loop")

    p = sub.add_parser("check-reach", help="reachability property (bad-state avoidance)")
    common(p)
    p.set_defaults(handler=cmd_check_reach)

    p = sub.add_parser("check-gsp", help="global system property")
    common(p, engine=True)
    p.set_defaults(handler=cmd_check_gsp)

    p = sub.add_parser("check-losp", help="local-oriented system property")
    common(p)
    p.set_defaults(handler=cmd_check_losp)

    p = sub.add_parser("closure", help="iterative closure of the system relation")
    p.add_argument("--system", required=True)
    p.add_argument("--kind", choices=("star", "plus"), default="star")
    p.add_argument("--slice", default="none")
    p.add_argument("--budget", type=int, default=64)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_closure)

    p = sub.add_parser("sim", help="greatest-simulation fixpoint of the augmented system")
    common(p)
    p.set_defaults(handler=cmd_sim)

    p = sub.add_parser("gen-example", help="write a worked example bundle")
    p.add_argument("name", choices=fixtures.EXAMPLE_NAMES)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(handler=cmd_gen_example)
    return parser


def _parse_slice(text: str) -> tuple[int, int] | None:
    if text == "none":
        return None
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            return int(lo), int(hi)
        except ValueError:
            raise InputError(f"bad slice range {text!r}")
    try:
        n = int(text)
    except ValueError:
        raise InputError(f"bad slice range {text!r}")
    return n, n


def _property_block(loaded: LoadedSystem, kinds: tuple[str, ...], arg: str | None):
    if arg is not None and Path(arg).exists():
        return None  # caller parses the file
    for kind in kinds:
        try:
            return loaded.property_named(kind, arg)
        except InputError:
            continue
    raise InputError(
        f"no declared property of kind {kinds} " + (f"named {arg!r}" if arg else "")
    )


# ---------------------------------------------------------------------------
# reporting


def _run_slices(ns, fn, threads):
    """Ordered slice-parallel execution of row builders."""
    from concurrent.futures import ThreadPoolExecutor

    workers = threads or thread_cap()
    if workers <= 1 or len(ns) <= 1:
        return [fn(n) for n in ns]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {n: pool.submit(fn, n) for n in ns}
        return [futures[n].result() for n in ns]


def _report(args, command: str, rows: list[dict], overall: str) -> int:
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": command,
            "system": args.system,
            "slices": rows,
            "overall": overall,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for row in rows:
            label = "unsliced" if row["slice"] is None else f"slice {row['slice']}"
            extra = []
            for key in ("steps", "reach_steps", "closure_steps", "reason", "sim_exact"):
                if key in row and row[key] is not None:
                    extra.append(f"{key}={row[key]}")
            suffix = f" ({', '.join(extra)})" if extra else ""
            print(f"{label}: {row['status']}{suffix} [{row['time_ms']} ms]")
            if row.get("witness"):
                w = row["witness"]
                if w.get("loop_start") is not None:
                    print(f"  lasso, loop starts at index {w['loop_start']}:")
                else:
                    print("  path witness:")
                for i, word in enumerate(w["words"]):
                    print(f"    {i}: {' '.join(word)}")
        print(f"overall: {overall}")
    return _EXIT[overall]


def _row(n: int | None, verdict: Verdict, elapsed: float, words=None) -> dict:
    row = {
        "slice": n,
        "status": verdict.status,
        "time_ms": round(elapsed * 1000, 1),
    }
    for key in ("steps", "reach_steps", "closure_steps", "reason", "sim_exact", "converged"):
        if key in verdict.diagnostics:
            row[key] = verdict.diagnostics[key]
    if verdict.witness is not None:
        row["witness"] = {
            "loop_start": verdict.witness.loop_start,
            "words": words,
        }
    return row


def _timed(fn, *fn_args):
    start = time.perf_counter()
    out = fn(*fn_args)
    return out, time.perf_counter() - start


def _overall(rows: list[dict]) -> str:
    statuses = [r["status"] for r in rows]
    if any(s == VIOLATED for s in statuses):
        return VIOLATED
    if all(s == HOLDS for s in statuses):
        return HOLDS
    return UNKNOWN


# ---------------------------------------------------------------------------
# commands


def cmd_check_reach(args) -> int:
    loaded = load_system(args.system)
    block = _property_block(loaded, ("reach-bad",), args.property)
    bad = parse_aut(Path(args.property).read_text()) if block is None else block.automaton
    span = _parse_slice(args.slice)
    base = loaded.system

    def run(m: RegularSystem) -> Verdict:
        verdict = check_reachability_property(m, bad, args.budget)
        if verdict.status == VIOLATED:
            _assert_path_witness(m, bad, verdict)
        return verdict

    if span is None:
        verdict, dt = _timed(run, base)
        rows = [_row(None, verdict, dt, _plain_words(base, verdict))]
    else:

        def per_slice(n: int) -> dict:
            verdict, dt = _timed(run, slice_system(base, n))
            return _row(n, verdict, dt, _plain_words(base, verdict))

        rows = _run_slices(range(span[0], span[1] + 1), per_slice, args.threads)
    return _report(args, "check-reach", rows, _overall(rows))


def _assert_path_witness(m: RegularSystem, bad, verdict: Verdict) -> None:
    """Re-validate a path witness before it is printed."""
    from .automata import accepts
    from .transducer import accepts_pair

    words = verdict.witness.words
    ok = (
        bool(words)
        and accepts(m.initial, words[0])
        and accepts(bad, words[-1])
        and all(accepts_pair(m.relation, a, b) for a, b in zip(words, words[1:]))
    )
    if not ok:
        raise InputError("reachability witness failed replay (bug)")


def _plain_words(base: RegularSystem, verdict: Verdict):
    if verdict.witness is None:
        return None
    alphabet = base.alphabet
    out = []
    for w in verdict.witness.words:
        if hasattr(w, "prefix"):
            out.append(
                [alphabet.name(s) for s in w.prefix]
                + ["|"]
                + [alphabet.name(s) for s in w.period]
            )
        else:
            out.append([alphabet.name(s) for s in w])
    return out


def cmd_check_gsp(args) -> int:
    loaded = load_system(args.system)
    neg = _gsp_property(loaded, args)
    base = loaded.system
    cops = loaded.cops
    engine = getattr(args, "engine", "loop")

    def check(m: RegularSystem, n: int | None) -> tuple[Verdict, GspAugmentation]:
        if m.mode == OMEGA:
            aug = build_augmented_omega(m, neg, cops)
        else:
            aug = build_augmented_finite(m, neg, cops)
        if engine == "sim":
            sim = sim_fixpoint(aug.msys, cops, args.budget)
            verdict = check_emptiness_sim(aug.msys, sim, args.budget)
        else:
            verdict = check_emptiness_loop(aug.msys, args.budget)
        if verdict.status == VIOLATED:
            ok, why = replay_gsp_witness(aug, verdict.witness)
            if not ok:
                raise InputError(f"witness failed replay: {why}")
        return verdict, aug

    if base.mode == OMEGA or _parse_slice(args.slice) is None:
        (verdict, aug), dt = _timed(check, base, None)
        rows = [_row(None, verdict, dt, _aug_words(aug, verdict))]
    else:
        lo, hi = _parse_slice(args.slice)

        def per_slice(n: int) -> dict:
            (verdict, aug), dt = _timed(check, slice_system(base, n), n)
            return _row(n, verdict, dt, _aug_words(aug, verdict))

        rows = _run_slices(range(lo, hi + 1), per_slice, args.threads)
    return _report(args, "check-gsp", rows, _overall(rows))


def _gsp_property(loaded: LoadedSystem, args) -> NegatedGsp:
    block = _property_block(loaded, ("gsp-negated", "gsp"), args.property)
    if block is None:
        aut = parse_aut(Path(args.property).read_text())
        if not isinstance(aut, OmegaAutomaton):
            raise InputError("gsp property file must hold a Buchi automaton")
        return negated_gsp(aut, len(loaded.cops))
    if block.kind == "gsp-negated":
        return block.automaton
    return block.automaton  # `gsp` blocks were negated at load time


def _aug_words(aug, verdict: Verdict):
    if verdict.witness is None:
        return None
    base = aug.original.alphabet
    out = []
    for w in verdict.witness.words:
        if hasattr(w, "prefix"):
            pw = aug.sigma_up_word(w)
            out.append(
                [base.name(s) for s in pw.prefix] + ["|"] + [base.name(s) for s in pw.period]
            )
        else:
            out.append([base.name(s) for s in aug.sigma_word(w)])
    return out


def cmd_check_losp(args) -> int:
    loaded = load_system(args.system)
    block = _property_block(loaded, ("losp-negated",), args.property)
    if block is None:
        from .losp import losp_property

        aut = parse_aut(Path(args.property).read_text())
        lo_prop = losp_property(aut, len(loaded.leps))
    else:
        lo_prop = block.automaton
    base = loaded.system
    span = _parse_slice(args.slice)
    if span is None:
        raise InputError("check-losp needs a slice range (parametric verification)")
    lo, hi = span

    def run(m: RegularSystem):
        aug = build_augmented_losp(m, lo_prop, loaded.leps)
        verdict = check_losp(aug, args.budget)
        if verdict.status == VIOLATED:
            ok, why = replay_losp_witness(aug, verdict.witness)
            if not ok:
                raise InputError(f"witness failed replay: {why}")
        return verdict, aug

    def per_slice(n: int) -> dict:
        (verdict, aug), dt = _timed(run, slice_system(base, n))
        return _row(n, verdict, dt, _losp_words(aug, verdict))

    rows = _run_slices(range(lo, hi + 1), per_slice, args.threads)
    return _report(args, "check-losp", rows, _overall(rows))


def _losp_words(aug: LospAugmentation, verdict: Verdict):
    if verdict.witness is None:
        return None
    base = aug.original.alphabet
    return [
        [base.name(s) for s in aug.sigma_word(w)] for w in verdict.witness.words
    ]


def cmd_closure(args) -> int:
    loaded = load_system(args.system)
    span = _parse_slice(args.slice)
    rows = []
    systems: list[tuple[int | None, RegularSystem]]
    if span is None:
        systems = [(None, loaded.system)]
    else:
        systems = [(n, slice_system(loaded.system, n)) for n in range(span[0], span[1] + 1)]
    for n, m in systems:
        result, dt = _timed(closure, m.relation, args.kind, args.budget)
        status = HOLDS if result.converged else UNKNOWN
        rows.append(
            {
                "slice": n,
                "status": status,
                "converged": result.converged,
                "steps": result.steps_used,
                "states": result.relation.inner.n_states,
                "time_ms": round(dt * 1000, 1),
            }
        )
    overall = HOLDS if all(r["converged"] for r in rows) else UNKNOWN
    if args.format == "json":
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "command": "closure",
                    "system": args.system,
                    "slices": rows,
                    "overall": overall,
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for row in rows:
            label = "unsliced" if row["slice"] is None else f"slice {row['slice']}"
            print(
                f"{label}: converged={row['converged']} steps={row['steps']} "
                f"states={row['states']} [{row['time_ms']} ms]"
            )
        print(f"overall: {overall}")
    return _EXIT[overall]


def cmd_sim(args) -> int:
    loaded = load_system(args.system)
    neg = _gsp_property(loaded, args)
    base = loaded.system
    span = _parse_slice(args.slice)
    if span is None:
        raise InputError("sim needs a slice range (finite-index detection is per slice)")
    rows = []
    for n in range(span[0], span[1] + 1):
        def run(m: RegularSystem):
            aug = build_augmented_finite(m, neg, loaded.cops)
            return sim_fixpoint(aug.msys, loaded.cops, args.budget)

        sim, dt = _timed(run, slice_system(base, n))
        rows.append(
            {
                "slice": n,
                "status": HOLDS if sim.exact else UNKNOWN,
                "exact": sim.exact,
                "iterations": sim.iteration_index,
                "states": sim.relation.inner.n_states,
                "time_ms": round(dt * 1000, 1),
            }
        )
    overall = HOLDS if all(r["exact"] for r in rows) else UNKNOWN
    if args.format == "json":
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "command": "sim",
                    "system": args.system,
                    "slices": rows,
                    "overall": overall,
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for row in rows:
            print(
                f"slice {row['slice']}: exact={row['exact']} "
                f"iterations={row['iterations']} states={row['states']} "
                f"[{row['time_ms']} ms]"
            )
        print(f"overall: {overall}")
    return 0 if overall == HOLDS else 2


def cmd_gen_example(args) -> int:
    files = fixtures.gen_example(args.name, args.out)
    for f in files:
        print(f)
    return 0


if __name__ == "__main__":
    sys.exit(main())
