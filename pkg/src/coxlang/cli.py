"""Command-line surface. All runs are deterministic given file and flags.

Exit codes: 0 clean, 1 an asserted invariant failed (equivalence mismatch,
5K bound violation, missing residue witness), 2 usage or parse problems,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import automaton as fsa
from .core import (DEFAULT_BALL_CAP, CoxeterSystem, INF, parse_system)
from .errors import (CoxeterError, InfiniteParabolicError, InvariantViolation,
                     ParseError, PreconditionError, ResourceLimitError)
from .experiments import (divergence_scan, divergence_text, divergence_tsv,
                          ft_scan, ft_text, ft_tsv, k_constant,
                          prop_main_scan, prop_text, prop_tsv)
from .language import (DEFAULT_WORD_CAP, canonical_word, chunk_decomposition,
                       is_in_standard_language)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class RunConfig:
    group: str
    command: str
    sub: str | None = None
    word: str | None = None
    radius: int = 0
    scan_len: int | None = None
    radii: tuple[int, ...] = ()
    all_words: bool = False
    max_states: int = 10_000
    max_ball: int = DEFAULT_BALL_CAP
    max_words: int = DEFAULT_WORD_CAP
    threads: int = 1
    fmt: str = "text"
    output: str | None = None


def _load(path: str) -> CoxeterSystem:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(0, f"cannot read group file: {exc}")
    return parse_system(text)


def _emit(text: str, config: RunConfig) -> None:
    if config.output:
        Path(config.output).write_text(text)
    else:
        sys.stdout.write(text)


def _subset_str(system: CoxeterSystem, T) -> str:
    names = system.matrix.names
    return "{" + ",".join(names[s] for s in sorted(T)) + "}"


def cmd_info(config: RunConfig) -> int:
    system = _load(config.group)
    names = system.matrix.names
    print(f"generators: {' '.join(names)}")
    print("orders:")
    for i, nm in enumerate(names):
        row = " ".join(
            "inf" if system.matrix.orders[i][j] == INF
            else str(system.matrix.orders[i][j])
            for j in range(system.n))
        print(f"  {nm}: {row}")
    print(f"field degree: {system.field.degree}")
    verdict = "yes" if system.is_two_dimensional() else "no"
    print(f"2-dimensional: {verdict}; K = {k_constant(system)}")
    return EXIT_OK


def cmd_lang(config: RunConfig) -> int:
    system = _load(config.group)
    word = system.parse_word(config.word)
    if config.sub == "check":
        verdict = is_in_standard_language(system, word)
        print(f"in language: {'true' if verdict else 'false'}")
        return EXIT_OK
    g = system.element(word)
    if config.sub == "word":
        print(system.word_str(canonical_word(g)))
        return EXIT_OK
    for chunk in chunk_decomposition(g):
        print(f"T={_subset_str(system, chunk.parabolic)}  "
              f"w={system.word_str(chunk.longest.nf)}  "
              f"remainder={system.word_str(chunk.remainder.nf)}")
    return EXIT_OK


def cmd_automaton(config: RunConfig) -> int:
    system = _load(config.group)
    machine, report = fsa.build(system, max_states=config.max_states)
    mismatch = None
    scan = None
    if config.scan_len is not None:
        scan = fsa.equivalence_scan(machine, system, config.scan_len)
        mismatch = scan.first_mismatch
    if config.fmt == "json":
        _emit(fsa.to_json(machine), config)
    elif config.fmt == "dot":
        _emit(fsa.to_dot(machine), config)
    else:
        lines = [f"states: {report.state_count}",
                 f"transitions: {report.transition_count}",
                 f"max wall depth: {report.max_wall_depth}"]
        if scan is not None:
            if mismatch is None:
                lines.append(f"equivalent up to length {scan.max_len} "
                             f"({scan.words_checked} words)")
            else:
                lines.append(f"MISMATCH at word {system.word_str(mismatch)}")
        _emit("\n".join(lines) + "\n", config)
    return EXIT_OK if mismatch is None else EXIT_FINDING


def cmd_scan(config: RunConfig) -> int:
    system = _load(config.group)
    report = ft_scan(system, config.radius,
                     words="all" if config.all_words else "canonical",
                     max_words=config.max_words, max_ball=config.max_ball,
                     threads=config.threads)
    render = ft_text if config.fmt == "text" else ft_tsv
    _emit(render(report, system), config)
    if report.bound_ok is False:
        return EXIT_FINDING
    return EXIT_OK


def cmd_prop(config: RunConfig) -> int:
    system = _load(config.group)
    report = prop_main_scan(system, config.radius, max_ball=config.max_ball)
    render = prop_text if config.fmt == "text" else prop_tsv
    _emit(render(report, system), config)
    return EXIT_OK if report.ok else EXIT_FINDING


def cmd_divergence(config: RunConfig) -> int:
    system = _load(config.group)
    table = divergence_scan(system, config.radii, max_ball=config.max_ball,
                            threads=config.threads)
    render = divergence_text if config.fmt == "text" else divergence_tsv
    _emit(render(table, system), config)
    return EXIT_OK


def _parse_radii(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise PreconditionError(f"bad radii list {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxlang",
        description="Standard-language normal forms, automata, and "
                    "fellow-traveller scans for Coxeter groups.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", help="print group summary")
    p.add_argument("group")

    p = subs.add_parser("lang", help="standard-language queries")
    p.add_argument("group")
    p.add_argument("sub", choices=("check", "word", "chunks"))
    p.add_argument("word")

    p = subs.add_parser("automaton", help="build the recognizing automaton")
    p.add_argument("group")
    p.add_argument("--scan-len", type=int, default=None,
                   help="verify against membership up to this word length")
    p.add_argument("--max-states", type=int, default=10_000)
    p.add_argument("--format", default="text", choices=("text", "json", "dot"),
                   dest="fmt")
    p.add_argument("--output", default=None)

    p = subs.add_parser("scan", help="fellow-traveller scan over a ball")
    p.add_argument("group")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--all-words", action="store_true")
    p.add_argument("--max-words", type=int, default=DEFAULT_WORD_CAP)
    p.add_argument("--max-ball", type=int, default=DEFAULT_BALL_CAP)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", default="tsv", choices=("tsv", "text"),
                   dest="fmt")
    p.add_argument("--output", default=None)

    p = subs.add_parser("prop", help="residue witness scan over a ball")
    p.add_argument("group")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--max-ball", type=int, default=DEFAULT_BALL_CAP)
    p.add_argument("--format", default="text", choices=("tsv", "text"),
                   dest="fmt")
    p.add_argument("--output", default=None)

    p = subs.add_parser("divergence", help="divergence table over radii")
    p.add_argument("group")
    p.add_argument("--radii", required=True,
                   help="comma-separated strictly increasing radii")
    p.add_argument("--max-ball", type=int, default=DEFAULT_BALL_CAP)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", default="tsv", choices=("tsv", "text"),
                   dest="fmt")
    p.add_argument("--output", default=None)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    fields = {}
    for name in ("sub", "word", "radius", "scan_len", "all_words",
                 "max_states", "max_ball", "max_words", "threads", "fmt",
                 "output"):
        if hasattr(args, name) and getattr(args, name) is not None:
            fields[name] = getattr(args, name)
    if getattr(args, "radii", None) is not None:
        fields["radii"] = _parse_radii(args.radii)
    return RunConfig(group=args.group, command=args.command, **fields)


_HANDLERS = {
    "info": cmd_info,
    "lang": cmd_lang,
    "automaton": cmd_automaton,
    "scan": cmd_scan,
    "prop": cmd_prop,
    "divergence": cmd_divergence,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        config = _config(args)
        return _HANDLERS[args.command](config)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, InfiniteParabolicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_FINDING
    except CoxeterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
