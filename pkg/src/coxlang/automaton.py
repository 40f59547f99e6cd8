"""The residue automaton recognizing the standard language.

States are finite wall sets pulled back to the identity: reading a prefix
of a language word leaves the machine in the state g^-1·W(g), where g is
the element spelled so far.  A transition consumes one whole chunk (any
reduced word of the longest element of a finite parabolic T) and is
allowed precisely when no generator wall of T, and no far-side image of an
outside generator wall, is blocked by the current set.  All states accept;
the start state is the empty set.

The state space is discovered by breadth-first closure rather than given a
priori, so construction needs no global constants, and a scan against the
membership predicate certifies the result at word-length scale.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .core import CoxeterSystem, Element, Word
from .errors import ResourceLimitError
from .language import is_in_standard_language
from .walls import (Wall, conjugate_wall, residue_walls,
                    separates_vertex_from_wall, wall_of_generator, wall_set)


@dataclass(frozen=True)
class Transition:
    source: int
    parabolic: tuple[int, ...]
    w0_word: Word
    labels: tuple[Word, ...]
    target: int


@dataclass(frozen=True)
class ResidueFsa:
    generators: tuple[str, ...]
    states: tuple[tuple[str, ...], ...]
    transitions: tuple[Transition, ...]
    start: int


@dataclass(frozen=True)
class BuildReport:
    state_count: int
    transition_count: int
    max_wall_depth: int
    truncated: bool


@dataclass(frozen=True)
class EquivalenceReport:
    max_len: int
    words_checked: int
    first_mismatch: Word | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def _key_words(walls) -> tuple[Word, ...]:
    return tuple(sorted((w.reflection.nf for w in walls),
                        key=lambda u: (len(u), u)))


def wall_state_key(system: CoxeterSystem, g: Element) -> tuple[str, ...]:
    """The state reached after spelling g: its wall set pulled back by g."""
    ginv = g.inverse()
    pulled = [conjugate_wall(ginv, w) for w in wall_set(g)]
    return tuple(system.word_str(w) for w in _key_words(pulled))


def build(system: CoxeterSystem,
          max_states: int = 10_000) -> tuple[ResidueFsa, BuildReport]:
    """Breadth-first state discovery from the empty wall set."""
    subsets = []
    for size in range(1, system.n + 1):
        for T in itertools.combinations(range(system.n), size):
            if system.is_finite_parabolic(T):
                subsets.append(T)

    gen_walls = [wall_of_generator(system, s) for s in range(system.n)]
    chunk = {}
    for T in subsets:
        w0 = system.longest_element(T)
        outside = [conjugate_wall(w0, gen_walls[t])
                   for t in range(system.n) if t not in T]
        labels = tuple(sorted(system.braid_closure(w0.nf)))
        chunk[T] = (w0, outside, labels, residue_walls(system, system.identity, T))

    start: frozenset[Wall] = frozenset()
    states = [start]
    index = {_key_words(start): 0}
    transitions = []
    pos = 0
    while pos < len(states):
        walls = states[pos]
        for T in subsets:
            w0, outside, labels, rwalls = chunk[T]
            if any(gen_walls[t] in walls for t in T):
                continue
            if any(w in walls for w in outside):
                continue
            candidates = walls | rwalls
            kept = []
            for a in candidates:
                for b in candidates:
                    if b != a and separates_vertex_from_wall(b, w0, a):
                        break
                else:
                    kept.append(a)
            w0inv = w0.inverse()
            target_walls = frozenset(conjugate_wall(w0inv, a) for a in kept)
            key = _key_words(target_walls)
            target = index.get(key)
            if target is None:
                target = len(states)
                if target >= max_states:
                    report = BuildReport(len(states), len(transitions),
                                         _max_depth(states), truncated=True)
                    err = ResourceLimitError(
                        f"automaton build exceeded {max_states} states")
                    err.report = report
                    raise err
                index[key] = target
                states.append(target_walls)
            transitions.append(Transition(pos, T, w0.nf, labels, target))
        pos += 1

    state_strings = tuple(
        tuple(system.word_str(w) for w in _key_words(st)) for st in states)
    fsa = ResidueFsa(system.matrix.names, state_strings, tuple(transitions), 0)
    report = BuildReport(len(states), len(transitions), _max_depth(states),
                         truncated=False)
    return fsa, report


def _max_depth(states) -> int:
    depth = 0
    for st in states:
        for w in st:
            depth = max(depth, w.reflection.length)
    return depth


def accepts(fsa: ResidueFsa, word) -> bool:
    """Set-of-runs matching over whole-chunk labels."""
    if isinstance(word, str):
        word = _parse_word(fsa.generators, word)
    word = tuple(word)
    n = len(word)
    by_source = {}
    for tr in fsa.transitions:
        by_source.setdefault(tr.source, []).append(tr)
    active = [set() for _ in range(n + 1)]
    active[0].add(fsa.start)
    for i in range(n):
        for state in active[i]:
            for tr in by_source.get(state, ()):
                k = len(tr.w0_word)
                if i + k <= n and word[i:i + k] in tr.labels:
                    active[i + k].add(tr.target)
    return bool(active[n])


def equivalence_scan(fsa: ResidueFsa, system: CoxeterSystem,
                     max_len: int) -> EquivalenceReport:
    """Compare automaton acceptance with the membership predicate on
    every word of length <= max_len."""
    by_source = {}
    labelsets = {}
    for tr in fsa.transitions:
        by_source.setdefault(tr.source, []).append(tr)
        labelsets[id(tr)] = frozenset(tr.labels)
    checked = 0
    for length in range(max_len + 1):
        for word in itertools.product(range(system.n), repeat=length):
            n = len(word)
            active = [set() for _ in range(n + 1)]
            active[0].add(fsa.start)
            for i in range(n):
                for state in active[i]:
                    for tr in by_source.get(state, ()):
                        k = len(tr.w0_word)
                        if i + k <= n and word[i:i + k] in labelsets[id(tr)]:
                            active[i + k].add(tr.target)
            a = bool(active[n])
            b = is_in_standard_language(system, word)
            checked += 1
            if a != b:
                return EquivalenceReport(max_len, checked, word)
    return EquivalenceReport(max_len, checked, None)


# ----- export ---------------------------------------------------------------


def _word_str(names, word: Word) -> str:
    if not word:
        return "e"
    if all(len(nm) == 1 for nm in names):
        return "".join(names[s] for s in word)
    return " ".join(names[s] for s in word)


def _parse_word(names, text: str) -> Word:
    index = {nm: i for i, nm in enumerate(names)}
    text = text.strip()
    if not text or text == "e":
        return ()
    parts = text.split() if any(c.isspace() for c in text) else (
        list(text) if all(len(nm) == 1 for nm in names) else [text])
    return tuple(index[p] for p in parts)


def to_json(fsa: ResidueFsa) -> str:
    names = fsa.generators
    doc = {
        "generators": list(names),
        "states": [list(st) for st in fsa.states],
        "transitions": [
            {
                "from": tr.source,
                "T": [names[t] for t in tr.parabolic],
                "w0": _word_str(names, tr.w0_word),
                "labels": [_word_str(names, w) for w in tr.labels],
                "to": tr.target,
            }
            for tr in fsa.transitions
        ],
        "start": fsa.start,
    }
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str) -> ResidueFsa:
    doc = json.loads(text)
    names = tuple(doc["generators"])
    index = {nm: i for i, nm in enumerate(names)}
    transitions = tuple(
        Transition(
            tr["from"],
            tuple(index[t] for t in tr["T"]),
            _parse_word(names, tr["w0"]),
            tuple(_parse_word(names, w) for w in tr["labels"]),
            tr["to"],
        )
        for tr in doc["transitions"]
    )
    states = tuple(tuple(st) for st in doc["states"])
    return ResidueFsa(names, states, transitions, doc["start"])


def to_dot(fsa: ResidueFsa) -> str:
    names = fsa.generators
    lines = ["digraph standard_language {", "  rankdir=LR;",
             "  node [shape=doublecircle];",
             '  __start [shape=none, label=""];',
             f"  __start -> q{fsa.start};"]
    for i, st in enumerate(fsa.states):
        depth = max((len(w.replace(" ", "")) if all(len(nm) == 1 for nm in names)
                     else len(w.split())) for w in st) if st else 0
        lines.append(f'  q{i} [label="{i}: {len(st)} walls, depth {depth}"];')
    for tr in fsa.transitions:
        tnames = ",".join(names[t] for t in tr.parabolic)
        label = f"{{{tnames}}} : {_word_str(names, tr.w0_word)}"
        lines.append(f'  q{tr.source} -> q{tr.target} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
