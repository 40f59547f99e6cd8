"""Walk through the running example group (m_st = 2, m_sr = m_tr = 4).

Prints the descent data, chunk decomposition, near-wall set, and language
words for g = strst, then the automaton summary.  Output is deterministic.
"""

from pathlib import Path

from coxlang import (build, canonical_word, chunk_decomposition, descent_data,
                     language_words, parse_system, wall_set)

GROUP = Path(__file__).resolve().parent.parent / "groups" / "fig1.cox"


def main() -> None:
    system = parse_system(GROUP.read_text())
    names = system.matrix.names
    g = system.element("strst")
    T, w, pi = descent_data(g)
    print(f"g = strst  (length {g.length}, normal form {system.word_str(g.nf)})")
    print(f"T(g) = {{{','.join(names[s] for s in sorted(T))}}}")
    print(f"w(g) = {system.word_str(w.nf)}")
    print(f"Pi(g) = {system.word_str(pi.nf)}")
    print("chunks:")
    for chunk in chunk_decomposition(g):
        print(f"  T={{{','.join(names[s] for s in sorted(chunk.parabolic))}}}"
              f"  w={system.word_str(chunk.longest.nf)}"
              f"  remainder={system.word_str(chunk.remainder.nf)}")
    walls = sorted(wall_set(g), key=lambda wl: (wl.reflection.length,
                                                wl.reflection.nf))
    print(f"|W(g)| = {len(walls)}  reflections: "
          + ", ".join(system.word_str(wl.reflection.nf) for wl in walls))
    print(f"canonical word: {system.word_str(canonical_word(g))}")
    words = language_words(g)
    print(f"language words ({len(words)}): "
          + ", ".join(system.word_str(v) for v in words))
    machine, report = build(system)
    print(f"automaton: {report.state_count} states, "
          f"{report.transition_count} transitions, "
          f"max wall depth {report.max_wall_depth}")


if __name__ == "__main__":
    main()
