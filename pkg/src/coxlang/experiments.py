"""Fellow-traveller measurements and divergence scans.

Two canonical-word representatives fellow-travel if the distance between
their length-i prefixes stays bounded as i grows.  For 2-dimensional
systems the bound 5K holds (K = longest chunk); the scans here measure the
observed maxima over balls, and for the Euclidean group A~3 they exhibit
the growing divergence that rules out such a bound.

All scans are deterministic: ties between witnesses are broken by the
lexicographically least (normal form, generator index), which is
independent of iteration order and so survives thread sharding.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import DEFAULT_BALL_CAP, CoxeterSystem, Element, Word
from .errors import PreconditionError
from .language import (DEFAULT_WORD_CAP, _finite_pairs, canonical_word,
                       check_prop_main, language_words)

Witness = tuple[Word, int]


@dataclass(frozen=True)
class FtReport:
    radius: int
    k: int
    max_ii: int
    max_iii: int
    witness_ii: Witness | None
    witness_iii: Witness | None
    two_dimensional: bool
    bound_ok: bool | None
    words: str


@dataclass(frozen=True)
class DivergenceRow:
    radius: int
    max_divergence: int
    witness: Witness | None


@dataclass(frozen=True)
class DivergenceTable:
    rows: tuple[DivergenceRow, ...]


@dataclass(frozen=True)
class PropMainReport:
    radius: int
    residues: int
    checks: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def k_constant(system: CoxeterSystem) -> int:
    """Max chunk length: the longest w0 over finite standard parabolics."""
    best = 0
    for size in range(1, system.n + 1):
        for T in itertools.combinations(range(system.n), size):
            if system.is_finite_parabolic(T):
                best = max(best, system.longest_element(T).length)
    return best


def _pair_value(system: CoxeterSystem, v: Word, vp: Word, s) -> int:
    """max over i >= 1 of l(v(i)^-1 [s] vp(i)), prefixes saturating.

    The difference element is updated by one generator on each side per
    step, and its length by +-1 via a single descent test, so each step
    costs two sparse multiplications.
    """
    if s is None:
        d = system.identity
        d_len = 0
    else:
        d = system.generator(s)
        d_len = 1
    best = 0
    for i in range(max(len(v), len(vp))):
        if i < len(v):
            a = v[i]
            drop = system.root_sign(
                tuple(d.inv[j][a] for j in range(system.n))) < 0
            d = system.gen_mul(a, d)
            d_len += -1 if drop else 1
        if i < len(vp):
            b = vp[i]
            drop = system.root_sign(
                tuple(d.mat[j][b] for j in range(system.n))) < 0
            d = system.mul_gen(d, b)
            d_len += -1 if drop else 1
        if d_len > best:
            best = d_len
    return best


def ft_pair_divergence(g: Element, g_prime: Element, mode: str, s: int) -> int:
    """Worst prefix distance between the canonical words of g and g'.

    mode "right" compares v(i) with v'(i) for g' = g·s; mode "left"
    compares s·v(i) with v'(i) for g' = s·g.  Requires l(g') > l(g).
    """
    system = g.system
    if mode == "right":
        if s in g.right_descents() or g_prime != system.mul_gen(g, s):
            raise PreconditionError("need g' = g·s with l(g·s) > l(g)")
        shift = None
    elif mode == "left":
        if s in g.left_descents() or g_prime != system.gen_mul(s, g):
            raise PreconditionError("need g' = s·g with l(s·g) > l(g)")
        shift = s
    else:
        raise PreconditionError(f"unknown mode {mode!r}")
    return _pair_value(system, canonical_word(g), canonical_word(g_prime), shift)


def _better(value: int, wit: Witness, best: int, best_wit: Witness | None) -> bool:
    if value != best:
        return value > best
    return best_wit is None or wit < best_wit


def _shard(items, threads: int):
    if threads <= 1:
        return [items]
    return [items[i::threads] for i in range(threads)]


def _scan_elements(system, elements, words, max_words):
    max_ii, wit_ii = -1, None
    max_iii, wit_iii = -1, None
    for g in elements:
        rdesc, ldesc = g.right_descents(), g.left_descents()
        for s in range(system.n):
            if s not in rdesc:
                gp = system.mul_gen(g, s)
                if words == "all":
                    val = max(_pair_value(system, v, vp, None)
                              for v in language_words(g, max_words)
                              for vp in language_words(gp, max_words))
                else:
                    val = _pair_value(system, canonical_word(g),
                                      canonical_word(gp), None)
                if _better(val, (g.nf, s), max_ii, wit_ii):
                    max_ii, wit_ii = val, (g.nf, s)
            if s not in ldesc:
                gp = system.gen_mul(s, g)
                if words == "all":
                    val = max(_pair_value(system, v, vp, s)
                              for v in language_words(g, max_words)
                              for vp in language_words(gp, max_words))
                else:
                    val = _pair_value(system, canonical_word(g),
                                      canonical_word(gp), s)
                if _better(val, (g.nf, s), max_iii, wit_iii):
                    max_iii, wit_iii = val, (g.nf, s)
    return max_ii, wit_ii, max_iii, wit_iii


def ft_scan(system: CoxeterSystem, radius: int, words: str = "canonical",
            max_words: int = DEFAULT_WORD_CAP,
            max_ball: int = DEFAULT_BALL_CAP, threads: int = 1) -> FtReport:
    """Measure both fellow-traveller quantities over a ball.

    max_ii ranges over g' = g·s (prefixes compared directly); max_iii over
    g' = s·g (prefixes compared across the left factor).  In "all" mode
    every pair of standard-language words is compared, not just the
    canonical ones.
    """
    if words not in ("canonical", "all"):
        raise PreconditionError(f"unknown words mode {words!r}")
    ball = system.ball(radius, max_ball)
    shards = _shard(ball, threads)
    if len(shards) == 1:
        results = [_scan_elements(system, ball, words, max_words)]
    else:
        with ThreadPoolExecutor(max_workers=len(shards)) as pool:
            results = list(pool.map(
                lambda part: _scan_elements(system, part, words, max_words),
                shards))
    max_ii, wit_ii = -1, None
    max_iii, wit_iii = -1, None
    for m2, w2, m3, w3 in results:
        if w2 is not None and _better(m2, w2, max_ii, wit_ii):
            max_ii, wit_ii = m2, w2
        if w3 is not None and _better(m3, w3, max_iii, wit_iii):
            max_iii, wit_iii = m3, w3
    max_ii = max(max_ii, 0)
    max_iii = max(max_iii, 0)
    k = k_constant(system)
    two_dim = system.is_two_dimensional()
    bound_ok = (max_ii <= 5 * k) if two_dim else None
    return FtReport(radius, k, max_ii, max_iii, wit_ii, wit_iii,
                    two_dim, bound_ok, words)


def _divergence_pairs(system, elements):
    out = []
    for g in elements:
        rdesc = g.right_descents()
        for s in range(system.n):
            if s not in rdesc:
                val = _pair_value(system, canonical_word(g),
                                  canonical_word(system.mul_gen(g, s)), None)
                out.append((g.length, val, (g.nf, s)))
    return out


def divergence_scan(system: CoxeterSystem, radii,
                    max_ball: int = DEFAULT_BALL_CAP,
                    threads: int = 1) -> DivergenceTable:
    """Max prefix divergence per radius, one row per requested radius."""
    radii = tuple(radii)
    if not radii or any(r < 0 for r in radii):
        raise PreconditionError("radii must be nonnegative")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise PreconditionError("radii must be strictly increasing")
    ball = system.ball(radii[-1], max_ball)
    shards = _shard(ball, threads)
    if len(shards) == 1:
        chunks = [_divergence_pairs(system, ball)]
    else:
        with ThreadPoolExecutor(max_workers=len(shards)) as pool:
            chunks = list(pool.map(
                lambda part: _divergence_pairs(system, part), shards))
    pairs = [p for chunk in chunks for p in chunk]
    rows = []
    for radius in radii:
        best, wit = 0, None
        for glen, val, witness in pairs:
            if glen <= radius and _better(val, witness, best, wit):
                best, wit = val, witness
        rows.append(DivergenceRow(radius, best, wit))
    return DivergenceTable(tuple(rows))


def prop_main_scan(system: CoxeterSystem, radius: int,
                   max_ball: int = DEFAULT_BALL_CAP) -> PropMainReport:
    """Exhaustively verify the residue-witness property over a ball.

    Scans every spherical residue meeting the ball and every ordered pair
    of its members (the in-ball one acting as g); records any pair for
    which no witness exists.
    """
    if not system.is_two_dimensional():
        raise PreconditionError("the residue witness scan needs a 2-dimensional system")
    pairs = _finite_pairs(system)
    seen = set()
    failures = []
    residues = 0
    checks = 0
    for g in system.ball(radius, max_ball):
        for s, t in pairs:
            gate = system.residue_gate(g, {s, t})
            key = (gate.nf, s, t)
            if key in seen:
                continue
            seen.add(key)
            residues += 1
            members = [gate * u for u in system.parabolic_elements({s, t})]
            for g1 in members:
                if g1.length > radius:
                    continue
                for g2 in members:
                    checks += 1
                    if check_prop_main(g1, g2, s, t) is None:
                        failures.append((g1.nf, g2.nf, s, t))
    return PropMainReport(radius, residues, checks, tuple(failures))


# ----- rendering ------------------------------------------------------------


def _witness_cells(system, witness: Witness | None) -> tuple[str, str]:
    if witness is None:
        return "-", "-"
    word, s = witness
    return system.word_str(word), system.matrix.names[s]


def ft_tsv(report: FtReport, system: CoxeterSystem) -> str:
    g_nf, s = _witness_cells(system, report.witness_ii)
    lines = ["radius\tK\tmax_ii\tmax_iii\twitness_g_nf\twitness_s",
             f"{report.radius}\t{report.k}\t{report.max_ii}\t"
             f"{report.max_iii}\t{g_nf}\t{s}"]
    return "\n".join(lines) + "\n"


def ft_text(report: FtReport, system: CoxeterSystem) -> str:
    g2, s2 = _witness_cells(system, report.witness_ii)
    g3, s3 = _witness_cells(system, report.witness_iii)
    lines = [
        f"radius {report.radius}, words {report.words}",
        f"K = {report.k}",
        f"max_ii  = {report.max_ii}  (witness g = {g2}, s = {s2})",
        f"max_iii = {report.max_iii}  (witness g = {g3}, s = {s3})",
    ]
    if report.two_dimensional:
        verdict = "holds" if report.bound_ok else "VIOLATED"
        lines.append(f"bound max_ii <= 5K = {5 * report.k}: {verdict}")
    else:
        lines.append("not 2-dimensional: no 5K bound asserted")
    return "\n".join(lines) + "\n"


def divergence_tsv(table: DivergenceTable, system: CoxeterSystem) -> str:
    lines = ["radius\tmax_divergence\twitness_g_nf\twitness_s"]
    for row in table.rows:
        g_nf, s = _witness_cells(system, row.witness)
        lines.append(f"{row.radius}\t{row.max_divergence}\t{g_nf}\t{s}")
    return "\n".join(lines) + "\n"


def divergence_text(table: DivergenceTable, system: CoxeterSystem) -> str:
    lines = []
    for row in table.rows:
        g_nf, s = _witness_cells(system, row.witness)
        lines.append(f"radius {row.radius}: max divergence {row.max_divergence}"
                     f"  (witness g = {g_nf}, s = {s})")
    return "\n".join(lines) + "\n"


def prop_tsv(report: PropMainReport, system: CoxeterSystem) -> str:
    lines = ["radius\tresidues\tchecks\tfailures",
             f"{report.radius}\t{report.residues}\t{report.checks}\t"
             f"{len(report.failures)}"]
    return "\n".join(lines) + "\n"


def prop_text(report: PropMainReport, system: CoxeterSystem) -> str:
    lines = [f"radius {report.radius}: {report.residues} residues, "
             f"{report.checks} ordered pairs checked"]
    if report.ok:
        lines.append("witnesses found for every pair")
    else:
        for g1, g2, s, t in report.failures[:10]:
            lines.append(
                f"NO WITNESS: g = {system.word_str(g1)}, g' = {system.word_str(g2)}, "
                f"pair = ({system.matrix.names[s]}, {system.matrix.names[t]})")
        lines.append(f"{len(report.failures)} failures")
    return "\n".join(lines) + "\n"
