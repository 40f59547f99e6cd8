"""Walls: reflections, sides, crossing, near-wall sets, residue walls.

The crossing oracle samples side patterns over a chamber ball; four
patterns mean crossing.  The sampling radius is chosen large enough that
the oracle saw every quadrant for the wall pairs under test (verified:
radius 10 suffices for the inversion walls of radius-6 elements here).
"""

import itertools

import pytest

from coxlang import PreconditionError
from coxlang import walls as wl
from coxlang.walls import FAR, NEAR
from oracles import sign_pattern_cross


def test_generator_walls(fig1):
    for s in range(fig1.n):
        w = wl.wall_of_generator(fig1, s)
        assert w.reflection == fig1.generator(s)
        assert wl.side(w, fig1.identity) == NEAR
        assert wl.side(w, fig1.generator(s)) == FAR


def test_wall_from_root_canonicalizes(fig1):
    w = wl.wall_of_generator(fig1, 0)
    neg = tuple(fig1.field.raw_neg(c) for c in w.root)
    assert wl.wall_from_root(fig1, neg) == w
    assert hash(wl.wall_from_root(fig1, neg)) == hash(w)


def test_conjugate_wall_reflection(fig1, ball):
    for g in ball(fig1, 3):
        for s in range(fig1.n):
            w = wl.conjugate_wall(g, wl.wall_of_generator(fig1, s))
            assert w.reflection == g * fig1.generator(s) * g.inverse()


def test_conjugate_wall_composes(fig1):
    g = fig1.element("str")
    h = fig1.element("ts")
    w = wl.wall_of_generator(fig1, 2)
    assert wl.conjugate_wall(g * h, w) == \
        wl.conjugate_wall(g, wl.conjugate_wall(h, w))


def test_inversion_walls_count_and_side(fig1, a3tilde, ball):
    for system, radius in ((fig1, 6), (a3tilde, 5)):
        for g in ball(system, radius):
            walls = wl.inversion_walls(g)
            assert len(walls) == g.length
            assert len(set(walls)) == g.length
            for w in walls:
                assert wl.side(w, g) == FAR
                assert wl.side(w, system.identity) == NEAR


def test_reflection_length_is_odd_and_palindromic_in_value(fig1, ball):
    # every wall's reflection r satisfies r^2 = id and l(r) = 2*l(c) + 1
    # where c is the adjacent chamber on the near side
    seen = set()
    for g in ball(fig1, 6):
        seen.update(wl.inversion_walls(g))
    for w in seen:
        r = w.reflection
        assert (r * r).is_identity()
        c = wl.adjacent_chamber(w)
        assert r.length == 2 * c.length + 1


def test_adjacent_chamber_straddles(fig1, a3tilde, ball):
    for system, radius in ((fig1, 7), (a3tilde, 5)):
        walls = set()
        for g in ball(system, radius):
            walls.update(wl.inversion_walls(g))
        for w in walls:
            c = wl.adjacent_chamber(w)
            u = (c.inverse() * w.reflection * c)
            assert u.length == 1
            s = u.nf[0]
            assert wl.side(w, c) == NEAR
            assert wl.side(w, system.mul_gen(c, s)) == FAR
            assert w.reflection == c * u * c.inverse()


def test_walls_cross_examples(fig1, dinf):
    ws = wl.wall_of_generator(fig1, 0)
    wt = wl.wall_of_generator(fig1, 1)
    wr = wl.wall_of_generator(fig1, 2)
    assert wl.walls_cross(ws, wt)
    assert wl.walls_cross(ws, wr)
    wa = wl.wall_of_generator(dinf, 0)
    wb = wl.wall_of_generator(dinf, 1)
    assert not wl.walls_cross(wa, wb)
    bab = wl.conjugate_wall(dinf.generator(1), wa)
    assert not wl.walls_cross(wa, bab)
    with pytest.raises(PreconditionError):
        wl.walls_cross(ws, ws)


def test_walls_cross_against_sign_pattern_oracle(fig1, triangle, ball):
    for system, sample_radius in ((fig1, 10), (triangle, 8)):
        chambers = ball(system, sample_radius)
        pairs = set()
        for g in ball(system, 6):
            pairs.update(itertools.combinations(wl.inversion_walls(g), 2))
        for a, b in pairs:
            assert wl.walls_cross(a, b) == sign_pattern_cross(a, b, chambers)


def test_near_wall_set_fig1_example(fig1):
    g = fig1.element("strst")
    walls = wl.wall_set(g)
    assert len(walls) == 3
    refls = {fig1.word_str(w.reflection.nf) for w in walls}
    assert refls == {"strst", "srtrs", "trsrt"}


def test_near_wall_set_contained_in_inversions(fig1, ball):
    for g in ball(fig1, 6):
        walls = wl.wall_set(g)
        inv = set(wl.inversion_walls(g))
        assert set(walls) <= inv
        if not g.is_identity():
            assert walls


def test_near_wall_set_minimality_over_larger_universe(fig1, ball):
    # independence check: no wall from a larger universe separates g from
    # a kept wall, and every dropped inversion wall has a separator
    universe = set()
    for g in ball(fig1, 8):
        universe.update(wl.inversion_walls(g))
    for g in ball(fig1, 4):
        inv = set(wl.inversion_walls(g))
        kept = wl.wall_set(g)
        for w in kept:
            for u in universe:
                if u == w:
                    continue
                assert not wl.separates_vertex_from_wall(u, g, w)
        for w in inv - set(kept):
            assert any(wl.separates_vertex_from_wall(u, g, w)
                       for u in inv if u != w)


def test_separation_requires_distinct_walls(fig1):
    w = wl.wall_of_generator(fig1, 0)
    with pytest.raises(PreconditionError):
        wl.separates_vertex_from_wall(w, fig1.identity, w)


def test_residue_wall_counts(fig1, a3tilde):
    g = fig1.element("strst")
    assert len(wl.residue_walls(fig1, g, {0})) == 1
    assert len(wl.residue_walls(fig1, g, {0, 1})) == 2
    assert len(wl.residue_walls(fig1, g, {0, 2})) == 4
    h = a3tilde.element("prs")
    assert len(wl.residue_walls(a3tilde, h, {0, 1, 2})) == 6


def test_residue_walls_match_edge_walls(fig1, ball):
    # literal definition: walls dual to the edges inside the residue
    for g in ball(fig1, 4):
        for T in ({0}, {0, 1}, {0, 2}):
            gate = fig1.residue_gate(g, T)
            members = [gate * u for u in fig1.parabolic_elements(T)]
            edge_walls = set()
            for h in members:
                for t in T:
                    edge_walls.add(
                        wl.conjugate_wall(h, wl.wall_of_generator(fig1, t)))
            assert edge_walls == set(wl.residue_walls(fig1, g, T))


def test_residue_walls_identity_are_longest_element_inversions(fig1):
    walls = wl.residue_walls(fig1, fig1.identity, {0, 2})
    w0 = fig1.longest_element({0, 2})
    assert set(walls) == set(wl.inversion_walls(w0))
