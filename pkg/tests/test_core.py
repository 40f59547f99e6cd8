"""Core system construction, words, elements, balls, parabolics."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxlang import (CoxeterMatrix, CoxeterSystem, INF, InfiniteParabolicError,
                     InvariantViolation, ParseError, PreconditionError,
                     ResourceLimitError, parse_system)
from oracles import TitsBall, affine_a_ball_sizes


# ----- parsing --------------------------------------------------------------

def test_parse_round_trip(fig1):
    assert fig1.matrix.names == ("s", "t", "r")
    assert fig1.matrix.orders[0][1] == 2
    assert fig1.matrix.orders[0][2] == 4
    assert fig1.matrix.orders[1][2] == 4
    assert fig1.matrix.orders[0][0] == 1


def test_parse_defaults_to_infinity():
    system = parse_system("generators a b c\nm a b 3\n")
    assert system.matrix.orders[0][2] == INF
    assert system.matrix.orders[1][2] == INF


def test_parse_repeated_consistent_order_is_fine():
    system = parse_system("generators a b\nm a b 5\nm b a 5\n")
    assert system.matrix.orders[0][1] == 5


@pytest.mark.parametrize("text,line,fragment", [
    ("m a b 3\ngenerators a b", 1, "generators"),
    ("generators", 1, "no generators"),
    ("generators a a", 1, "duplicate"),
    ("generators a b\nm a b", 2, "expected 'm"),
    ("generators a b\nm a c 3", 2, "unknown generator"),
    ("generators a b\nm a a 3", 2, "diagonal"),
    ("generators a b\nm a b x", 2, "integer"),
    ("generators a b\nm a b 1", 2, "at least 2"),
    ("generators a b\nm a b 3\nm b a 4", 3, "conflicting"),
    ("", 0, "empty"),
    ("   \n# only a comment\n", 0, "empty"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_system(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_matrix_validation():
    with pytest.raises(InvariantViolation):
        CoxeterMatrix(("a", "b"), ((1, 2), (3, 1)))  # asymmetric
    with pytest.raises(InvariantViolation):
        CoxeterMatrix(("a", "b"), ((2, 3), (3, 1)))  # bad diagonal


# ----- words ----------------------------------------------------------------

def test_parse_word_formats(fig1):
    assert fig1.parse_word("str") == (0, 1, 2)
    assert fig1.parse_word("s t r") == (0, 1, 2)
    assert fig1.parse_word("") == ()
    assert fig1.word_str((0, 1, 2)) == "str"
    assert fig1.word_str(()) == "e"
    with pytest.raises(ParseError):
        fig1.parse_word("sxt")


def test_multichar_names_need_spaces():
    system = parse_system("generators g1 g2\nm g1 g2 3\n")
    assert system.parse_word("g1 g2") == (0, 1)
    assert system.word_str((0, 1)) == "g1 g2"
    with pytest.raises(ParseError):
        system.parse_word("g3")


# ----- generators and elements ----------------------------------------------

def test_generators_are_involutions(fig1, a3tilde, triangle, dinf, single):
    for system in (fig1, a3tilde, triangle, dinf, single):
        for s in range(system.n):
            g = system.generator(s)
            assert (g * g).is_identity()
            assert g.length == 1
            assert g.nf == (s,)


def test_element_accepts_indices_and_strings(fig1):
    assert fig1.element("str") == fig1.element((0, 1, 2))
    assert fig1.element(()).is_identity()
    with pytest.raises(PreconditionError):
        fig1.element((0, 7))


def test_commuting_pair_collapses(fig1):
    # m_st = 2, so sts = t.
    assert fig1.element("sts") == fig1.element("t")
    assert fig1.element("sts").nf == (1,)
    assert fig1.element("st") == fig1.element("ts")


def test_normal_form_examples(fig1):
    assert fig1.element("strst").nf == fig1.parse_word("strst")
    assert fig1.element("strst").length == 5
    assert fig1.identity.nf == ()
    # srs and rsr are distinct at m_sr = 4
    assert fig1.element("srs") != fig1.element("rsr")
    assert fig1.element("srsr") == fig1.element("rsrs")


def test_inverse_and_equality(fig1):
    g = fig1.element("strst")
    assert (g * g.inverse()).is_identity()
    assert g.inverse().length == g.length
    assert g.inverse() == fig1.element("tsrts")


def test_descent_sets(fig1):
    g = fig1.element("strst")
    assert g.right_descents() == frozenset({0, 1})
    assert fig1.element("st").left_descents() == frozenset({0, 1})
    assert fig1.identity.right_descents() == frozenset()


# ----- balls ----------------------------------------------------------------

def test_ball_sizes_fig1(fig1, ball):
    sizes = [len(ball(fig1, r)) for r in range(9)]
    assert sizes == [1, 4, 9, 17, 28, 41, 57, 76, 97]


def test_ball_sizes_dinf(dinf, ball):
    assert [len(ball(dinf, r)) for r in range(6)] == [1, 3, 5, 7, 9, 11]


def test_ball_sizes_single(single):
    assert [len(single.ball(r)) for r in range(3)] == [1, 2, 2]


def test_ball_sizes_affine_match_growth_series(a3tilde, triangle, ball):
    want3 = affine_a_ball_sizes(3, 8)
    want2 = affine_a_ball_sizes(2, 8)
    assert len(ball(a3tilde, 8)) == want3[8] == 425
    assert len(ball(triangle, 8)) == want2[8] == 109
    by_len = {}
    for g in ball(a3tilde, 8):
        by_len[g.length] = by_len.get(g.length, 0) + 1
    cum = 0
    for r in range(9):
        cum += by_len.get(r, 0)
        assert cum == want3[r]


def test_ball_cap(fig1):
    with pytest.raises(ResourceLimitError):
        fig1.ball(6, max_elements=10)


def test_ball_against_braid_rewriting_oracle(fig1, ball):
    oracle = TitsBall(fig1, 3)
    # same number of elements per level and identical shortlex words
    words = {g.nf for g in ball(fig1, 2)}
    oracle_words = {min(node) for node, lv in oracle.level.items() if lv <= 2}
    assert words == oracle_words


def test_ball_normal_forms_are_shortlex_least(fig1, ball):
    for g in ball(fig1, 5):
        closure = fig1.braid_closure(g.nf)
        assert g.nf == min(closure)
        assert all(len(w) == g.length for w in closure)


def test_length_parity_and_steps(fig1, ball):
    for g in ball(fig1, 4):
        for s in range(fig1.n):
            h = fig1.mul_gen(g, s)
            assert abs(h.length - g.length) == 1


# ----- parabolic structure ---------------------------------------------------

def test_two_dimensionality(fig1, a3tilde, triangle, dinf, single):
    assert fig1.is_two_dimensional()
    assert triangle.is_two_dimensional()
    assert dinf.is_two_dimensional()
    assert single.is_two_dimensional()
    assert not a3tilde.is_two_dimensional()


def test_finite_parabolic_classification(fig1, a3tilde, triangle, dinf):
    assert fig1.is_finite_parabolic({0, 1})
    assert fig1.is_finite_parabolic({0, 2})
    assert not fig1.is_finite_parabolic({0, 1, 2})
    assert all(a3tilde.is_finite_parabolic(T)
               for T in itertools.combinations(range(4), 3))
    assert not a3tilde.is_finite_parabolic({0, 1, 2, 3})
    assert not triangle.is_finite_parabolic({0, 1, 2})
    assert not dinf.is_finite_parabolic({0, 1})
    assert dinf.is_finite_parabolic({0})
    assert fig1.is_finite_parabolic(frozenset()) is True


def test_parabolic_orders_match_catalog(fig1, a3tilde):
    # I2(2) = 4, I2(4) = 8, A3 = 24: enumerated orders certify the verdicts.
    assert len(fig1.parabolic_elements({0, 1})) == 4
    assert len(fig1.parabolic_elements({0, 2})) == 8
    assert len(a3tilde.parabolic_elements({0, 1, 2})) == 24
    with pytest.raises(ResourceLimitError):
        fig1.parabolic_elements({0, 1, 2}, max_elements=500)


def test_longest_elements(fig1, a3tilde):
    w0 = fig1.longest_element({0, 2})
    assert w0.length == 4
    assert w0 == fig1.element("srsr") == fig1.element("rsrs")
    assert (w0 * w0).is_identity()
    assert w0.right_descents() == frozenset({0, 2})

    w0 = a3tilde.longest_element({0, 1, 2})
    assert w0.length == 6
    assert (w0 * w0).is_identity()
    assert w0.right_descents() == frozenset({0, 1, 2})
    # longest element really is the max over the enumerated parabolic
    members = a3tilde.parabolic_elements({0, 1, 2})
    assert max(g.length for g in members) == 6
    assert sum(1 for g in members if g.length == 6) == 1

    assert fig1.longest_element(frozenset()).is_identity()


def test_longest_element_infinite_raises(fig1, dinf):
    with pytest.raises(InfiniteParabolicError):
        fig1.longest_element({0, 1, 2})
    with pytest.raises(InfiniteParabolicError):
        dinf.longest_element({0, 1})


def test_residue_gate_properties(fig1, ball):
    for g in ball(fig1, 6):
        for T in ({0}, {1}, {0, 1}, {0, 2}, {1, 2}):
            h = fig1.residue_gate(g, T)
            rest = h.inverse() * g
            assert h.length + rest.length == g.length
            assert not (h.right_descents() & T)
            assert set(rest.nf) <= T
    # gate of strst in <s,t>: strst * (st)^-1 = str, shortest in the residue
    g = fig1.element("strst")
    assert fig1.residue_gate(g, {0, 1}) == fig1.element("str")


def test_in_residue(fig1):
    g = fig1.element("strst")
    assert fig1.in_residue(fig1.element("str"), g, {0, 1})
    assert fig1.in_residue(fig1.element("strs"), g, {0, 1})
    assert not fig1.in_residue(fig1.element("st"), g, {0, 1})
    assert fig1.in_residue(g, g, {0, 1})


# ----- Tits rewriting ---------------------------------------------------------

def test_braid_closure_examples(fig1):
    assert fig1.braid_closure((0, 1)) == {(0, 1), (1, 0)}
    closure = fig1.braid_closure((0, 2, 0, 2))
    assert closure == {(0, 2, 0, 2), (2, 0, 2, 0)}
    assert fig1.braid_closure(()) == {()}


def test_tits_reduce_agrees_with_geometry(fig1):
    for k in range(7):
        for word in itertools.product(range(3), repeat=k):
            reduced = fig1.tits_reduce(word)
            g = fig1.element(word)
            assert len(reduced) == g.length
            assert reduced == g.nf


def test_tits_reduce_caps(fig1):
    with pytest.raises(ResourceLimitError):
        fig1.tits_reduce((0, 1) * 40, max_letters=20)
    with pytest.raises(PreconditionError):
        fig1.tits_reduce((0, 9))


# ----- hypothesis properties --------------------------------------------------

small_words = st.lists(st.integers(min_value=0, max_value=2),
                       max_size=10).map(tuple)


@given(small_words)
@settings(max_examples=60)
def test_word_element_laws(word):
    system = _FIG1
    g = system.element(word)
    assert g.length <= len(word)
    assert (g.length - len(word)) % 2 == 0
    assert system.element(g.nf) == g
    assert g.inverse().length == g.length
    assert g.inverse().nf == tuple(system.element(tuple(reversed(word))).nf)
    assert g.left_descents() == g.inverse().right_descents()


@given(small_words, small_words)
@settings(max_examples=40)
def test_multiplication_consistency(u, v):
    system = _FIG1
    assert system.element(u) * system.element(v) == system.element(u + v)


_FIG1 = CoxeterSystem.from_pairs(
    ("s", "t", "r"), {("s", "t"): 2, ("s", "r"): 4, ("t", "r"): 4})
