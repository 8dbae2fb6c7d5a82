import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from winset import (Dfa, GameState, GameStateLimit, TargetSet, accepted_words,
                    chain_dfa, congruent, count_words, dedekind, determinize,
                    equivalent, exact_k_dfa, game_states_equivalent, gs_step,
                    is_accepting, minimize, normalize, oracle_winning_set,
                    singleton_equiv_test, winning_dfa, winning_nfa,
                    winning_raw)
from winset.winning import _Engine


@st.composite
def dfas(draw, max_states=4):
    n = draw(st.integers(1, max_states))
    t0 = [draw(st.integers(0, n - 1)) for _ in range(n)]
    t1 = [draw(st.integers(0, n - 1)) for _ in range(n)]
    finals = {q for q in range(n) if draw(st.booleans())}
    return Dfa(n, 0, finals, t0, t1)


@st.composite
def dfas_with_game_state(draw):
    d = draw(dfas())
    full = (1 << d.state_count) - 1
    masks = draw(st.sets(st.integers(0, full), min_size=0, max_size=4))
    return d, tuple(masks)


# ---------------------------------------------------------------------------
# normalization

def test_normalize_superset_removal():
    d = exact_k_dfa(1)
    gs = normalize(GameState(d, [{0}, {0, 1}]))
    assert gs.sets == (frozenset({0}),)


def test_normalize_drops_dead_members():
    d = exact_k_dfa(1)  # state 2 is a rejecting sink
    gs = normalize(GameState(d, [{2}, {1}]))
    assert gs.sets == (frozenset({1}),)


def test_normalize_strips_accepting_sink():
    # state 1 is an accepting sink; 0 still has a path to it
    d = Dfa(2, 0, {1}, [1, 1], [0, 1])
    gs = normalize(GameState(d, [{0, 1}]))
    assert gs.sets == (frozenset({0}),)
    gs2 = normalize(GameState(d, [{1}]))
    assert gs2.sets == (frozenset(),)


@settings(max_examples=150, deadline=None)
@given(dfas_with_game_state())
def test_normalize_idempotent_and_order_independent(case):
    d, masks = case
    eng = _Engine(d)
    normed = eng.normalize(masks)
    assert eng.normalize(normed) == normed
    # the fixed point does not depend on the member order presented
    shuffled = list(masks)
    random.Random(0).shuffle(shuffled)
    assert eng.normalize(tuple(shuffled)) == normed


# ---------------------------------------------------------------------------
# stepping and acceptance

def test_gs_step_examples_exact_one():
    d = exact_k_dfa(1)
    g0 = GameState(d, [{0}])
    assert gs_step(g0, "B").sets == (frozenset({0, 1}),)
    assert gs_step(g0, "A").sets == (frozenset({0}), frozenset({1}))
    g01 = GameState(d, [{0}, {1}])
    assert gs_step(g01, "A").sets == (frozenset({0}), frozenset({1}))
    with pytest.raises(ValueError):
        gs_step(g0, "X")


def test_is_accepting():
    d = exact_k_dfa(1)
    assert is_accepting(GameState(d, [{1}]))
    assert not is_accepting(GameState(d, []))
    assert not is_accepting(GameState(d, [{0, 1}]))


@settings(max_examples=100, deadline=None)
@given(dfas_with_game_state(), dfas_with_game_state())
def test_gs_step_union_law(case_a, case_b):
    d, masks_a = case_a
    _, masks_b = case_b
    full = (1 << d.state_count) - 1
    masks_b = tuple(m & full for m in masks_b)
    eng = _Engine(d)
    ga = eng.normalize(masks_a)
    gb = eng.normalize(masks_b)
    union = eng.normalize(ga + gb)
    for sym in (0, 1):
        assert eng.step(union, sym) \
            == eng.normalize(eng.step(ga, sym) + eng.step(gb, sym))


# ---------------------------------------------------------------------------
# the winning-set automaton

def test_winning_dfa_exact_one_has_five_states():
    assert winning_dfa(exact_k_dfa(1)).state_count == 5


def test_winning_dfa_one_state_bases():
    assert winning_dfa(Dfa(1, 0, set(), [0], [0])).state_count == 1
    assert winning_dfa(Dfa(1, 0, {0}, [0], [0])).state_count == 1


def test_winning_nfa_route_agrees():
    for base in (exact_k_dfa(1), exact_k_dfa(2), chain_dfa(3, 0, {1})):
        via_nfa = minimize(determinize(winning_nfa(base)))
        assert equivalent(via_nfa, winning_dfa(base))


def test_winning_nfa_exact_one_minimizes_to_five():
    assert minimize(determinize(winning_nfa(exact_k_dfa(1)))).state_count == 5


def test_two_state_bases_within_dedekind_bound():
    bound = dedekind(2)
    for t0a in range(2):
        for t0b in range(2):
            for t1a in range(2):
                for t1b in range(2):
                    for fm in range(4):
                        d = Dfa(2, 0, {q for q in range(2) if fm >> q & 1},
                                [t0a, t0b], [t1a, t1b])
                        via_nfa = minimize(determinize(winning_nfa(d)))
                        assert via_nfa.state_count <= bound
                        assert equivalent(via_nfa, winning_dfa(d))


def test_winning_dfa_rejects_turn_alphabet_base():
    with pytest.raises(ValueError):
        winning_dfa(Dfa(1, 0, {0}, [0], [0], alphabet="AB"))


def test_game_state_cap_is_loud():
    with pytest.raises(GameStateLimit):
        winning_dfa(exact_k_dfa(4), max_game_states=5)


def test_winning_raw_is_reachable_closure():
    raw = winning_raw(exact_k_dfa(2))
    assert raw.state_count >= winning_dfa(exact_k_dfa(2)).state_count


@settings(max_examples=60, deadline=None)
@given(dfas())
def test_winning_dfa_agrees_with_oracle(d):
    w = winning_dfa(d)
    for length in range(6):
        want = oracle_winning_set(TargetSet.from_language(d, length))
        assert accepted_words(w, length) == want


@settings(max_examples=60, deadline=None)
@given(dfas())
def test_winning_dfa_cardinality(d):
    w = winning_dfa(d)
    for length in range(8):
        assert count_words(w, length) == count_words(d, length)


# ---------------------------------------------------------------------------
# congruence tests

def test_congruent_chain_tail():
    w = winning_dfa(chain_dfa(4, 0, {2}, one_bounded=True))
    assert congruent(w, "AAA", "AAAA")
    assert congruent(w, "BABB", "BBAB")


def test_congruent_separates_exact_one():
    w = winning_dfa(exact_k_dfa(1))
    assert not congruent(w, "AB", "BA")


def test_singleton_equiv_test_examples():
    d = exact_k_dfa(1)
    assert singleton_equiv_test(d, "AB", "AB")
    assert not singleton_equiv_test(d, "A", "B")
    ch = chain_dfa(3, 0, {1})
    assert singleton_equiv_test(ch, "AA", "AAA")


def test_game_states_equivalent_basic():
    d = exact_k_dfa(1)
    assert game_states_equivalent(d, GameState(d, [{0}]), GameState(d, [{0}, {2}]))
    assert not game_states_equivalent(d, GameState(d, [{0}]), GameState(d, [{1}]))


def test_ab_ba_domination_on_chains():
    for (m, p, finals) in ((4, 0, {1, 2}), (5, 0, {3}), (3, 2, {2})):
        ch = chain_dfa(m, p, finals)
        eng = _Engine(ch)
        for q in range(ch.state_count):
            start = eng.normalize((1 << q,))
            ab = eng.walk(start, "AB")
            ba = eng.walk(start, "BA")
            for member in ab:
                assert any(r & member == r for r in ba)
