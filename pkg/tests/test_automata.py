import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from winset import (Dfa, Nfa, ParseError, accepted_words, analyze,
                    count_words, determinize, equivalent, exact_k_dfa,
                    minimize, parse, parse_with_report, serialize, to_dot)


@st.composite
def dfas(draw, max_states=5):
    n = draw(st.integers(1, max_states))
    t0 = [draw(st.integers(0, n - 1)) for _ in range(n)]
    t1 = [draw(st.integers(0, n - 1)) for _ in range(n)]
    finals = {q for q in range(n) if draw(st.booleans())}
    return Dfa(n, 0, finals, t0, t1)


def test_dfa_validation():
    with pytest.raises(ValueError):
        Dfa(2, 2, set(), [0, 1], [1, 0])
    with pytest.raises(ValueError):
        Dfa(2, 0, {5}, [0, 1], [1, 0])
    with pytest.raises(ValueError):
        Dfa(2, 0, set(), [0, 3], [1, 0])
    with pytest.raises(ValueError):
        Dfa(2, 0, set(), [0], [1, 0])


def test_dfa_is_immutable():
    d = exact_k_dfa(1)
    with pytest.raises(AttributeError):
        d.initial = 1


def test_run_and_accepts():
    d = exact_k_dfa(1)
    assert d.accepts("010")
    assert not d.accepts("0110")
    assert d.run("01", start=1) == 2
    with pytest.raises(ValueError):
        d.accepts("0x1")


def test_determinize_deterministic_shaped_nfa_is_isomorphic():
    d = exact_k_dfa(2)
    nfa = Nfa(d.state_count, {d.initial}, d.finals,
              [{q} for q in d.t0], [{q} for q in d.t1])
    got = determinize(nfa)
    # the input is already canonically numbered, so this is equality
    assert got == minimize(d) or equivalent(got, d)
    assert got.state_count == d.state_count


def test_determinize_empty_initials():
    nfa = Nfa(2, set(), {1}, [{1}, set()], [set(), {1}])
    d = determinize(nfa)
    assert d.state_count == 1
    assert not d.finals


def test_minimize_parity_dfa_already_minimal():
    parity = Dfa(2, 0, {1}, [1, 0], [1, 0])
    m = minimize(parity)
    assert m == parity


def test_minimize_collapses_copies():
    # two interchangeable non-final states
    d = Dfa(3, 0, {0}, [1, 0, 0], [2, 0, 0])
    m = minimize(d)
    assert m.state_count == 2
    assert equivalent(m, d)


@settings(max_examples=150, deadline=None)
@given(dfas())
def test_minimize_idempotent_and_language_preserving(d):
    m = minimize(d)
    assert minimize(m) == m
    for length in range(7):
        assert accepted_words(m, length) == accepted_words(d, length)


def test_equivalent_basics():
    d1, d2 = exact_k_dfa(1), exact_k_dfa(2)
    assert equivalent(d1, d1)
    assert equivalent(d1, minimize(d1))
    assert not equivalent(d1, d2)  # they differ at the word "1"
    with pytest.raises(ValueError):
        equivalent(d1, Dfa(1, 0, {0}, [0], [0], alphabet="AB"))


def test_analyze_exact_one():
    res = analyze(exact_k_dfa(1))
    assert list(res.cycles.cycle_lengths) == [1, 1, 1]
    assert res.cycles.acyclic_count == 0
    assert res.cycles.disjoint


def test_analyze_three_cycle_distances():
    tri = Dfa(3, 0, {0}, [1, 2, 0], [1, 2, 0])
    res = analyze(tri)
    assert res.final_distance == (0, 2, 1)
    assert list(res.cycles.cycle_lengths) == [3]


def test_analyze_shared_cycles_not_disjoint():
    shared = Dfa(3, 0, {0}, [1, 0, 0], [2, 0, 0])
    assert not analyze(shared).cycles.disjoint


def test_analyze_unreachable_marker():
    d = Dfa(2, 0, set(), [0, 1], [0, 1])
    res = analyze(d)
    assert res.final_distance == (None, None)


@settings(max_examples=100, deadline=None)
@given(dfas())
def test_analyze_counts_reachable_states(d):
    res = analyze(d)
    if res.cycles.disjoint:
        reach = {d.initial}
        stack = [d.initial]
        while stack:
            q = stack.pop()
            for nxt in (d.t0[q], d.t1[q]):
                if nxt not in reach:
                    reach.add(nxt)
                    stack.append(nxt)
        assert sum(res.cycles.cycle_lengths) + res.cycles.acyclic_count \
            == len(reach)


def test_count_words_matches_enumeration():
    d = exact_k_dfa(2)
    for length in range(8):
        assert count_words(d, length) == len(accepted_words(d, length))


# ---------------------------------------------------------------------------
# text format and DOT

def test_roundtrip_dfa():
    d = exact_k_dfa(1)
    assert parse(serialize(d)) == d


def test_roundtrip_nfa():
    nfa = Nfa(3, {0, 1}, {2}, [{1, 2}, set(), {0}], [set(), {2}, {2}])
    assert parse(serialize(nfa)) == nfa


def test_roundtrip_ab_alphabet():
    d = Dfa(2, 0, {1}, [1, 1], [0, 0], alphabet="AB")
    text = serialize(d)
    assert " ab" in text.splitlines()[0]
    assert parse(text) == d


def test_parse_error_out_of_range_target():
    bad = "dfa 2 0\nfinals 1\nt 0 0 5\nt 1 1 1\n"
    with pytest.raises(ParseError) as err:
        parse(bad)
    assert err.value.line_no == 3


def test_parse_error_mentions_field():
    with pytest.raises(ParseError) as err:
        parse("dfa x 0\nfinals\n")
    assert err.value.field == "state_count"


def test_parse_completes_missing_rows_with_sink():
    text = "dfa 2 0\nfinals 1\nt 0 1 1\n"
    d, completed = parse_with_report(text)
    assert completed
    assert d.state_count == 3
    assert d.accepts("0")
    assert not d.accepts("00")


def test_parse_skips_comments():
    text = "# port b1 0\ndfa 1 0\nfinals 0\nt 0 0 0\n"
    assert parse(text).accepts("0101")


def test_dot_export_edge_count():
    d = exact_k_dfa(1)  # 3 states, complete binary
    dot = to_dot(d)
    labelled = [line for line in dot.splitlines() if "label=\"" in line
                and "->" in line]
    assert len(labelled) == 6
    assert dot.count("doublecircle") == 1


@settings(max_examples=60, deadline=None)
@given(dfas())
def test_roundtrip_random(d):
    assert parse(serialize(d)) == d
