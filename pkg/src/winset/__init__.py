"""Winning sets of two-player word-construction games on regular languages.

Alice and Bob alternately pick the letters of a binary word according to a
turn-order word over {A, B}; Alice wins when the result lands in a target
language.  For regular targets the winning turn orders again form a regular
language, and this package builds that language's automaton, the gadget
families with extremal behavior, and the bound/characterization checks that
go with them, all against a brute-force game oracle.
"""

__version__ = "0.1.0"

from .automata import (AnalysisResult, CycleStructure, Dfa, Nfa,
                       accepted_words, analyze, count_words, determinize,
                       equivalent, minimize)
from .formats import ParseError, parse, parse_with_report, serialize, to_dot
from .oracle import TargetSet, alice_wins, oracle_winning_set
from .winning import (DEFAULT_MAX_GAME_STATES, GameState, GameStateLimit,
                      congruent, game_states_equivalent, gs_step,
                      is_accepting, normalize, singleton_equiv_test,
                      transformation, winning_dfa, winning_nfa, winning_raw)
from .gadgets import (Gadget, build_gadget, chain_dfa, dyck_dfa, exact_k_dfa,
                      exact_k_symbolic_wdfa, gen_word, subset_word, probe_word,
                      turn_word)
from .analysis import (BoundParams, PeriodicityCapViolation, Report,
                       a_periodicity, antichain_families, bounded_bound,
                       bounded_dfas, chain_bound, dedekind, exact_k_size,
                       exhaustive_dfas, is_downward_closed, sc_enumerate,
                       seeded_dfas, unimodal_q, unimodal_series,
                       verify_bounded_bound, verify_chain_bound,
                       verify_core_properties, verify_dyck, verify_exact_k,
                       verify_lower_bound, verify_periodicity)

__all__ = [name for name in dir() if not name.startswith("_")]
