"""Quantitative claims: bounds, enumeration, corpora and their verification.

Each `verify_*` entry point measures something against a stated expectation
and returns a Report; the collection mirrors the claims the library exists
to check (state-complexity sequence, Dedekind bound, closed forms, gadget
lower bound, chain and bounded-language bounds, periodicity caps, and the
core winning-set properties against the brute-force oracle).
"""

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field

from .automata import Dfa, accepted_words, analyze, count_words, \
    equivalent, minimize, moore_classes
from .formats import serialize
from .gadgets import build_gadget, chain_dfa, dyck_dfa, exact_k_dfa, \
    exact_k_symbolic_wdfa, turn_word
from .oracle import TargetSet, oracle_winning_set
from .winning import DEFAULT_MAX_GAME_STATES, _Engine, congruent, \
    winning_dfa

KNOWN_STATE_COMPLEXITY = {1: 1, 2: 4, 3: 16, 4: 62, 5: 517}
DEDEKIND_6 = 7828354


@dataclass
class Report:
    """One verified claim: what was measured, what was expected, verdict."""
    claim: str
    params: dict
    measured: object
    expected: object
    passed: bool
    millis: int
    details: dict = field(default_factory=dict)

    def row(self):
        return [self.claim, json.dumps(self.params, sort_keys=True),
                json.dumps(self.measured, sort_keys=True, default=str),
                json.dumps(self.expected, sort_keys=True, default=str),
                "pass" if self.passed else "FAIL", str(self.millis)]


class _Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.millis = int((time.perf_counter() - self.t0) * 1000)
        return False


# ---------------------------------------------------------------------------
# counting

def antichain_families(n):
    """All antichains of subsets of {1..n}, as tuples of frozensets.

    Subsets are visited in increasing bitmask order, so the output order is
    deterministic; the empty antichain comes first.
    """
    subsets = [frozenset(i + 1 for i in range(n) if m >> i & 1)
               for m in range(1 << n)]
    masks = list(range(1 << n))
    out = []
    chosen = []

    def rec(start):
        out.append(tuple(subsets[i] for i in chosen))
        for k in range(start, len(masks)):
            mk = masks[k]
            if all(mk & masks[c] not in (mk, masks[c]) for c in chosen):
                chosen.append(k)
                rec(k + 1)
                chosen.pop()

    rec(0)
    return out


def dedekind(n):
    """Number of antichains of subsets of an n-element set.

    Exhaustive enumeration up to n = 5; the n = 6 value is a precomputed
    constant, and larger arguments are refused.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 6:
        raise ValueError("dedekind(n) is capped at n = 6")
    if n == 6:
        return DEDEKIND_6
    total = 0
    chosen = []

    def rec(start):
        nonlocal total
        total += 1
        for m in range(start, 1 << n):
            for c in chosen:
                if m & c == m or m & c == c:
                    break
            else:
                chosen.append(m)
                rec(m + 1)
                chosen.pop()

    rec(0)
    return total


def unimodal_series(limit):
    """Counts Q(0..limit) of compositions that rise then fall.

    A unimodal composition with largest part k splits uniquely into an
    ascending partition with parts below k, a plateau of k's, and a
    descending partition with parts below k; summing the generating
    functions x^k / ((1-x^k) * prod_{i<k} (1-x^i)^2) over k gives the
    series below in O(limit^2) integer additions.
    """
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    q = [0] * (limit + 1)
    q[0] = 1
    d = [0] * (limit + 1)
    d[0] = 1
    for k in range(1, limit + 1):
        if k > 1:
            step = k - 1
            for _ in range(2):
                for e in range(step, limit + 1):
                    d[e] += d[e - step]
        t = [0] * (limit + 1)
        for e in range(k, limit + 1):
            t[e] = d[e - k] + t[e - k]
            q[e] += t[e]
    return q


def unimodal_q(m):
    """Number of compositions of m that are first nondecreasing, then
    nonincreasing; Q(0) = 1 for the empty composition."""
    if m > 10 ** 4:
        raise ValueError("unimodal_q is capped at m = 10^4")
    return unimodal_series(m)[m]


def chain_bound(n):
    """Winning-set size bound for 1-bounded chain automata with n states."""
    if n < 1:
        raise ValueError("need n >= 1")
    return 1 + sum(unimodal_series(4 * n - 1))


@dataclass(frozen=True)
class BoundParams:
    """Cycle lengths and acyclic state count of a disjoint-cycle DFA."""
    cycle_lengths: tuple
    acyclic_count: int

    @classmethod
    def from_dfa(cls, dfa):
        info = analyze(dfa)
        if not info.cycles.disjoint:
            raise ValueError("automaton does not have disjoint cycles")
        return cls(tuple(info.cycles.cycle_lengths), info.cycles.acyclic_count)

    def big_lcm(self):
        # lcm of no cycles is taken as 1
        return math.lcm(*self.cycle_lengths) if self.cycle_lengths else 1

    def pair_lcm_max(self):
        # max over unordered pairs of distinct cycles; 0 when p < 2
        ks = self.cycle_lengths
        best = 0
        for i in range(len(ks)):
            for j in range(i + 1, len(ks)):
                best = max(best, math.lcm(ks[i], ks[j]))
        return best


def bounded_bound(params):
    """Winning-set size bound for bounded-language DFAs with disjoint cycles.

    With cycle lengths k_1..k_p and l states outside every cycle, let
    P = p * max_{x != y} lcm(k_x, k_y) + 2l + 2 * lcm(k_1..k_p); the bound
    is sum_{m=0}^{l+p+1} P^m, in exact integer arithmetic.  Degenerate
    conventions: the pair maximum is 0 when p < 2 and the overall lcm is 1
    when p = 0.
    """
    p = len(params.cycle_lengths)
    l = params.acyclic_count
    big = p * params.pair_lcm_max() + 2 * l + 2 * params.big_lcm()
    return sum(big ** m for m in range(l + p + 2))


# ---------------------------------------------------------------------------
# periodicity of repeated A-steps

class PeriodicityCapViolation(RuntimeError):
    pass


def a_periodicity(dfa, game_state=None, max_game_states=DEFAULT_MAX_GAME_STATES):
    """Smallest (k, m) with the A-step sequence repeating: reading k As and
    then m more leads to language-equivalent game states.

    Requires a disjoint-cycle base.  The result is checked against the
    structural caps k <= lcm(all cycles) + 2n + max pair lcm and
    m <= lcm(all cycles); exceeding them raises PeriodicityCapViolation.
    """
    params = BoundParams.from_dfa(dfa)
    eng = _Engine(dfa)
    if game_state is None:
        start = eng.initial()
    elif hasattr(game_state, "_masks"):
        start = eng.normalize(game_state._masks())
    else:
        start = eng.normalize(tuple(game_state))
    states, t0, t1, acc, seeds = eng.explore([start], max_game_states)
    cls = moore_classes(len(states), t0, t1, acc)
    seen = {}
    cur = seeds[0]
    i = 0
    while True:
        c = cls[cur]
        if c in seen:
            k, m = seen[c], i - seen[c]
            break
        seen[c] = i
        cur = t0[cur]
        i += 1
    k_cap = params.big_lcm() + 2 * dfa.state_count + params.pair_lcm_max()
    m_cap = params.big_lcm()
    if k > k_cap or m > m_cap:
        raise PeriodicityCapViolation(
            "found (k=%d, m=%d) beyond caps (%d, %d)" % (k, m, k_cap, m_cap))
    return k, m


# ---------------------------------------------------------------------------
# corpora

def transition_tables(n):
    """All complete binary transition tables on n states, lexicographically."""
    for flat in itertools.product(range(n), repeat=2 * n):
        yield flat[:n], flat[n:]


def exhaustive_dfas(n):
    """Every complete binary DFA on n states with initial state 0."""
    for t0, t1 in transition_tables(n):
        for fm in range(1 << n):
            finals = frozenset(q for q in range(n) if fm >> q & 1)
            yield Dfa(n, 0, finals, t0, t1)


def seeded_dfas(seed, count, min_states, max_states):
    """Deterministic random corpus of complete binary DFAs."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_states, max_states)
        t0 = [rng.randrange(n) for _ in range(n)]
        t1 = [rng.randrange(n) for _ in range(n)]
        finals = frozenset(q for q in range(n) if rng.random() < 0.5)
        yield Dfa(n, 0, finals, t0, t1)


def bounded_dfas(seed, count, max_states=8):
    """Deterministic corpus of bounded-language DFAs with disjoint cycles.

    States are laid out in blocks (cycles of length 1..3 or single path
    states) that only ever step forward, plus a trailing rejecting sink, so
    every accepted word follows a monotone block sequence and the language
    is bounded by construction.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        live = rng.randint(2, max_states - 1)
        blocks = []
        left = live
        while left:
            if rng.random() < 0.55:
                k = rng.randint(1, min(3, left))
                blocks.append(k)
                left -= k
            else:
                blocks.append(0)  # a single acyclic state
                left -= 1
        starts = []
        pos = 0
        for b in blocks:
            starts.append(pos)
            pos += max(b, 1)
        sink = live
        n = live + 1
        t0 = [sink] * n
        t1 = [sink] * n
        for bi, b in enumerate(blocks):
            begin = starts[bi]
            later = list(range(starts[bi] + max(b, 1), live))

            def forward():
                return rng.choice(later) if later and rng.random() < 0.8 else sink

            if b == 0:
                t0[begin] = forward()
                t1[begin] = forward()
            else:
                for j in range(b):
                    q = begin + j
                    nxt = begin + (j + 1) % b
                    if rng.random() < 0.5:
                        t0[q], t1[q] = nxt, forward()
                    else:
                        t0[q], t1[q] = forward(), nxt
        finals = frozenset(q for q in range(live) if rng.random() < 0.4)
        d = Dfa(n, 0, finals, t0, t1)
        if not analyze(d).cycles.disjoint:
            continue  # construction should prevent this; skip defensively
        out.append(d)
    return out


# ---------------------------------------------------------------------------
# state-complexity enumeration

def _sc_scan(n, table_range, max_game_states, progress=None, progress_every=0):
    best = -1
    best_index = None
    best_table = None
    cache = {}
    lo, hi = table_range
    tables = itertools.islice(transition_tables(n), lo, hi)
    fcount = 1 << n
    for offset, (t0, t1) in enumerate(tables):
        tindex = lo + offset
        for fm in range(fcount):
            finals = frozenset(q for q in range(n) if fm >> q & 1)
            m = minimize(Dfa(n, 0, finals, t0, t1))
            size = cache.get(m)
            if size is None:
                size = winning_dfa(m, max_game_states).state_count
                cache[m] = size
            if size > best:
                best = size
                best_index = tindex * fcount + fm
                best_table = (t0, t1, fm)
        if progress and progress_every and (offset + 1) % progress_every == 0:
            progress(tindex + 1, best)
    return best, best_index, best_table, len(cache)


def _sc_worker(args):
    n, lo, hi, max_game_states = args
    best, best_index, best_table, _ = _sc_scan(n, (lo, hi), max_game_states)
    return best, best_index, best_table


def sc_enumerate(n, jobs=1, max_game_states=DEFAULT_MAX_GAME_STATES,
                 progress=None, progress_every=0):
    """Largest minimal winning-set DFA over every n-state binary DFA.

    Iterates all n^(2n) transition tables (initial state fixed at 0) times
    all final sets, skipping nothing; a cache keyed by the minimized base
    automaton avoids recomputing identical languages but cannot change the
    maximum.  The witness is the first table/final-set pair in iteration
    order that attains the maximum; with jobs > 1 the scan is partitioned
    and the reducer compares iteration indices, keeping the result
    deterministic.  Returns a Report.
    """
    if n < 1 or n > 5:
        raise ValueError("enumeration is supported for 1..5 states")
    total_tables = n ** (2 * n)
    with _Clock() as clock:
        if jobs <= 1:
            best, best_index, best_table, nlang = _sc_scan(
                n, (0, total_tables), max_game_states, progress, progress_every)
        else:
            from concurrent.futures import ProcessPoolExecutor
            chunks = []
            step = max(1, total_tables // (jobs * 8))
            lo = 0
            while lo < total_tables:
                hi = min(total_tables, lo + step)
                chunks.append((n, lo, hi, max_game_states))
                lo = hi
            best, best_index, best_table = -1, None, None
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for i, (b, bi, bt) in enumerate(pool.map(_sc_worker, chunks)):
                    if b > best or (b == best and bi is not None
                                    and (best_index is None or bi < best_index)):
                        best, best_index, best_table = b, bi, bt
                    if progress:
                        progress(chunks[i][2], best)
            nlang = -1
    expected = KNOWN_STATE_COMPLEXITY.get(n)
    t0, t1, fm = best_table
    witness = Dfa(n, 0, frozenset(q for q in range(n) if fm >> q & 1), t0, t1)
    details = {"witness": serialize(witness), "witness_index": best_index}
    if nlang >= 0:
        details["distinct_languages"] = nlang
    return Report(claim="state-complexity", params={"n": n},
                  measured=best, expected=expected,
                  passed=(expected is None or best == expected),
                  millis=clock.millis, details=details)


# ---------------------------------------------------------------------------
# verification of the individual claims

def exact_k_size(n):
    # n^3/6 + n^2 + 11n/6 + 2, kept in integers
    return (n ** 3 + 6 * n ** 2 + 11 * n + 12) // 6


def _suffix_predicate(n, w):
    if w.count("A") < n or w.count("B") > n:
        return False
    balance = 0
    for letter in reversed(w):
        balance += 1 if letter == "A" else -1
        if balance < 0:
            return False
    return True


def verify_exact_k(n, max_game_states=DEFAULT_MAX_GAME_STATES):
    """Exact-n-ones language: closed-form size, membership characterization,
    and agreement between the symbolic and generic constructions."""
    if n > 10:
        raise ValueError("verify_exact_k is capped at n = 10")
    with _Clock() as clock:
        base = exact_k_dfa(n)
        w = winning_dfa(base, max_game_states)
        size_ok = w.state_count == exact_k_size(n)
        limit = min(3 * n + 2, 14)
        mismatches = 0
        first_bad = None
        for length in range(limit + 1):
            for bits in range(1 << length):
                word = "".join("B" if bits >> i & 1 else "A"
                               for i in range(length))
                got = w.accepts(word)
                want = _suffix_predicate(n, word)
                if got != want:
                    mismatches += 1
                    if first_bad is None:
                        first_bad = word
        sym_ok = equivalent(exact_k_symbolic_wdfa(n), w)
    measured = {"size": w.state_count, "mismatches": mismatches,
                "symbolic_equivalent": sym_ok}
    expected = {"size": exact_k_size(n), "mismatches": 0,
                "symbolic_equivalent": True}
    details = {} if first_bad is None else {"first_mismatch": first_bad}
    return Report(claim="exactk", params={"n": n}, measured=measured,
                  expected=expected, passed=(size_ok and mismatches == 0
                                             and sym_ok),
                  millis=clock.millis, details=details)


def verify_dyck(max_len=14, max_game_states=DEFAULT_MAX_GAME_STATES):
    """Winning set of the Dyck language on the all-even block words.

    For every even m <= max_len, membership of A^2i B^2j A^2k (with
    2i+2j+2k = m) in the winning set of the length-m Dyck slice must equal
    [i >= j and k >= 2j]; for m <= 10 the automaton answer is additionally
    cross-checked against the brute-force oracle.
    """
    if max_len > 16 or max_len % 2:
        raise ValueError("max_len must be even and at most 16")
    with _Clock() as clock:
        mismatches = 0
        oracle_disagreements = 0
        checked = 0
        first_bad = None
        for m in range(0, max_len + 1, 2):
            w = winning_dfa(dyck_dfa(max(m, 1)), max_game_states)
            oracle_set = None
            if m <= 10:
                oracle_set = oracle_winning_set(
                    TargetSet.from_language(dyck_dfa(max(m, 1)), m))
            for i in range(m // 2 + 1):
                for j in range((m - 2 * i) // 2 + 1):
                    k = (m - 2 * i - 2 * j) // 2
                    word = "A" * 2 * i + "B" * 2 * j + "A" * 2 * k
                    got = w.accepts(word)
                    want = i >= j and k >= 2 * j
                    checked += 1
                    if got != want:
                        mismatches += 1
                        if first_bad is None:
                            first_bad = word
                    if oracle_set is not None and (word in oracle_set) != got:
                        oracle_disagreements += 1
    measured = {"mismatches": mismatches,
                "oracle_disagreements": oracle_disagreements,
                "words_checked": checked}
    expected = {"mismatches": 0, "oracle_disagreements": 0}
    details = {} if first_bad is None else {"first_mismatch": first_bad}
    return Report(claim="dyck", params={"max_len": max_len},
                  measured=measured, expected=expected,
                  passed=(mismatches == 0 and oracle_disagreements == 0),
                  millis=clock.millis, details=details)


def verify_lower_bound(n, check_size=True,
                       max_game_states=DEFAULT_MAX_GAME_STATES):
    """Gadget lower bound: the distinguishing experiment for every antichain
    and probe set, plus (optionally) the minimal winning-set size against
    the Dedekind number."""
    if n > 2:
        raise ValueError("verify_lower_bound is capped at n = 2")
    with _Clock() as clock:
        g = build_gadget("lower_bound", n)
        eng = _Engine(g.dfa)
        experiment_failures = 0
        first_bad = None
        for chain in antichain_families(n):
            word = turn_word("gen", n, chain) if chain else ""
            reached = eng.walk(eng.initial(), word)
            for pmask in range(1 << n):
                probe_set = {i + 1 for i in range(n) if pmask >> i & 1}
                probe = "A" * (n + 1) + turn_word("test", n, probe_set)
                got = eng.accepting(eng.walk(reached, probe))
                want = any(set(s) <= probe_set for s in chain)
                if got != want:
                    experiment_failures += 1
                    if first_bad is None:
                        first_bad = (sorted(map(sorted, chain)),
                                     sorted(probe_set))
        size = None
        bound = dedekind(n)
        size_ok = True
        if check_size:
            size = winning_dfa(g.dfa, max_game_states).state_count
            size_ok = size >= bound
    measured = {"experiment_failures": experiment_failures,
                "winning_size": size,
                "base_states": g.dfa.state_count}
    expected = {"experiment_failures": 0,
                "winning_size": ">= %d" % bound,
                "base_states": "%d (quoted %d)" % (g.dfa.state_count,
                                                   g.meta["quoted_state_count"])}
    details = dict(g.meta)
    if first_bad is not None:
        details["first_failure"] = first_bad
    return Report(claim="lower-bound", params={"n": n}, measured=measured,
                  expected=expected,
                  passed=(experiment_failures == 0 and size_ok),
                  millis=clock.millis, details=details)


def _chain_congruence_pairs(n):
    pairs = [("A" * (n - 1), "A" * n), ("B" * (n - 1), "B" * n)]
    for k in range(4):
        pairs.append(("B" * k + "A" * k + "B" * (k + 1),
                      "B" * (k + 1) + "A" * k + "B" * k))
        pairs.append(("A" * (k + 1) + "B" * k + "A" * k,
                      "A" * k + "B" * k + "A" * (k + 1)))
    return pairs


def verify_chain_bound(max_states=12, seed=42,
                       max_game_states=DEFAULT_MAX_GAME_STATES):
    """Chain automata: winning sizes within the unimodal-composition bound
    on every 1-bounded chain, plus the congruence families.

    The language of a 1-bounded chain depends only on its final set (counts
    of 1s), so distinct final sets are built once at their smallest width
    and the bound is checked for every (states, finals) pair.  Congruences
    are checked by transformation-function comparison on those minimal
    automata and on a seeded sample of chains with an end cycle.
    """
    with _Clock() as clock:
        bounds = {m: chain_bound(m) for m in range(1, max_states + 1)}
        # The language of a 1-bounded chain is fixed by its final set alone,
        # and the game-state exploration does not look at acceptance, so each
        # width is explored once and only the accepting flags vary with F.
        cache = {frozenset(): (1, True)}  # empty language
        for width in range(2, max_states + 1):
            rep = chain_dfa(width, 0, {width - 2}, one_bounded=True)
            eng = _Engine(rep)
            states, t0, t1, _, _ = eng.explore([eng.initial()],
                                               max_game_states)
            for fmask in range(1 << (width - 2)):
                finals = frozenset(q for q in range(width - 2)
                                   if fmask >> q & 1) | {width - 2}
                fm = fmask | 1 << (width - 2)
                acc = {i for i, st in enumerate(states)
                       if any(m & ~fm == 0 for m in st)}
                w = minimize(Dfa(len(states), 0, acc, t0, t1, "AB"))
                ok = all(congruent(w, v, u)
                         for v, u in _chain_congruence_pairs(width))
                cache[finals] = (w.state_count, ok)
        bound_failures = 0
        congruence_failures = 0
        worst = (0, None)
        checked = 0
        for m in range(1, max_states + 1):
            for fmask in range(1 << max(m - 1, 0)):
                finals = frozenset(q for q in range(m - 1) if fmask >> q & 1)
                size, cong_ok = cache[finals]
                checked += 1
                if size > bounds[m]:
                    bound_failures += 1
                if not cong_ok:
                    congruence_failures += 1
                if size > worst[0]:
                    worst = (size, (m, sorted(finals)))
        rng = random.Random(seed)
        for _ in range(25):
            p = rng.randint(1, max_states - 1)
            m = rng.randint(1, max_states - p)
            n = m + p
            finals = frozenset(q for q in range(n) if rng.random() < 0.5)
            w = winning_dfa(chain_dfa(m, p, finals), max_game_states)
            if not all(congruent(w, v, u)
                       for v, u in _chain_congruence_pairs(n)):
                congruence_failures += 1
    measured = {"bound_failures": bound_failures,
                "congruence_failures": congruence_failures,
                "pairs_checked": checked,
                "largest_winning_size": worst[0]}
    expected = {"bound_failures": 0, "congruence_failures": 0}
    return Report(claim="chain-bound", params={"max_states": max_states},
                  measured=measured, expected=expected,
                  passed=(bound_failures == 0 and congruence_failures == 0),
                  millis=clock.millis,
                  details={"largest_witness": worst[1]})


def verify_bounded_bound(seed=42, count=200, max_states=8,
                         max_game_states=DEFAULT_MAX_GAME_STATES):
    """Bounded-language corpus: winning sizes within the structural bound."""
    with _Clock() as clock:
        failures = 0
        first_bad = None
        largest = 0
        for d in bounded_dfas(seed, count, max_states):
            params = BoundParams.from_dfa(d)
            bound = bounded_bound(params)
            size = winning_dfa(d, max_game_states).state_count
            largest = max(largest, size)
            if size > bound:
                failures += 1
                if first_bad is None:
                    first_bad = serialize(d)
    measured = {"violations": failures, "instances": count,
                "largest_winning_size": largest}
    expected = {"violations": 0}
    details = {} if first_bad is None else {"counterexample": first_bad}
    return Report(claim="bounded-bound",
                  params={"seed": seed, "count": count,
                          "max_states": max_states},
                  measured=measured, expected=expected,
                  passed=failures == 0, millis=clock.millis, details=details)


def verify_periodicity(seed=42, count=200, max_states=8,
                       max_game_states=DEFAULT_MAX_GAME_STATES):
    """A-step periodicity stays within its structural caps on the bounded
    corpus; also reports the largest preperiod and period seen."""
    with _Clock() as clock:
        violations = 0
        first_bad = None
        max_k = max_m = 0
        for d in bounded_dfas(seed, count, max_states):
            try:
                k, m = a_periodicity(d, max_game_states=max_game_states)
            except PeriodicityCapViolation:
                violations += 1
                if first_bad is None:
                    first_bad = serialize(d)
                continue
            max_k = max(max_k, k)
            max_m = max(max_m, m)
    measured = {"cap_violations": violations, "max_preperiod": max_k,
                "max_period": max_m, "instances": count}
    expected = {"cap_violations": 0}
    details = {} if first_bad is None else {"counterexample": first_bad}
    return Report(claim="periodicity",
                  params={"seed": seed, "count": count,
                          "max_states": max_states},
                  measured=measured, expected=expected,
                  passed=violations == 0, millis=clock.millis, details=details)


# ---------------------------------------------------------------------------
# core winning-set properties over a corpus

def is_downward_closed(wdfa):
    """Exact check that the language is closed under replacing B by A.

    Computes the pairs (p, q) for which some word is accepted from p but
    not from q; the language is downward closed iff for every reachable
    state the B-successor's language is contained in the A-successor's.
    """
    n = wdfa.state_count
    t0, t1 = wdfa.t0, wdfa.t1
    bad = [[False] * n for _ in range(n)]
    stack = []
    for p in range(n):
        for q in range(n):
            if (p in wdfa.finals) and (q not in wdfa.finals):
                bad[p][q] = True
                stack.append((p, q))
    preds = {}
    for p in range(n):
        for q in range(n):
            for tp, tq in ((t0[p], t0[q]), (t1[p], t1[q])):
                preds.setdefault((tp, tq), []).append((p, q))
    while stack:
        pair = stack.pop()
        for (p, q) in preds.get(pair, ()):
            if not bad[p][q]:
                bad[p][q] = True
                stack.append((p, q))
    seen = {wdfa.initial}
    frontier = [wdfa.initial]
    while frontier:
        q = frontier.pop()
        if bad[t1[q]][t0[q]]:  # reading B must not beat reading A
            return False
        for nxt in (t0[q], t1[q]):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return True


def _check_core_dfa(d, rng, max_oracle_len, max_card_len, max_game_states):
    """All winset-core invariants for one DFA; returns a failure tag or None."""
    w = winning_dfa(d, max_game_states)
    if d.state_count <= 6 and w.state_count > dedekind(d.state_count):
        return "dedekind-bound"
    for length in range(max_oracle_len + 1):
        want = oracle_winning_set(TargetSet.from_language(d, length))
        got = accepted_words(w, length)
        if want != got:
            return "oracle-equivalence@%d" % length
    for length in range(max_card_len + 1):
        if count_words(w, length) != count_words(d, length):
            return "cardinality@%d" % length
    if not is_downward_closed(w):
        return "downward-closure"
    eng = _Engine(d)
    full = (1 << d.state_count) - 1
    for _ in range(4):
        ga = eng.normalize(tuple({rng.randint(1, full) for _ in range(2)}))
        gb = eng.normalize(tuple({rng.randint(1, full) for _ in range(2)}))
        union = eng.normalize(ga + gb)
        for sym in (0, 1):
            left = eng.step(union, sym)
            right = eng.normalize(eng.step(ga, sym) + eng.step(gb, sym))
            if left != right:
                return "union-law"
        if eng.normalize(ga) != ga:
            return "normalize-idempotence"
    return None


def verify_core_properties(kind="exhaustive", n=2, seed=42, count=500,
                           min_states=4, max_states=6, max_oracle_len=8,
                           max_card_len=10,
                           max_game_states=DEFAULT_MAX_GAME_STATES):
    """Oracle equivalence, cardinality, downward closure, Dedekind bound,
    union law and normalization idempotence over a corpus of DFAs.

    kind "exhaustive" sweeps every n-state DFA; kind "seeded" uses the
    deterministic random corpus.  The first counterexample automaton, if
    any, is recorded verbatim in the report details.
    """
    with _Clock() as clock:
        if kind == "exhaustive":
            corpus = exhaustive_dfas(n)
            params = {"kind": kind, "n": n}
        elif kind == "seeded":
            corpus = seeded_dfas(seed, count, min_states, max_states)
            params = {"kind": kind, "seed": seed, "count": count,
                      "min_states": min_states, "max_states": max_states}
        else:
            raise ValueError("corpus kind must be exhaustive or seeded")
        rng = random.Random(seed)
        failures = {}
        total = 0
        for d in corpus:
            total += 1
            tag = _check_core_dfa(d, rng, max_oracle_len, max_card_len,
                                  max_game_states)
            if tag is not None and tag not in failures:
                failures[tag] = serialize(d)
    measured = {"instances": total, "failures": sorted(failures)}
    expected = {"failures": []}
    return Report(claim="core", params=params, measured=measured,
                  expected=expected, passed=not failures,
                  millis=clock.millis, details=failures)
