"""Builders for the automaton families used in the winning-set experiments.

The lower-bound construction is assembled from three components:

* a subset factory: a ladder of branch states b_1..b_n feeding a conveyor
  chain, on which a two-letter round per index either deposits a token (BA)
  or does not (AB), so that after the n rounds the surviving member set is
  exactly {o_i : i chosen};
* a game-state factory: two cycles of length 3n+1 around the subset factory;
  a pilot set circles the left cycle and sprouts one factory run per round,
  while finished token sets rotate unchanged in the right cycle;
* a testing gadget: a chain q_1..q_n with a branch to a dead trap, followed
  by an accepting chain q_{n+1}..q_{2n} that falls into a second dead trap,
  so that a member {q_i : i in I} survives the probe word for P exactly
  when I is contained in P.

Transition labels inside the components are immaterial for winning sets, so
each branch state assigns symbol 0 and 1 arbitrarily.  Correctness is pinned
by behavioral unit tests, not by a golden adjacency list.  Two departures
from the usual drawing were forced by the behavior itself: the composed
automaton paces the factory's ladder with one extra state u (the accepting
sink must sit 2n+2 letters from a1, or the probe phase accepts spuriously
on the all-A word by downward closure), and a buffer q0 sits between the
factory exit and q1 so that a token leaving r_u lands on q_u after exactly
n+1 letters.  That puts the combined automaton at 15n+5 states, two more
than the advertised 15n+3; the discrepancy is surfaced in Gadget.meta.
"""

from .automata import Dfa


class Gadget:
    """A DFA together with named ports into its states."""

    __slots__ = ("dfa", "ports", "kind", "meta")

    def __init__(self, dfa, ports, kind, meta=None):
        seen = {}
        for name, q in ports.items():
            if not 0 <= q < dfa.state_count:
                raise ValueError("port %r points at invalid state %r" % (name, q))
            if name in seen:
                raise ValueError("duplicate port name %r" % (name,))
            seen[name] = q
        self.dfa = dfa
        self.ports = dict(ports)
        self.kind = kind
        self.meta = dict(meta or {})

    def __repr__(self):
        return "Gadget(%s, %d states, ports=%s)" % (
            self.kind, self.dfa.state_count, sorted(self.ports))


class _Graph:
    """Named-state DFA under construction; dangling edges go to a sink."""

    def __init__(self):
        self.order = []
        self.ids = {}
        self.succ = {}
        self.finals = set()

    def node(self, name):
        if name not in self.ids:
            self.ids[name] = len(self.order)
            self.order.append(name)
        return self.ids[name]

    def edge(self, src, on0, on1):
        self.node(src)
        if src in self.succ:
            raise ValueError("state %r wired twice" % (src,))
        self.succ[src] = (on0, on1)

    def final(self, name):
        self.finals.add(name)

    def build(self, initial):
        needs_sink = any(t is None for pair in self.succ.values() for t in pair)
        needs_sink = needs_sink or any(name not in self.succ for name in self.order)
        sink = None
        if needs_sink:
            sink = self.node("sink")
            self.succ.setdefault("sink", ("sink", "sink"))
        t0, t1 = [], []
        for name in self.order:
            pair = self.succ.get(name, (None, None))
            resolved = []
            for target in pair:
                if target is None:
                    target = "sink"
                resolved.append(self.node(target))
            t0.append(resolved[0])
            t1.append(resolved[1])
        finals = {self.ids[name] for name in self.finals}
        return Dfa(len(self.order), self.ids[initial], finals, t0, t1), sink


def _subset_states(g, n, chain_exit, paced=False):
    """Wire the subset factory into `g`; chain_exit is where the conveyor
    continues (None leaves it dangling).

    With `paced` the last ladder hop goes through an extra state u, which
    delays the accepting sink by one letter.  Standalone the gadget must
    reach the sink after exactly 2n letters (the no-token round word parks
    Alice there), but inside the lower-bound composition the sink has to be
    2n+2 letters away from the a1 entry or the probe phase could cheat by
    running straight down the ladder."""
    for i in range(1, n + 1):
        g.node("b%d" % i)
    g.node("b%d" % (n + 1))
    for i in range(1, n + 1):
        g.edge("b%d" % i, "d%d" % i, "c%d" % i)
        if i < n or not paced:
            g.edge("d%d" % i, "b%d" % (i + 1), "b%d" % (i + 1))
        else:
            g.edge("d%d" % n, "u", "u")
    if paced:
        g.edge("u", "b%d" % (n + 1), "b%d" % (n + 1))
    g.edge("b%d" % (n + 1), "b%d" % (n + 1), "b%d" % (n + 1))
    g.final("b%d" % (n + 1))
    for i in range(1, n + 1):
        g.edge("c%d" % i, "s%d" % i, "e%d" % (3 * i - 2))
        g.edge("s%d" % i, "s%d" % i, "s%d" % i)
    top = 3 * n - 2
    for j in range(1, top):
        g.edge("e%d" % j, "e%d" % (j + 1), "e%d" % (j + 1))
    g.edge("e%d" % top, chain_exit, chain_exit)


def _subset_ports(g, n):
    ports = {"b1": g.node("b1"), "b%d" % (n + 1): g.node("b%d" % (n + 1))}
    for i in range(1, n + 1):
        ports["o%d" % i] = g.node("e%d" % (2 * n + i - 2))
    return ports


def _testing_states(g, n):
    for i in range(1, 2 * n + 1):
        g.node("q%d" % i)
    for i in range(1, 2 * n + 1):
        if i == n:
            g.edge("q%d" % n, "r", "q%d" % (n + 1))
        elif i == 2 * n:
            g.edge("q%d" % (2 * n), "r'", "r'")
        else:
            g.edge("q%d" % i, "q%d" % (i + 1), "q%d" % (i + 1))
    g.edge("r", "r", "r")
    g.edge("r'", "r'", "r'")
    for i in range(n + 1, 2 * n + 1):
        g.final("q%d" % i)


def _testing_ports(g, n):
    ports = {"r": g.node("r"), "r'": g.node("r'")}
    for i in range(1, 2 * n + 1):
        ports["q%d" % i] = g.node("q%d" % i)
    return ports


def _factory_states(g, n, exit_target):
    size = 3 * n + 1
    for i in range(1, size + 1):
        g.node("a%d" % i)
    g.edge("a1", "a2", "b1")
    for i in range(2, size):
        g.edge("a%d" % i, "a%d" % (i + 1), "a%d" % (i + 1))
    g.edge("a%d" % size, "a1", "a1")
    _subset_states(g, n, "r1", paced=True)
    for i in range(1, size + 1):
        if i == n:
            g.edge("r%d" % n, "r%d" % (n + 1), exit_target)
        elif i == size:
            g.edge("r%d" % size, "r1", "r1")
        else:
            g.edge("r%d" % i, "r%d" % (i + 1), "r%d" % (i + 1))


def _factory_ports(g, n):
    ports = {"a1": g.node("a1")}
    for i in range(1, 3 * n + 2):
        ports["r%d" % i] = g.node("r%d" % i)
    ports.update(_subset_ports(g, n))
    return ports


def build_gadget(kind, n):
    """Construct one of the gadget automata.

    Kinds: "subset" (token conveyor entered at b1), "testing" (probe chain
    entered at q1), "state_factory" (both cycles, exit dangling at r_n), and
    "lower_bound" (factory wired into the testing chain, initial a1).
    Dangling edges are completed with a fresh rejecting sink.
    """
    if n < 1:
        raise ValueError("gadget size must be at least 1")
    g = _Graph()
    if kind == "subset":
        _subset_states(g, n, None, paced=False)
        dfa, _ = g.build("b1")
        return Gadget(dfa, _subset_ports(g, n), kind)
    if kind == "testing":
        _testing_states(g, n)
        dfa, _ = g.build("q1")
        return Gadget(dfa, _testing_ports(g, n), kind)
    if kind == "state_factory":
        _factory_states(g, n, None)
        dfa, _ = g.build("a1")
        return Gadget(dfa, _factory_ports(g, n), kind)
    if kind == "lower_bound":
        _factory_states(g, n, "q0")
        g.edge("q0", "q1", "q1")
        _testing_states(g, n)
        dfa, _ = g.build("a1")
        ports = _factory_ports(g, n)
        ports["q0"] = g.node("q0")
        ports.update(_testing_ports(g, n))
        quoted = 15 * n + 3
        meta = {
            "quoted_state_count": quoted,
            "state_count": dfa.state_count,
            "state_count_delta": dfa.state_count - quoted,
            "note": "two ladder pace states and the q0 entry buffer are "
                    "required by the distinguishing experiment; reconstruction "
                    "runs a constant 2 states over the advertised total",
        }
        return Gadget(dfa, ports, kind, meta)
    raise ValueError("unknown gadget kind %r" % (kind,))


def _subset_arg(n, arg):
    s = set(arg)
    for i in s:
        if not 1 <= int(i) <= n:
            raise ValueError("index %r outside 1..%d" % (i, n))
    return frozenset(int(i) for i in s)


def subset_word(n, chosen):
    """Round word of length 2n: BA deposits index i, AB skips it."""
    s = _subset_arg(n, chosen)
    return "".join("BA" if i in s else "AB" for i in range(1, n + 1))


def probe_word(n, probe):
    """Probe word of length n; position i is A exactly when n-i+1 is probed."""
    p = _subset_arg(n, probe)
    return "".join("A" if (n - i + 1) in p else "B" for i in range(1, n + 1))


def gen_word(n, antichain):
    """Factory word: one A + subset round + n trailing As per member set.

    The member sets must form an antichain (none contains another); they are
    processed in increasing bitmask order, giving a fixed word of length
    len(antichain) * (3n+1).
    """
    sets = [_subset_arg(n, s) for s in antichain]
    masks = []
    for s in sets:
        m = 0
        for i in s:
            m |= 1 << (i - 1)
        masks.append(m)
    if len(set(masks)) != len(masks):
        raise ValueError("antichain members must be distinct")
    for x in masks:
        for y in masks:
            if x != y and x & y == x:
                raise ValueError("not an antichain: one member contains another")
    order = sorted(range(len(sets)), key=lambda k: masks[k])
    return "".join("A" + subset_word(n, sets[k]) + "A" * n for k in order)


def turn_word(kind, n, arg):
    """Witness turn words: kind is "subset", "test" or "gen"."""
    if kind == "subset":
        return subset_word(n, arg)
    if kind == "test":
        return probe_word(n, arg)
    if kind == "gen":
        return gen_word(n, arg)
    raise ValueError("unknown turn word kind %r" % (kind,))


def chain_dfa(m, p, finals, one_bounded=False):
    """Chain automaton: a path with a self-loop on every state.

    States 0..m+p-1 with symbol 0 looping and symbol 1 advancing; when p is
    positive the last p states close into a cycle.  With p = 0 the end of
    the chain has nowhere to advance to, so the last state is made absorbing
    on both symbols; requesting `one_bounded` additionally insists that this
    absorbing state is not final, which keeps the accepted 1-counts bounded.
    """
    if m < 1 or p < 0:
        raise ValueError("need m >= 1 and p >= 0")
    n = m + p
    finals = frozenset(int(q) for q in finals)
    for q in finals:
        if not 0 <= q < n:
            raise ValueError("final state %r outside 0..%d" % (q, n - 1))
    if one_bounded:
        if p != 0:
            raise ValueError("a 1-bounded chain has no end cycle")
        if m - 1 in finals:
            raise ValueError("a 1-bounded chain's last state must not be final")
    t0 = list(range(n))
    if p == 0:
        t1 = [q + 1 for q in range(n - 1)] + [n - 1]
    else:
        t1 = [q + 1 for q in range(n - 1)] + [m]
    return Dfa(n, 0, finals, t0, t1)


def exact_k_dfa(n):
    """Minimal DFA for the words containing exactly n ones."""
    if n < 1:
        raise ValueError("need n >= 1")
    size = n + 2
    t0 = list(range(size))
    t1 = [q + 1 for q in range(n + 1)] + [n + 1]
    return Dfa(size, 0, {n}, t0, t1)


def exact_k_symbolic_wdfa(n):
    """Winning-set DFA of the exact-n-ones language, built symbolically.

    Every reachable game state of the exact-n base is equivalent to an
    interval of intervals: N windows of common length l whose leftmost
    window starts at i.  Reading B widens the windows by one, reading A
    either shrinks them from the left (l > 1) or, on singleton windows,
    appends one more window.  Windows that would slide past the dead state
    n+1 are dropped; when none survive the run falls into a rejecting sink.
    A state accepts when its windows are singletons and one of them sits on
    the final state n.  The triple space has (n+1)(n+2)(n+3)/6 points, one
    state each, plus the sink.
    """
    if n < 1:
        raise ValueError("need n >= 1")

    sink = "sink"

    def a_next(state):
        if state == sink:
            return sink
        i, l, N = state
        if l == 1:
            return (i, 1, min(N + 1, n - i + 1))
        return (i + 1, l - 1, N)

    def b_next(state):
        if state == sink:
            return sink
        i, l, N = state
        N2 = min(N, n - i - l + 1)
        if N2 < 1:
            return sink
        return (i, l + 1, N2)

    start = (0, 1, 1)
    index = {start: 0}
    order = [start]
    t0, t1 = [], []
    pos = 0
    while pos < len(order):
        cur = order[pos]
        for table, nxt in ((t0, a_next(cur)), (t1, b_next(cur))):
            j = index.get(nxt)
            if j is None:
                j = len(order)
                index[nxt] = j
                order.append(nxt)
            table.append(j)
        pos += 1
    finals = set()
    for st in order:
        if st == sink:
            continue
        i, l, N = st
        if l == 1 and i <= n <= i + N - 1:
            finals.add(index[st])
    return Dfa(len(order), 0, finals, t0, t1, "AB")


def dyck_dfa(max_balance):
    """Balance-counter DFA for balanced parentheses, 0 opening, 1 closing.

    Balances above max_balance or below zero fall into a rejecting sink, so
    the length-m slice of the language is exactly the Dyck words whenever
    m <= max_balance.
    """
    if max_balance < 1:
        raise ValueError("need max_balance >= 1")
    sink = max_balance + 1
    t0 = [b + 1 if b < max_balance else sink for b in range(max_balance + 1)]
    t1 = [b - 1 if b > 0 else sink for b in range(max_balance + 1)]
    t0.append(sink)
    t1.append(sink)
    return Dfa(max_balance + 2, 0, {0}, t0, t1)
