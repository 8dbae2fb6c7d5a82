"""Binary-alphabet finite automata: determinization, minimization, structure."""

from collections import deque


class Dfa:
    """Complete deterministic automaton over a two-letter alphabet.

    States are dense integers 0..state_count-1.  The alphabet is a
    two-character string; the index of a letter is its wire symbol, so for
    the turn-order alphabet "AB" the letter A is symbol 0 and B is symbol 1.
    Transition tables are stored as two tuples (one per symbol), which keeps
    instances hashable and cheap to copy around in bulk enumerations.
    """

    __slots__ = ("state_count", "initial", "finals", "t0", "t1", "alphabet")

    def __init__(self, state_count, initial, finals, t0, t1, alphabet="01"):
        state_count = int(state_count)
        if state_count < 1:
            raise ValueError("automaton needs at least one state")
        if not 0 <= initial < state_count:
            raise ValueError("initial state %r out of range" % (initial,))
        if len(alphabet) != 2 or alphabet[0] == alphabet[1]:
            raise ValueError("alphabet must be two distinct letters")
        t0 = tuple(t0)
        t1 = tuple(t1)
        if len(t0) != state_count or len(t1) != state_count:
            raise ValueError("transition tables must cover every state")
        for table in (t0, t1):
            for q in table:
                if not 0 <= q < state_count:
                    raise ValueError("transition target %r out of range" % (q,))
        finals = frozenset(finals)
        for q in finals:
            if not 0 <= q < state_count:
                raise ValueError("final state %r out of range" % (q,))
        self.state_count = state_count
        self.initial = initial
        self.finals = finals
        self.t0 = t0
        self.t1 = t1
        self.alphabet = alphabet

    def __setattr__(self, name, value):
        if hasattr(self, "alphabet"):
            raise AttributeError("Dfa instances are immutable")
        object.__setattr__(self, name, value)

    def step(self, q, sym):
        return self.t0[q] if sym == 0 else self.t1[q]

    def symbol(self, letter):
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise ValueError("letter %r not in alphabet %r" % (letter, self.alphabet))

    def run(self, word, start=None):
        """State reached from `start` (default: initial) after reading `word`."""
        q = self.initial if start is None else start
        t0, t1 = self.t0, self.t1
        a0 = self.alphabet[0]
        for letter in word:
            if letter == a0:
                q = t0[q]
            else:
                self.symbol(letter)
                q = t1[q]
        return q

    def accepts(self, word):
        return self.run(word) in self.finals

    def __eq__(self, other):
        if not isinstance(other, Dfa):
            return NotImplemented
        return (self.state_count == other.state_count
                and self.initial == other.initial
                and self.finals == other.finals
                and self.t0 == other.t0
                and self.t1 == other.t1
                and self.alphabet == other.alphabet)

    def __hash__(self):
        return hash((self.state_count, self.initial, self.finals,
                     self.t0, self.t1, self.alphabet))

    def __repr__(self):
        return "Dfa(%d states, initial=%d, finals=%s, alphabet=%r)" % (
            self.state_count, self.initial, sorted(self.finals), self.alphabet)


class Nfa:
    """Nondeterministic automaton; `trans[sym][q]` is a frozenset of targets."""

    __slots__ = ("state_count", "initials", "finals", "t0", "t1", "alphabet")

    def __init__(self, state_count, initials, finals, t0, t1, alphabet="01"):
        state_count = int(state_count)
        if state_count < 1:
            raise ValueError("automaton needs at least one state")
        if len(alphabet) != 2 or alphabet[0] == alphabet[1]:
            raise ValueError("alphabet must be two distinct letters")
        t0 = tuple(frozenset(s) for s in t0)
        t1 = tuple(frozenset(s) for s in t1)
        if len(t0) != state_count or len(t1) != state_count:
            raise ValueError("transition tables must cover every state")
        initials = frozenset(initials)
        finals = frozenset(finals)
        for group in (initials, finals, *t0, *t1):
            for q in group:
                if not 0 <= q < state_count:
                    raise ValueError("state id %r out of range" % (q,))
        self.state_count = state_count
        self.initials = initials
        self.finals = finals
        self.t0 = t0
        self.t1 = t1
        self.alphabet = alphabet

    def __setattr__(self, name, value):
        if hasattr(self, "alphabet"):
            raise AttributeError("Nfa instances are immutable")
        object.__setattr__(self, name, value)

    def step(self, states, sym):
        table = self.t0 if sym == 0 else self.t1
        out = set()
        for q in states:
            out |= table[q]
        return frozenset(out)

    def accepts(self, word):
        cur = self.initials
        for letter in word:
            cur = self.step(cur, self.symbol(letter))
        return bool(cur & self.finals)

    def symbol(self, letter):
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise ValueError("letter %r not in alphabet %r" % (letter, self.alphabet))

    def __eq__(self, other):
        if not isinstance(other, Nfa):
            return NotImplemented
        return (self.state_count == other.state_count
                and self.initials == other.initials
                and self.finals == other.finals
                and self.t0 == other.t0
                and self.t1 == other.t1
                and self.alphabet == other.alphabet)

    def __hash__(self):
        return hash((self.state_count, self.initials, self.finals,
                     self.t0, self.t1, self.alphabet))

    def __repr__(self):
        return "Nfa(%d states, initials=%s, finals=%s, alphabet=%r)" % (
            self.state_count, sorted(self.initials), sorted(self.finals),
            self.alphabet)


def determinize(nfa):
    """Subset construction restricted to reachable subsets.

    States are numbered in breadth-first discovery order with symbol 0
    explored before symbol 1, so equal inputs give bit-identical outputs.
    An empty initial set yields the one-state rejecting automaton.
    """
    init = frozenset(nfa.initials)
    index = {init: 0}
    order = [init]
    t0, t1 = [], []
    finals = set()
    if init & nfa.finals:
        finals.add(0)
    i = 0
    while i < len(order):
        cur = order[i]
        for sym, table in ((0, t0), (1, t1)):
            nxt = nfa.step(cur, sym)
            j = index.get(nxt)
            if j is None:
                j = len(order)
                index[nxt] = j
                order.append(nxt)
                if nxt & nfa.finals:
                    finals.add(j)
            table.append(j)
        i += 1
    return Dfa(len(order), 0, finals, t0, t1, nfa.alphabet)


def _reachable_order(dfa):
    seen = [False] * dfa.state_count
    seen[dfa.initial] = True
    order = [dfa.initial]
    t0, t1 = dfa.t0, dfa.t1
    i = 0
    while i < len(order):
        q = order[i]
        for nxt in (t0[q], t1[q]):
            if not seen[nxt]:
                seen[nxt] = True
                order.append(nxt)
        i += 1
    return order


def moore_classes(state_count, t0, t1, accepting):
    """Coarsest congruence refining the accepting split; returns class ids.

    `accepting` is a sequence of booleans.  Classic Moore iteration: color
    states, refine by (color, successor colors) signatures until stable.
    """
    color = [1 if accepting[q] else 0 for q in range(state_count)]
    ncolors = len(set(color))
    while True:
        buckets = {}
        new = [0] * state_count
        for q in range(state_count):
            sig = (color[q], color[t0[q]], color[t1[q]])
            c = buckets.get(sig)
            if c is None:
                c = len(buckets)
                buckets[sig] = c
            new[q] = c
        if len(buckets) == ncolors:
            return new
        color = new
        ncolors = len(buckets)


def minimize(dfa):
    """Minimal automaton for the same language, in canonical form.

    Unreachable states are discarded, equivalent states merged, and the
    result renumbered by breadth-first order (symbol 0 first), so any two
    automata with the same language minimize to bit-identical values.
    """
    order = _reachable_order(dfa)
    pos = {q: i for i, q in enumerate(order)}
    m = len(order)
    rt0 = [pos[dfa.t0[q]] for q in order]
    rt1 = [pos[dfa.t1[q]] for q in order]
    acc = [q in dfa.finals for q in order]
    cls = moore_classes(m, rt0, rt1, acc)

    # one representative per class, then canonical BFS renumbering
    rep_t0 = {}
    rep_t1 = {}
    rep_acc = {}
    for i in range(m):
        c = cls[i]
        if c not in rep_t0:
            rep_t0[c] = cls[rt0[i]]
            rep_t1[c] = cls[rt1[i]]
            rep_acc[c] = acc[i]
    start = cls[pos[dfa.initial]]
    number = {start: 0}
    out_order = [start]
    t0, t1 = [], []
    i = 0
    while i < len(out_order):
        c = out_order[i]
        for nxt, table in ((rep_t0[c], t0), (rep_t1[c], t1)):
            j = number.get(nxt)
            if j is None:
                j = len(out_order)
                number[nxt] = j
                out_order.append(nxt)
            table.append(j)
        i += 1
    finals = {number[c] for c in out_order if rep_acc[c]}
    return Dfa(len(out_order), 0, finals, t0, t1, dfa.alphabet)


def equivalent(a, b):
    """True iff the two complete DFAs accept the same language."""
    if a.alphabet != b.alphabet:
        raise ValueError("cannot compare automata over different alphabets")
    seen = {(a.initial, b.initial)}
    frontier = deque(seen)
    while frontier:
        p, q = frontier.popleft()
        if (p in a.finals) != (q in b.finals):
            return False
        for pair in ((a.t0[p], b.t0[q]), (a.t1[p], b.t1[q])):
            if pair not in seen:
                seen.add(pair)
                frontier.append(pair)
    return True


class CycleStructure:
    """Cycle skeleton of a transition graph.

    cycle_lengths lists the lengths of the simple cycles found on the
    reachable part (parallel edges collapsed); acyclic_count is the number
    of reachable states on no cycle; disjoint is False when some state lies
    on two distinct cycles, in which case cycle_lengths only reports the
    clean ones.
    """

    __slots__ = ("cycle_lengths", "acyclic_count", "disjoint")

    def __init__(self, cycle_lengths, acyclic_count, disjoint):
        self.cycle_lengths = tuple(cycle_lengths)
        self.acyclic_count = int(acyclic_count)
        self.disjoint = bool(disjoint)

    def __eq__(self, other):
        if not isinstance(other, CycleStructure):
            return NotImplemented
        return (self.cycle_lengths == other.cycle_lengths
                and self.acyclic_count == other.acyclic_count
                and self.disjoint == other.disjoint)

    def __repr__(self):
        return "CycleStructure(cycle_lengths=%s, acyclic_count=%d, disjoint=%s)" % (
            list(self.cycle_lengths), self.acyclic_count, self.disjoint)


class AnalysisResult:
    """Result of `analyze`: cycle structure plus distance-to-final map."""

    __slots__ = ("cycles", "final_distance")

    def __init__(self, cycles, final_distance):
        self.cycles = cycles
        self.final_distance = tuple(final_distance)

    def __repr__(self):
        return "AnalysisResult(%r, final_distance=%s)" % (
            self.cycles, list(self.final_distance))


def _tarjan_sccs(nodes, succ):
    # iterative Tarjan; returns list of components, each a list of nodes
    index = {}
    low = {}
    onstack = set()
    stack = []
    sccs = []
    counter = [0]
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        onstack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                elif w in onstack:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def analyze(dfa):
    """Cycle structure of the reachable subgraph and distances to a final state.

    A strongly connected component is a clean cycle when every member has a
    single distinct successor inside it (a self-loop counts, and the two
    parallel edges of a both-symbol self-loop count once).  final_distance[q]
    is the length of a shortest path from q to any final state, or None.
    """
    order = _reachable_order(dfa)
    t0, t1 = dfa.t0, dfa.t1

    def succ(q):
        a, b = t0[q], t1[q]
        yield a
        if b != a:
            yield b

    sccs = _tarjan_sccs(order, succ)
    cycles = []
    acyclic = 0
    disjoint = True
    for comp in sccs:
        members = set(comp)
        if len(comp) == 1:
            q = comp[0]
            if t0[q] == q or t1[q] == q:
                cycles.append((min(comp), 1))
            else:
                acyclic += 1
            continue
        simple = all(len(set(succ(q)) & members) == 1 for q in comp)
        if simple:
            cycles.append((min(comp), len(comp)))
        else:
            disjoint = False
    cycles.sort()
    structure = CycleStructure([ln for _, ln in cycles], acyclic, disjoint)

    # backward BFS from the finals over the reversed edge relation
    rev = [[] for _ in range(dfa.state_count)]
    for q in range(dfa.state_count):
        rev[t0[q]].append(q)
        rev[t1[q]].append(q)
    dist = [None] * dfa.state_count
    frontier = deque()
    for q in dfa.finals:
        dist[q] = 0
        frontier.append(q)
    while frontier:
        q = frontier.popleft()
        d = dist[q] + 1
        for p in rev[q]:
            if dist[p] is None:
                dist[p] = d
                frontier.append(p)
    return AnalysisResult(structure, dist)


def count_words(dfa, length):
    """Number of accepted words of exactly the given length."""
    vec = [0] * dfa.state_count
    vec[dfa.initial] = 1
    t0, t1 = dfa.t0, dfa.t1
    for _ in range(length):
        nxt = [0] * dfa.state_count
        for q, c in enumerate(vec):
            if c:
                nxt[t0[q]] += c
                nxt[t1[q]] += c
        vec = nxt
    return sum(c for q, c in enumerate(vec) if q in dfa.finals)


def accepted_words(dfa, length):
    """Set of all accepted words of exactly the given length."""
    if length > 24:
        raise ValueError("refusing to enumerate %d-letter words" % length)
    a, b = dfa.alphabet
    out = set()
    stack = [(dfa.initial, "")]
    t0, t1 = dfa.t0, dfa.t1
    while stack:
        q, w = stack.pop()
        if len(w) == length:
            if q in dfa.finals:
                out.add(w)
            continue
        stack.append((t0[q], w + a))
        stack.append((t1[q], w + b))
    return out
