"""Winning-set automata via game-state determinization.

A game state over a base DFA is a set of state-sets: Alice commits to one
member set, Bob picks the actual state inside it.  Reading B replaces each
member by the set of all its successors; reading A replaces each member by
every set obtainable by choosing one successor per state.  A game state
accepts when some member lies entirely inside the final states.

Game states are kept in a normal form justified by three language-preserving
reductions: accepting sink states are dropped from members (Bob gains
nothing by sitting in a state that accepts forever), members containing a
state with no path to a final state are removed (Bob wins by parking there),
and members containing another member are removed (Alice prefers the smaller
set).  What survives is an antichain, stored as a sorted tuple of bitmasks.
"""

from .automata import Dfa, Nfa, moore_classes, minimize

DEFAULT_MAX_GAME_STATES = 5_000_000


class GameStateLimit(RuntimeError):
    """Raised when exploration would exceed the configured game-state cap."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(
            "game-state exploration exceeded the cap of %d states" % cap)


def _min_antichain(masks):
    """Inclusion-minimal members, sorted by bitmask value."""
    if not masks:
        return ()
    if 0 in masks:
        return (0,)  # the empty member absorbs everything
    kept = []
    for m in sorted(masks, key=int.bit_count):
        for k in kept:
            if k & m == k:  # k is a subset of m
                break
        else:
            kept.append(m)
    kept.sort()
    return tuple(kept)


class _Engine:
    """Per-automaton scratch space: precomputed masks and member-step caches."""

    def __init__(self, dfa):
        if dfa.alphabet != "01":
            raise ValueError("winning-set construction expects a base DFA "
                             "over the binary alphabet")
        self.dfa = dfa
        n = dfa.state_count
        t0, t1 = dfa.t0, dfa.t1
        finals_mask = 0
        for q in dfa.finals:
            finals_mask |= 1 << q
        self.finals_mask = finals_mask

        # states that still have a path to a final state
        coacc = finals_mask
        while True:
            grown = coacc
            for q in range(n):
                if (1 << t0[q]) & coacc or (1 << t1[q]) & coacc:
                    grown |= 1 << q
            if grown == coacc:
                break
            coacc = grown
        self.dead_mask = ((1 << n) - 1) & ~coacc

        sinks = 0
        for q in dfa.finals:
            if t0[q] == q and t1[q] == q:
                sinks |= 1 << q
        self.win_sink_mask = sinks

        self.pair = [(1 << t0[q], 1 << t1[q]) for q in range(n)]
        self.both = [a | b for a, b in self.pair]
        self._a_cache = {}
        self._b_cache = {}

    # -- member-level steps (bitmask -> bitmask(s) in member normal form) --

    def _member_norm(self, m):
        """Strip accepting sinks, then None if a dead state remains."""
        m &= ~self.win_sink_mask
        if m & self.dead_mask:
            return None
        return m

    def b_member(self, m):
        out = self._b_cache.get(m)
        if out is None:
            u = 0
            mm = m
            both = self.both
            while mm:
                q = (mm & -mm).bit_length() - 1
                u |= both[q]
                mm &= mm - 1
            out = self._member_norm(u)
            self._b_cache[m] = out
        return out

    def a_member(self, m):
        """Minimal choice-function images of one member, normalized."""
        out = self._a_cache.get(m)
        if out is not None:
            return out
        forced = 0
        options = []
        seen = set()
        mm = m
        pair = self.pair
        while mm:
            q = (mm & -mm).bit_length() - 1
            a, b = pair[q]
            if a == b:
                forced |= a
            else:
                key = a | b
                if key not in seen:
                    seen.add(key)
                    options.append((a, b))
            mm &= mm - 1
        images = {forced}
        for a, b in options:
            images = {x | a for x in images} | {x | b for x in images}
        survivors = set()
        for x in images:
            x = self._member_norm(x)
            if x is not None:
                survivors.add(x)
        out = _min_antichain(survivors)
        self._a_cache[m] = out
        return out

    # -- game-state level --

    def normalize(self, members):
        survivors = set()
        for m in members:
            m = self._member_norm(m)
            if m is not None:
                survivors.add(m)
        return _min_antichain(survivors)

    def step(self, gs, sym):
        if sym == 0:
            if len(gs) == 1:
                return self.a_member(gs[0])
            acc = set()
            for m in gs:
                acc.update(self.a_member(m))
        else:
            if len(gs) == 1:
                r = self.b_member(gs[0])
                return () if r is None else (r,)
            acc = set()
            for m in gs:
                r = self.b_member(m)
                if r is not None:
                    acc.add(r)
        return _min_antichain(acc)

    def walk(self, gs, word):
        """Iterated step over a turn word (letters A and B)."""
        for letter in word:
            if letter == "A":
                gs = self.step(gs, 0)
            elif letter == "B":
                gs = self.step(gs, 1)
            else:
                raise ValueError("letter %r is not A or B" % (letter,))
        return gs

    def accepting(self, gs):
        fm = self.finals_mask
        return any(m & ~fm == 0 for m in gs)

    def initial(self):
        return self.normalize((1 << self.dfa.initial,))

    def explore(self, seeds, max_states=DEFAULT_MAX_GAME_STATES):
        """Breadth-first closure under both letters, A first.

        Returns (states, t0, t1, accepting_flags, seed_indices); state 0 is
        the first seed and numbering follows discovery order, so the result
        is canonical for fixed seeds.
        """
        index = {}
        states = []
        seed_ids = []
        for gs in seeds:
            j = index.get(gs)
            if j is None:
                j = len(states)
                index[gs] = j
                states.append(gs)
            seed_ids.append(j)
        t0 = []
        t1 = []
        i = 0
        while i < len(states):
            gs = states[i]
            for sym, table in ((0, t0), (1, t1)):
                nxt = self.step(gs, sym)
                j = index.get(nxt)
                if j is None:
                    j = len(states)
                    if j >= max_states:
                        raise GameStateLimit(max_states)
                    index[nxt] = j
                    states.append(nxt)
                table.append(j)
            i += 1
        acc = [self.accepting(gs) for gs in states]
        return states, t0, t1, acc, seed_ids


class GameState:
    """One determinized state of the winning-set automaton.

    `sets` is the canonical tuple of member sets (frozensets of base-DFA
    states) sorted by their bitmask value.  Construction does not normalize;
    use `normalize` for the reduced form.
    """

    __slots__ = ("dfa", "sets")

    def __init__(self, dfa, sets):
        if not isinstance(dfa, Dfa):
            raise TypeError("base must be a Dfa")
        canon = {}
        for s in sets:
            mask = 0
            for q in s:
                if not 0 <= q < dfa.state_count:
                    raise ValueError("state %r out of range" % (q,))
                mask |= 1 << q
            canon[mask] = frozenset(s)
        self.dfa = dfa
        self.sets = tuple(canon[m] for m in sorted(canon))

    @classmethod
    def initial(cls, dfa):
        return cls(dfa, [{dfa.initial}])

    def _masks(self):
        out = []
        for s in self.sets:
            m = 0
            for q in s:
                m |= 1 << q
            out.append(m)
        return tuple(out)

    @classmethod
    def _from_masks(cls, dfa, masks):
        return cls(dfa, [_mask_to_set(m) for m in masks])

    def __eq__(self, other):
        if not isinstance(other, GameState):
            return NotImplemented
        return self.dfa == other.dfa and self.sets == other.sets

    def __hash__(self):
        return hash((self.dfa, self.sets))

    def __repr__(self):
        return "GameState(%s)" % (", ".join(
            "{%s}" % ",".join(str(q) for q in sorted(s)) for s in self.sets),)


def _mask_to_set(mask):
    out = set()
    while mask:
        q = (mask & -mask).bit_length() - 1
        out.add(q)
        mask &= mask - 1
    return frozenset(out)


def normalize(gs):
    """Reduced, canonically ordered form of a game state."""
    eng = _Engine(gs.dfa)
    return GameState._from_masks(gs.dfa, eng.normalize(gs._masks()))


def gs_step(gs, letter):
    """Game state reached after reading one turn letter (A or B)."""
    if letter not in ("A", "B"):
        raise ValueError("letter %r is not A or B" % (letter,))
    eng = _Engine(gs.dfa)
    masks = eng.normalize(gs._masks())
    return GameState._from_masks(gs.dfa, eng.step(masks, 0 if letter == "A" else 1))


def is_accepting(gs):
    """True when some member set consists of final states only."""
    finals = gs.dfa.finals
    return any(s <= finals for s in gs.sets)


def winning_nfa(dfa):
    """The canonical nondeterministic winning-set automaton.

    States are the subsets of the base automaton's states; reading B moves a
    subset to the set of all its successors, reading A branches to every
    choice-function image.  Exponential in the base size, so only sensible
    for small bases; the practical route is `winning_dfa`.
    """
    if dfa.alphabet != "01":
        raise ValueError("winning-set construction expects a base DFA "
                         "over the binary alphabet")
    n = dfa.state_count
    if n > 12:
        raise ValueError("refusing to build a %d-state subset NFA" % (1 << n,))
    size = 1 << n
    t0, t1 = dfa.t0, dfa.t1
    finals_mask = 0
    for q in dfa.finals:
        finals_mask |= 1 << q
    ta = []
    tb = []
    for mask in range(size):
        images = {0}
        union = 0
        mm = mask
        while mm:
            q = (mm & -mm).bit_length() - 1
            a, b = 1 << t0[q], 1 << t1[q]
            union |= a | b
            if a == b:
                images = {x | a for x in images}
            else:
                images = {x | a for x in images} | {x | b for x in images}
            mm &= mm - 1
        ta.append(frozenset(images))
        tb.append(frozenset({union}))
    finals = frozenset(m for m in range(size) if m & ~finals_mask == 0)
    return Nfa(size, {1 << dfa.initial}, finals, ta, tb, "AB")


def winning_raw(dfa, max_game_states=DEFAULT_MAX_GAME_STATES):
    """Unminimized winning-set DFA: reachable normalized game states only."""
    eng = _Engine(dfa)
    states, t0, t1, acc, _ = eng.explore([eng.initial()], max_game_states)
    finals = {i for i, a in enumerate(acc) if a}
    return Dfa(len(states), 0, finals, t0, t1, "AB")


def winning_dfa(dfa, max_game_states=DEFAULT_MAX_GAME_STATES):
    """Minimal DFA for the winning set of the base automaton's language."""
    return minimize(winning_raw(dfa, max_game_states))


def game_states_equivalent(dfa, gs1, gs2, max_game_states=DEFAULT_MAX_GAME_STATES):
    """Do two game states accept the same turn-order language?"""
    eng = _Engine(dfa)
    a = eng.normalize(gs1._masks() if isinstance(gs1, GameState) else tuple(gs1))
    b = eng.normalize(gs2._masks() if isinstance(gs2, GameState) else tuple(gs2))
    if a == b:
        return True
    states, t0, t1, acc, seeds = eng.explore([a, b], max_game_states)
    cls = moore_classes(len(states), t0, t1, acc)
    return cls[seeds[0]] == cls[seeds[1]]


def transformation(dfa, word):
    """The state map q -> delta(q, word), as a tuple over all states."""
    out = []
    for q in range(dfa.state_count):
        out.append(dfa.run(word, start=q))
    return tuple(out)


def congruent(wdfa, v, w):
    """Syntactic congruence test on a minimal winning-set DFA.

    Two words are congruent exactly when they induce the same state
    transformation; on a minimal automaton this is both sound and complete.
    """
    return transformation(wdfa, v) == transformation(wdfa, w)


def singleton_equiv_test(dfa, v, w):
    """Sufficient congruence test straight on the base automaton.

    If for every base state q the game states reached from {{q}} on v and on
    w agree on acceptance, then v and w are congruent for the winning set.
    A False answer is inconclusive.
    """
    eng = _Engine(dfa)
    for q in range(dfa.state_count):
        start = eng.normalize((1 << q,))
        if eng.accepting(eng.walk(start, v)) != eng.accepting(eng.walk(start, w)):
            return False
    return True
