"""Brute-force oracle for the word-construction game.

Alice and Bob build a binary word letter by letter; the turn order (a word
over {A, B}) says who picks each position, and Alice wins when the result
lands in the target set.  The winning set of a target is computed here
directly from its recursive definition, with no automata involved, which
makes it the independent reference for the automaton pipeline: splitting on
the first letter, a turn order A·w is winning iff w wins on the target's
0-residual or on its 1-residual, and B·w is winning iff w wins on both.
"""

from .automata import accepted_words


class TargetSet:
    """A finite set of equal-length binary words."""

    __slots__ = ("length", "words")

    def __init__(self, length, words):
        length = int(length)
        if length < 0:
            raise ValueError("length must be nonnegative")
        words = frozenset(words)
        for w in words:
            if len(w) != length:
                raise ValueError("word %r does not have length %d" % (w, length))
            if any(c not in "01" for c in w):
                raise ValueError("word %r is not binary" % (w,))
        self.length = length
        self.words = words

    @classmethod
    def from_language(cls, dfa, length):
        """The length-n slice of a DFA's language."""
        if dfa.alphabet != "01":
            raise ValueError("target sets live over the binary alphabet")
        return cls(length, accepted_words(dfa, length))

    def residual(self, bit):
        return frozenset(w[1:] for w in self.words if w[0] == bit)

    def __repr__(self):
        return "TargetSet(length=%d, %d words)" % (self.length, len(self.words))


def _winning(words, cache):
    """Winning turn orders of an equal-length residual target, memoized."""
    hit = cache.get(words)
    if hit is not None:
        return hit
    if not words:
        result = frozenset()
    elif "" in words:
        result = frozenset({""})
    else:
        zero = _winning(frozenset(w[1:] for w in words if w[0] == "0"), cache)
        one = _winning(frozenset(w[1:] for w in words if w[0] == "1"), cache)
        result = frozenset({"A" + w for w in zero | one}
                           | {"B" + w for w in zero & one})
    cache[words] = result
    return result


def oracle_winning_set(target):
    """All turn orders of the target's length on which Alice can force a win."""
    return set(_winning(target.words, {}))


def alice_wins(target, turn_word):
    """Does Alice have a winning strategy for this turn order?

    Same recursion as `oracle_winning_set` but without materializing the
    whole winning set; the turn word must have the target's length.
    """
    if len(turn_word) != target.length:
        raise ValueError("turn word %r does not match target length %d"
                         % (turn_word, target.length))
    if any(c not in "AB" for c in turn_word):
        raise ValueError("turn word %r is not over {A, B}" % (turn_word,))
    cache = {}

    def wins(words, w):
        if not words:
            return False
        if not w:
            return True  # words == {""} at this point
        key = (words, len(w))
        hit = cache.get(key)
        if hit is not None:
            return hit
        zero = frozenset(x[1:] for x in words if x[0] == "0")
        one = frozenset(x[1:] for x in words if x[0] == "1")
        rest = w[1:]
        if w[0] == "A":
            result = wins(zero, rest) or wins(one, rest)
        else:
            result = wins(zero, rest) and wins(one, rest)
        cache[key] = result
        return result

    return wins(target.words, turn_word)
