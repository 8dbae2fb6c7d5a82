"""Line-oriented automaton text format and DOT export.

DFA files:

    dfa <state_count> <initial> [ab]
    finals <id> <id> ...
    t <state> <target-on-0> <target-on-1>

NFA files use `nfa <state_count> [ab]`, an `initials` line, and sparse
set-valued transitions `t <state> <sym> <id,id,...>` (missing lines mean the
empty target set).  The optional `ab` tag selects the turn-order alphabet,
with A on wire symbol 0 and B on wire symbol 1.  Lines starting with `#` are
comments; gadget dumps use them to carry `# port <name> <id>` annotations.

Automata with missing transitions are completed with a fresh rejecting sink.
"""

from .automata import Dfa, Nfa


class ParseError(ValueError):
    def __init__(self, line_no, field, message):
        self.line_no = line_no
        self.field = field
        super().__init__("line %d, %s: %s" % (line_no, field, message))


def _alphabet_tag(alphabet):
    return " ab" if alphabet == "AB" else ""


def serialize(automaton):
    """Canonical text form: header, finals, transitions in state order."""
    lines = []
    if isinstance(automaton, Dfa):
        lines.append("dfa %d %d%s" % (automaton.state_count, automaton.initial,
                                      _alphabet_tag(automaton.alphabet)))
        lines.append("finals " + " ".join(str(q) for q in sorted(automaton.finals)))
        for q in range(automaton.state_count):
            lines.append("t %d %d %d" % (q, automaton.t0[q], automaton.t1[q]))
    elif isinstance(automaton, Nfa):
        lines.append("nfa %d%s" % (automaton.state_count,
                                   _alphabet_tag(automaton.alphabet)))
        lines.append("initials " + " ".join(str(q) for q in sorted(automaton.initials)))
        lines.append("finals " + " ".join(str(q) for q in sorted(automaton.finals)))
        for q in range(automaton.state_count):
            for sym, table in ((0, automaton.t0), (1, automaton.t1)):
                targets = sorted(table[q])
                if targets:
                    lines.append("t %d %d %s" % (q, sym,
                                                 ",".join(str(x) for x in targets)))
    else:
        raise TypeError("expected a Dfa or Nfa, got %r" % (automaton,))
    return "\n".join(lines) + "\n"


def _int_field(raw, line_no, field):
    try:
        return int(raw)
    except ValueError:
        raise ParseError(line_no, field, "expected an integer, got %r" % raw)


def _id_list(raw_items, line_no, field, state_count):
    out = []
    for raw in raw_items:
        q = _int_field(raw, line_no, field)
        if not 0 <= q < state_count:
            raise ParseError(line_no, field,
                             "state %d out of range 0..%d" % (q, state_count - 1))
        out.append(q)
    return out


def parse(text):
    """Parse an automaton file; returns a Dfa or Nfa.

    Missing transitions are filled in by `complete` with a rejecting sink.
    Use `parse_with_report` when the caller needs to know whether that
    happened.
    """
    return parse_with_report(text)[0]


def parse_with_report(text):
    """Like `parse`, but also returns True when a completion sink was added."""
    kind = None
    state_count = None
    initial = None
    alphabet = "01"
    initials = None
    finals = None
    dfa_rows = {}
    nfa_rows = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag in ("dfa", "nfa"):
            if kind is not None:
                raise ParseError(line_no, "header", "duplicate header line")
            kind = tag
            want = 3 if tag == "dfa" else 2
            body = parts[1:]
            if body and body[-1] == "ab":
                alphabet = "AB"
                body = body[:-1]
            if len(body) != want - 1:
                raise ParseError(line_no, "header",
                                 "expected %r with %d fields" % (tag, want - 1))
            state_count = _int_field(body[0], line_no, "state_count")
            if state_count < 1:
                raise ParseError(line_no, "state_count", "must be positive")
            if tag == "dfa":
                initial = _int_field(body[1], line_no, "initial")
                if not 0 <= initial < state_count:
                    raise ParseError(line_no, "initial", "state out of range")
        elif kind is None:
            raise ParseError(line_no, "header", "file must start with dfa/nfa header")
        elif tag == "finals":
            if finals is not None:
                raise ParseError(line_no, "finals", "duplicate finals line")
            finals = _id_list(parts[1:], line_no, "finals", state_count)
        elif tag == "initials":
            if kind != "nfa":
                raise ParseError(line_no, "initials", "only valid in nfa files")
            if initials is not None:
                raise ParseError(line_no, "initials", "duplicate initials line")
            initials = _id_list(parts[1:], line_no, "initials", state_count)
        elif tag == "t":
            if kind == "dfa":
                if len(parts) != 4:
                    raise ParseError(line_no, "transition",
                                     "expected `t <state> <on0> <on1>`")
                q, a, b = _id_list(parts[1:], line_no, "transition", state_count)
                if q in dfa_rows:
                    raise ParseError(line_no, "transition",
                                     "duplicate row for state %d" % q)
                dfa_rows[q] = (a, b)
            else:
                if len(parts) != 4:
                    raise ParseError(line_no, "transition",
                                     "expected `t <state> <sym> <id,id,...>`")
                q = _int_field(parts[1], line_no, "transition")
                sym = _int_field(parts[2], line_no, "symbol")
                if not 0 <= q < state_count:
                    raise ParseError(line_no, "transition", "state out of range")
                if sym not in (0, 1):
                    raise ParseError(line_no, "symbol", "must be 0 or 1")
                targets = _id_list(parts[3].split(","), line_no, "transition",
                                   state_count)
                if (q, sym) in nfa_rows:
                    raise ParseError(line_no, "transition",
                                     "duplicate row for state %d symbol %d" % (q, sym))
                nfa_rows[(q, sym)] = frozenset(targets)
        else:
            raise ParseError(line_no, "record", "unknown record %r" % tag)
    if kind is None:
        raise ParseError(1, "header", "empty input")
    if finals is None:
        raise ParseError(1, "finals", "missing finals line")

    if kind == "dfa":
        completed = len(dfa_rows) < state_count
        n = state_count + (1 if completed else 0)
        sink = state_count  # fresh rejecting sink for missing rows
        t0, t1 = [], []
        for q in range(state_count):
            a, b = dfa_rows.get(q, (sink, sink))
            t0.append(a)
            t1.append(b)
        if completed:
            t0.append(sink)
            t1.append(sink)
        return Dfa(n, initial, finals, t0, t1, alphabet), completed
    if initials is None:
        raise ParseError(1, "initials", "missing initials line")
    t0 = [nfa_rows.get((q, 0), frozenset()) for q in range(state_count)]
    t1 = [nfa_rows.get((q, 1), frozenset()) for q in range(state_count)]
    return Nfa(state_count, initials, finals, t0, t1, alphabet), False


def to_dot(automaton, name="automaton"):
    """Graphviz rendering; final states doubled, one labelled edge per symbol."""
    lines = ["digraph %s {" % name, "  rankdir=LR;",
             '  __start [shape=point, label=""];']
    if isinstance(automaton, Dfa):
        initials = [automaton.initial]
    else:
        initials = sorted(automaton.initials)
    for q in range(automaton.state_count):
        shape = "doublecircle" if q in automaton.finals else "circle"
        lines.append('  %d [shape=%s, label="%d"];' % (q, shape, q))
    for q in initials:
        lines.append("  __start -> %d;" % q)
    for sym in (0, 1):
        letter = automaton.alphabet[sym]
        table = automaton.t0 if sym == 0 else automaton.t1
        for q in range(automaton.state_count):
            targets = table[q]
            if isinstance(automaton, Dfa):
                targets = (targets,)
            for target in sorted(targets):
                lines.append('  %d -> %d [label="%s"];' % (q, target, letter))
    lines.append("}")
    return "\n".join(lines) + "\n"
