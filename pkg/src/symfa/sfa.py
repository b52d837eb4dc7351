"""Symbolic finite automata: data model, acceptance, classification,
transformations to special forms, and the text file formats."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    Algebra, And, Bot, Interval, Lit, Not, Or, Pred, Top, TOP, INF,
    and_all, contains, denote, format_letter, format_pred,
    interval_piece_pred, intervals_to_pred, is_sat, ivl_complement,
    ivl_union, or_all, parse_letter, parse_pred,
    pred_equiv, pred_size, to_canonical_intervals,
)

NEAT_TRANSITION_CAP = 10 ** 5


@dataclass(frozen=True)
class Sfa:
    algebra: Algebra
    states: tuple
    initial: str
    accepting: frozenset
    transitions: tuple  # of (src, pred, dst)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        seen = set()
        trans = []
        for src, pred, dst in self.transitions:
            if (src, pred, dst) in seen:
                continue
            seen.add((src, pred, dst))
            trans.append((src, pred, dst))
        object.__setattr__(self, "transitions", tuple(trans))
        states = set(self.states)
        if len(states) != len(self.states):
            raise ValueError("duplicate state ids")
        if self.initial not in states:
            raise ValueError("initial state not in states")
        if not self.accepting <= states:
            raise ValueError("accepting states not in states")
        for src, pred, dst in self.transitions:
            if src not in states or dst not in states:
                raise ValueError("transition endpoint not in states")
            if not isinstance(pred, Pred):
                raise ValueError("transition label is not a predicate")

    def out(self, q):
        return [(p, dst) for src, p, dst in self.transitions if src == q]


@dataclass(frozen=True)
class SizeMetrics:
    n: int
    m: int
    l: int


@dataclass(frozen=True)
class SfaFlags:
    deterministic: bool
    complete: bool
    neat: bool
    normalized: bool
    feasible: bool


def accepts(m, w):
    """True iff some run of m over w ends in an accepting state."""
    frontier = {m.initial}
    for d in w:
        m.algebra.check_letter(d)
        nxt = set()
        for src, pred, dst in m.transitions:
            if src in frontier and contains(m.algebra, pred, d):
                nxt.add(dst)
        frontier = nxt
        if not frontier:
            return False
    return bool(frontier & m.accepting)


def _is_basic(pred):
    """A basic predicate: a conjunction of atoms and negated atoms (the
    empty conjunction, written true, is allowed)."""
    if isinstance(pred, (Interval, Lit, Top)):
        return True
    if isinstance(pred, Not):
        return isinstance(pred.child, (Interval, Lit))
    if isinstance(pred, And):
        return _is_basic(pred.left) and _is_basic(pred.right)
    return False


def classify(m):
    alg = m.algebra
    deterministic = True
    complete = True
    for q in m.states:
        preds = [p for p, _ in m.out(q)]
        for i in range(len(preds)):
            for j in range(i + 1, len(preds)):
                if is_sat(alg, And(preds[i], preds[j])):
                    deterministic = False
        if not pred_equiv(alg, or_all(preds), TOP):
            complete = False
    neat = all(_is_basic(p) for _, p, _ in m.transitions)
    normalized = len({(s, d) for s, _, d in m.transitions}) == len(m.transitions)
    feasible = all(is_sat(alg, p) for _, p, _ in m.transitions)
    return SfaFlags(deterministic, complete, neat, normalized, feasible)


def size_metrics(m):
    out_deg = {q: 0 for q in m.states}
    for src, _, _ in m.transitions:
        out_deg[src] += 1
    return SizeMetrics(
        n=len(m.states),
        m=max(out_deg.values()) if out_deg else 0,
        l=max((pred_size(p) for _, p, _ in m.transitions), default=0),
    )


# ---------------------------------------------------------------------------
# Transformations to special forms


def _prop_dnf(psi, neg=False):
    """List of literal conjunctions (frozensets of (index, positive)),
    contradictory conjunctions dropped."""
    if isinstance(psi, Top):
        return [] if neg else [frozenset()]
    if isinstance(psi, Bot):
        return [frozenset()] if neg else []
    if isinstance(psi, Lit):
        return [frozenset([(psi.index, psi.positive != neg)])]
    if isinstance(psi, Not):
        return _prop_dnf(psi.child, not neg)
    if isinstance(psi, (And, Or)):
        distribute = isinstance(psi, And) != neg
        left = _prop_dnf(psi.left, neg)
        right = _prop_dnf(psi.right, neg)
        if not distribute:
            out = left + [c for c in right if c not in left]
            return out
        out = []
        for a in left:
            for b in right:
                c = a | b
                if any((i, not pos) in c for i, pos in c):
                    continue
                if c not in out:
                    out.append(c)
                if len(out) > NEAT_TRANSITION_CAP:
                    raise ValueError("DNF expansion exceeds cap")
        return out
    raise TypeError("not a prop predicate: %r" % (psi,))


def _conj_of_literals(lits):
    return and_all(Lit(i, pos) for i, pos in sorted(lits))


def basic_disjuncts(alg, pred):
    """Equivalent list of basic predicates whose disjunction denotes pred."""
    if alg.is_interval:
        return [interval_piece_pred(lo, hi)
                for lo, hi in to_canonical_intervals(alg, pred)]
    return [_conj_of_literals(lits) for lits in _prop_dnf(pred)]


def to_neat(m):
    """Split every transition into basic-predicate transitions."""
    alg = m.algebra
    trans = []
    for src, pred, dst in m.transitions:
        for basic in basic_disjuncts(alg, pred):
            trans.append((src, basic, dst))
        if len(trans) > NEAT_TRANSITION_CAP:
            raise ValueError("neat expansion exceeds %d transitions"
                             % NEAT_TRANSITION_CAP)
    return Sfa(alg, m.states, m.initial, m.accepting, trans)


def to_normalized(m):
    """Merge parallel transitions into one disjunction per state pair."""
    order = []
    merged = {}
    for src, pred, dst in m.transitions:
        key = (src, dst)
        if key not in merged:
            merged[key] = []
            order.append(key)
        merged[key].append(pred)
    trans = [(src, or_all(merged[(src, dst)]), dst) for src, dst in order]
    return Sfa(m.algebra, m.states, m.initial, m.accepting, trans)


def make_feasible(m):
    """Drop transitions with unsatisfiable predicates."""
    trans = [(s, p, d) for s, p, d in m.transitions if is_sat(m.algebra, p)]
    return Sfa(m.algebra, m.states, m.initial, m.accepting, trans)


def _fresh_state(states, base="sink"):
    name = base
    taken = set(states)
    i = 0
    while name in taken:
        i += 1
        name = "%s%d" % (base, i)
    return name


def complete_sfa(m):
    """Add a rejecting sink covering the uncovered part of each state's
    outgoing predicates.  On neat interval input the new transitions are the
    gap intervals, at most one more than the state's out-degree."""
    alg = m.algebra
    sink = _fresh_state(m.states)
    extra = []
    for q in m.states:
        preds = [p for p, _ in m.out(q)]
        if alg.is_interval:
            covered = ()
            for p in preds:
                covered = ivl_union(covered, to_canonical_intervals(alg, p))
            for lo, hi in ivl_complement(covered, alg):
                extra.append((q, interval_piece_pred(lo, hi), sink))
        else:
            residual = Not(or_all(preds)) if preds else TOP
            if is_sat(alg, residual):
                extra.append((q, residual, sink))
    if not extra:
        return m
    loop = Interval(alg.dmin, INF) if alg.is_interval else TOP
    extra.append((sink, loop, sink))
    return Sfa(alg, tuple(m.states) + (sink,), m.initial, m.accepting,
               tuple(m.transitions) + tuple(extra))


# ---------------------------------------------------------------------------
# Text formats
#
# SFA files: one directive per line, '#' starts a comment.
#   algebra interval-nat | interval-int | prop <k>
#   states <id>...
#   initial <id>
#   accepting <id>...
#   trans <src> <dst> <predicate>
#
# Sample files: one labeled word per line, '<+|-> <letter>...'; an empty
# letter list denotes the empty word.


def parse_sfa(text):
    alg = None
    states = []
    initial = None
    accepting = []
    raw_trans = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "algebra":
                if parts[1] == "prop":
                    alg = Algebra("prop", int(parts[2]))
                else:
                    alg = Algebra(parts[1])
            elif parts[0] == "states":
                states.extend(parts[1:])
            elif parts[0] == "initial":
                initial = parts[1]
            elif parts[0] == "accepting":
                accepting.extend(parts[1:])
            elif parts[0] == "trans":
                pred_text = line.split(None, 3)[3]
                raw_trans.append((parts[1], parts[2], pred_text))
            else:
                raise ValueError("unknown directive %r" % parts[0])
        except (IndexError, ValueError) as exc:
            raise ValueError("line %d: %s" % (lineno, exc)) from exc
    if alg is None:
        raise ValueError("missing algebra directive")
    if initial is None:
        raise ValueError("missing initial directive")
    trans = [(src, parse_pred(alg, ptext), dst)
             for src, dst, ptext in raw_trans]
    return Sfa(alg, states, initial, accepting, trans)


def format_sfa(m):
    lines = []
    if m.algebra.kind == "prop":
        lines.append("algebra prop %d" % m.algebra.k)
    else:
        lines.append("algebra %s" % m.algebra.kind)
    lines.append("states %s" % " ".join(m.states))
    lines.append("initial %s" % m.initial)
    lines.append("accepting %s" % " ".join(
        q for q in m.states if q in m.accepting))
    for src, pred, dst in m.transitions:
        lines.append("trans %s %s %s" % (src, dst, format_pred(pred)))
    return "\n".join(lines) + "\n"


def sample_dict(pairs):
    """Normalize labeled words into a dict, rejecting inconsistency."""
    if isinstance(pairs, dict):
        pairs = pairs.items()
    out = {}
    for w, b in pairs:
        w = tuple(w)
        b = int(b)
        if b not in (0, 1):
            raise ValueError("label must be 0 or 1")
        if out.get(w, b) != b:
            raise ValueError("inconsistent sample at word %r" % (w,))
        out[w] = b
    return out


def parse_word(alg, text):
    return tuple(parse_letter(alg, tok) for tok in text.split())


def format_word(w):
    return " ".join(format_letter(d) for d in w)


def parse_sample(alg, text):
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        sign, _, rest = line.partition(" ")
        if sign not in ("+", "-"):
            raise ValueError("line %d: expected + or -" % lineno)
        pairs.append((parse_word(alg, rest), 1 if sign == "+" else 0))
    return sample_dict(pairs)


def format_sample(sample):
    lines = []
    for w in sorted(sample):
        sign = "+" if sample[w] else "-"
        lines.append((sign + " " + format_word(w)).rstrip())
    return "\n".join(lines) + "\n"
