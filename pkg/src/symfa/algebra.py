"""Effective Boolean algebras: interval algebras over extended integers and
the propositional algebra over k atomic propositions.

Predicates are immutable parse trees.  Interval predicates denote unions of
half-open intervals [a,b); an interval whose upper endpoint is the infinity
sentinel is closed at the top, so [a,inf) contains the letter inf and
predicate partitions can cover the whole domain.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

INF = float("inf")
NEG_INF = float("-inf")


class _Sup:
    """Exclusive upper bound strictly above every letter, inf included.
    Canonical interval lists are half-open up to this extended order, so
    they can tell "every letter from lo up" (hi is SUP) apart from "every
    finite letter from lo up" (hi == INF)."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "SUP"


SUP = _Sup()

_PROP_MAX_K = 16


@dataclass(frozen=True)
class Algebra:
    """Configuration of one concrete algebra instance."""

    kind: str  # "interval-int" | "interval-nat" | "prop"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("interval-int", "interval-nat", "prop"):
            raise ValueError("unknown algebra kind: %r" % (self.kind,))
        if self.kind == "prop":
            if not 1 <= self.k <= _PROP_MAX_K:
                raise ValueError("prop algebra needs 1 <= k <= %d" % _PROP_MAX_K)
        elif self.k:
            raise ValueError("k is only meaningful for the prop kind")

    @property
    def is_interval(self):
        return self.kind != "prop"

    @property
    def dmin(self):
        if self.kind == "interval-nat":
            return 0
        if self.kind == "interval-int":
            return NEG_INF
        return "0" * self.k

    @property
    def dmax(self):
        if self.kind == "prop":
            return "1" * self.k
        return INF

    def letters(self):
        """Every letter of the domain; prop kind only (interval domains are
        infinite)."""
        if self.kind != "prop":
            raise ValueError("interval domains are infinite")
        return [format(v, "0%db" % self.k) for v in range(2 ** self.k)]

    def check_letter(self, d):
        if self.kind == "prop":
            if not (isinstance(d, str) and len(d) == self.k
                    and set(d) <= {"0", "1"}):
                raise ValueError("bad prop letter: %r" % (d,))
        else:
            if d == INF or d == NEG_INF:
                if self.kind == "interval-nat" and d == NEG_INF:
                    raise ValueError("-inf is not a natural letter")
            elif not isinstance(d, int):
                raise ValueError("bad interval letter: %r" % (d,))
            elif self.kind == "interval-nat" and d < 0:
                raise ValueError("negative letter over interval-nat: %r" % (d,))
        return d


INTERVAL_NAT = Algebra("interval-nat")
INTERVAL_INT = Algebra("interval-int")


def prop_algebra(k):
    return Algebra("prop", k)


# ---------------------------------------------------------------------------
# Predicate parse trees


class Pred:
    __slots__ = ()


@dataclass(frozen=True)
class Top(Pred):
    pass


@dataclass(frozen=True)
class Bot(Pred):
    pass


@dataclass(frozen=True)
class Interval(Pred):
    """Atomic interval predicate [lo, hi); hi == INF is closed at the top."""

    lo: object
    hi: object


@dataclass(frozen=True)
class Lit(Pred):
    """Propositional literal p<index> or !p<index> (0-based index)."""

    index: int
    positive: bool = True


@dataclass(frozen=True)
class Not(Pred):
    child: Pred


@dataclass(frozen=True)
class And(Pred):
    left: Pred
    right: Pred


@dataclass(frozen=True)
class Or(Pred):
    left: Pred
    right: Pred


TOP = Top()
BOT = Bot()


def and_all(preds):
    preds = list(preds)
    if not preds:
        return TOP
    out = preds[0]
    for p in preds[1:]:
        out = And(out, p)
    return out


def or_all(preds):
    preds = list(preds)
    if not preds:
        return BOT
    out = preds[0]
    for p in preds[1:]:
        out = Or(out, p)
    return out


def pred_size(psi):
    """Number of parse-tree nodes; atoms count one."""
    if isinstance(psi, (Top, Bot, Interval, Lit)):
        return 1
    if isinstance(psi, Not):
        return 1 + pred_size(psi.child)
    return 1 + pred_size(psi.left) + pred_size(psi.right)


def contains(alg, psi, d):
    """True iff letter d satisfies psi."""
    if isinstance(psi, Top):
        return True
    if isinstance(psi, Bot):
        return False
    if isinstance(psi, Interval):
        if alg.kind == "prop":
            raise ValueError("interval atom in a prop predicate")
        if psi.hi == INF:
            return psi.lo <= d
        return psi.lo <= d < psi.hi
    if isinstance(psi, Lit):
        if alg.kind != "prop":
            raise ValueError("prop literal in an interval predicate")
        return (d[psi.index] == "1") == psi.positive
    if isinstance(psi, Not):
        return not contains(alg, psi.child, d)
    if isinstance(psi, And):
        return contains(alg, psi.left, d) and contains(alg, psi.right, d)
    if isinstance(psi, Or):
        return contains(alg, psi.left, d) or contains(alg, psi.right, d)
    raise TypeError("not a predicate: %r" % (psi,))


# ---------------------------------------------------------------------------
# Canonical interval lists
#
# An interval list is a tuple of (lo, hi) pairs, sorted, pairwise disjoint
# and non-adjacent (maximal).  Both bounds live in the letter order extended
# with SUP on top; hi is always exclusive.  hi is SUP for a piece reaching
# past inf (so inf is a member), hi == INF for a piece holding every finite
# letter from lo up.


def ivl_union(a, b):
    merged = sorted([lo, hi] for lo, hi in list(a) + list(b))
    out = []
    for lo, hi in merged:
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)


def ivl_intersect(a, b):
    out = []
    for lo1, hi1 in a:
        for lo2, hi2 in b:
            lo = max(lo1, lo2)
            hi = min(hi1, hi2)
            if lo < hi:
                out.append((lo, hi))
    return ivl_union(out, ())


def ivl_complement(a, alg):
    cursor = alg.dmin
    out = []
    for lo, hi in a:
        if cursor < lo:
            out.append((cursor, lo))
        cursor = hi
    if cursor is not SUP:
        out.append((cursor, SUP))
    return tuple(out)


def ivl_contains(a, d):
    for lo, hi in a:
        if lo <= d and d < hi:
            return True
    return False


def _atom_intervals(alg, lo, hi):
    lo = max(lo, alg.dmin)
    if hi == INF:
        hi = SUP
    if lo < hi:
        return ((lo, hi),)
    return ()


def to_canonical_intervals(alg, psi):
    """Unique canonical interval list denoting psi: maximal disjoint
    intervals, ascending, with exclusive upper bounds (hi is SUP when the
    piece contains inf, hi == INF when it holds exactly the finite letters
    from lo up).  Negation is pushed to the atoms first, so the list has at
    most 2 * pred_size(psi) intervals."""
    if not alg.is_interval:
        raise ValueError("canonical intervals need an interval algebra")
    return _canon(alg, psi, False)


def _canon(alg, psi, neg):
    if isinstance(psi, Top):
        psi, neg = (BOT, False) if neg else (psi, neg)
    if isinstance(psi, Bot) and neg:
        psi, neg = TOP, False
    if isinstance(psi, Top):
        return ((alg.dmin, SUP),)
    if isinstance(psi, Bot):
        return ()
    if isinstance(psi, Interval):
        atoms = _atom_intervals(alg, psi.lo, psi.hi)
        if neg:
            return ivl_complement(atoms, alg)
        return atoms
    if isinstance(psi, Not):
        return _canon(alg, psi.child, not neg)
    if isinstance(psi, And):
        combine = ivl_union if neg else ivl_intersect
    elif isinstance(psi, Or):
        combine = ivl_intersect if neg else ivl_union
    else:
        raise TypeError("not an interval predicate: %r" % (psi,))
    return combine(_canon(alg, psi.left, neg), _canon(alg, psi.right, neg))


def interval_piece_pred(lo, hi):
    """Predicate for one canonical list piece.  A piece closed at the top
    becomes an atom; a finite-only tail needs the negated inf singleton."""
    if hi is SUP:
        return Interval(lo, INF)
    if hi == INF:
        return And(Interval(lo, INF), Not(Interval(INF, INF)))
    return Interval(lo, hi)


def intervals_to_pred(ivls):
    """Disjunction denoting a canonical interval list, ascending; BOT for
    the empty list."""
    return or_all(interval_piece_pred(lo, hi) for lo, hi in ivls)


# ---------------------------------------------------------------------------
# Propositional semantics by truth-table enumeration (k is capped small)


@functools.lru_cache(maxsize=None)
def _prop_sat_set(psi, k):
    """Frozenset of satisfying valuations encoded as ints; bit order matches
    lexicographic order of the bitstring letters."""
    full = frozenset(range(2 ** k))
    if isinstance(psi, Top):
        return full
    if isinstance(psi, Bot):
        return frozenset()
    if isinstance(psi, Lit):
        if not 0 <= psi.index < k:
            raise ValueError("literal index out of range: %d" % psi.index)
        bit = 1 << (k - 1 - psi.index)
        pos = frozenset(v for v in full if v & bit)
        return pos if psi.positive else full - pos
    if isinstance(psi, Not):
        return full - _prop_sat_set(psi.child, k)
    if isinstance(psi, And):
        return _prop_sat_set(psi.left, k) & _prop_sat_set(psi.right, k)
    if isinstance(psi, Or):
        return _prop_sat_set(psi.left, k) | _prop_sat_set(psi.right, k)
    raise TypeError("not a prop predicate: %r" % (psi,))


def _letter_to_int(d):
    return int(d, 2)


def _int_to_letter(v, k):
    return format(v, "0%db" % k)


# ---------------------------------------------------------------------------
# Semantic sets: a uniform denotation usable by both algebra families.
# Interval kinds use canonical interval lists; prop uses valuation sets.


def denote(alg, psi):
    if alg.is_interval:
        return to_canonical_intervals(alg, psi)
    return _prop_sat_set(psi, alg.k)


def sem_full(alg):
    if alg.is_interval:
        return ((alg.dmin, SUP),)
    return frozenset(range(2 ** alg.k))


def sem_intersect(alg, a, b):
    if alg.is_interval:
        return ivl_intersect(a, b)
    return a & b


def sem_union(alg, a, b):
    if alg.is_interval:
        return ivl_union(a, b)
    return a | b


def sem_complement(alg, a):
    if alg.is_interval:
        return ivl_complement(a, alg)
    return sem_full(alg) - a


def sem_is_empty(a):
    return not a


def sem_min(alg, a):
    if sem_is_empty(a):
        return None
    if alg.is_interval:
        return a[0][0]
    return _int_to_letter(min(a), alg.k)


def sem_contains(alg, a, d):
    if alg.is_interval:
        return ivl_contains(a, d)
    return _letter_to_int(d) in a


# ---------------------------------------------------------------------------
# Derived predicate queries


def is_sat(alg, psi):
    return not sem_is_empty(denote(alg, psi))


def pred_equiv(alg, psi, phi):
    return denote(alg, psi) == denote(alg, phi)


def min_model(alg, psi):
    """Least letter satisfying psi, or None when unsatisfiable.  Interval
    algebras only (they are the monotonic ones)."""
    if not alg.is_interval:
        raise ValueError("min_model needs a monotonic (interval) algebra")
    return sem_min(alg, to_canonical_intervals(alg, psi))


# ---------------------------------------------------------------------------
# Text grammar shared by every file format:
#   [a,b)  -inf  inf  p<i>  !p<i>  &  |  !  ( )  true  false


_TOKEN_RE = re.compile(r"""
    \s*(
      \[ | \) | \( | , | & | \| | ! |
      -?\d+ | -inf | inf | true | false | p\d+
    )""", re.VERBOSE)


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError("bad predicate syntax at %r" % text[pos:])
        out.append(m.group(1))
        pos = m.end()
    return out


def _parse_endpoint(tok):
    if tok == "inf":
        return INF
    if tok == "-inf":
        return NEG_INF
    return int(tok)


class _PredParser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError("expected %r, found %r" % (expected, tok))
        self.pos += 1
        return tok

    def parse(self):
        out = self.or_expr()
        if self.peek() is not None:
            raise ValueError("trailing tokens: %r" % self.toks[self.pos:])
        return out

    def or_expr(self):
        out = self.and_expr()
        while self.peek() == "|":
            self.take()
            out = Or(out, self.and_expr())
        return out

    def and_expr(self):
        out = self.factor()
        while self.peek() == "&":
            self.take()
            out = And(out, self.factor())
        return out

    def factor(self):
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.factor())
        if tok == "(":
            self.take()
            out = self.or_expr()
            self.take(")")
            return out
        if tok == "true":
            self.take()
            return TOP
        if tok == "false":
            self.take()
            return BOT
        if tok == "[":
            self.take()
            lo = _parse_endpoint(self.take())
            self.take(",")
            hi = _parse_endpoint(self.take())
            self.take(")")
            return Interval(lo, hi)
        if tok is not None and tok.startswith("p"):
            self.take()
            return Lit(int(tok[1:]))
        raise ValueError("unexpected token %r" % (tok,))


def parse_pred(alg, text):
    psi = _PredParser(_tokenize(text)).parse()
    _check_pred(alg, psi)
    return psi


def _check_pred(alg, psi):
    if isinstance(psi, Interval) and not alg.is_interval:
        raise ValueError("interval atom over the prop algebra")
    if isinstance(psi, Lit):
        if alg.is_interval:
            raise ValueError("prop literal over an interval algebra")
        if not 0 <= psi.index < alg.k:
            raise ValueError("literal p%d out of range for k=%d"
                             % (psi.index, alg.k))
    if isinstance(psi, Not):
        _check_pred(alg, psi.child)
    if isinstance(psi, (And, Or)):
        _check_pred(alg, psi.left)
        _check_pred(alg, psi.right)


def format_endpoint(x):
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return str(x)


def format_letter(d):
    if isinstance(d, str):
        return d
    return format_endpoint(d)


def parse_letter(alg, tok):
    if alg.kind == "prop":
        return alg.check_letter(tok)
    if tok == "inf":
        return INF
    if tok == "-inf":
        return alg.check_letter(NEG_INF)
    return alg.check_letter(int(tok))


def format_pred(psi):
    return _fmt(psi, 0)


def _fmt(psi, prec):
    # precedence: | is 1, & is 2, ! is 3, atoms are 4
    if isinstance(psi, Top):
        return "true"
    if isinstance(psi, Bot):
        return "false"
    if isinstance(psi, Interval):
        return "[%s,%s)" % (format_endpoint(psi.lo), format_endpoint(psi.hi))
    if isinstance(psi, Lit):
        return ("p%d" if psi.positive else "!p%d") % psi.index
    if isinstance(psi, Not):
        return "!" + _fmt(psi.child, 3)
    if isinstance(psi, And):
        text = "%s & %s" % (_fmt(psi.left, 2), _fmt(psi.right, 2))
        return "(%s)" % text if prec > 2 else text
    if isinstance(psi, Or):
        text = "%s | %s" % (_fmt(psi.left, 1), _fmt(psi.right, 1))
        return "(%s)" % text if prec > 1 else text
    raise TypeError("not a predicate: %r" % (psi,))
