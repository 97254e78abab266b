"""Lattice-ordered abelian group and monoid carriers.

All carriers are exact: elements are arbitrary-precision integers,
integer tuples with the pointwise order, or lexicographic pairs
``LexPair(head, tail)`` realizing Z x_lex G.  The Grothendieck group of a
cancellative monoid is represented by canonical pairs (u, v) with
inf(u, v) = 0, so equality of group elements is structural.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, List

from .errors import CarrierMismatchError, InvalidUnitError
from .verdicts import CounterExample, Holds, Verdict


@dataclass(frozen=True)
class LexPair:
    """Element of Z x_lex G: an integer head and a group-element tail.

    Order is lexicographic: (a, x) <= (b, y) iff a < b, or a = b and
    x <= y in the tail group.
    """

    head: int
    tail: Any


@dataclass(frozen=True)
class CanonPair:
    """Canonical Grothendieck-group representative: the unique pair
    (u, v) in the class of (x, y) with inf(u, v) = 0."""

    u: Any
    v: Any


# ---------------------------------------------------------------------------
# Group carriers
# ---------------------------------------------------------------------------


class LGroup:
    """Abelian lattice-ordered group interface.

    Concrete carriers implement ``add``, ``negate``, ``leq``, ``inf``,
    ``sup``, ``zero`` and a deterministic bounded enumerator with
    ``enumerate(b)`` a subset of ``enumerate(b + 1)``.
    """

    signature = "lgroup"

    @property
    def zero(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def negate(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.negate(y))

    def leq(self, x, y) -> bool:
        raise NotImplementedError

    def inf(self, x, y):
        raise NotImplementedError

    def sup(self, x, y):
        raise NotImplementedError

    def enumerate(self, bound: int) -> list:
        raise NotImplementedError

    def window_size(self, bound: int) -> int:
        return len(self.enumerate(bound))

    def validate(self, x) -> None:
        raise NotImplementedError

    def descriptor(self) -> str:
        raise NotImplementedError

    def format_element(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor()}>"


class ZGroup(LGroup):
    """The integers with the natural total order."""

    @property
    def zero(self):
        return 0

    def add(self, x, y):
        return x + y

    def negate(self, x):
        return -x

    def leq(self, x, y):
        return x <= y

    def inf(self, x, y):
        return min(x, y)

    def sup(self, x, y):
        return max(x, y)

    def enumerate(self, bound):
        return list(range(-bound, bound + 1))

    def window_size(self, bound):
        return 2 * bound + 1

    def validate(self, x):
        if not isinstance(x, int) or isinstance(x, bool):
            raise CarrierMismatchError(f"{x!r} is not an integer")

    def descriptor(self):
        return "Z"


class ZnGroup(LGroup):
    """Z^n with the pointwise order.  Rank 0 is the trivial group."""

    def __init__(self, rank: int):
        if rank < 0:
            raise ValueError("rank must be >= 0")
        self.rank = rank

    @property
    def zero(self):
        return (0,) * self.rank

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def negate(self, x):
        return tuple(-a for a in x)

    def leq(self, x, y):
        return all(a <= b for a, b in zip(x, y))

    def inf(self, x, y):
        return tuple(min(a, b) for a, b in zip(x, y))

    def sup(self, x, y):
        return tuple(max(a, b) for a, b in zip(x, y))

    def enumerate(self, bound):
        rng = range(-bound, bound + 1)
        return [tuple(t) for t in itertools.product(rng, repeat=self.rank)]

    def window_size(self, bound):
        return (2 * bound + 1) ** self.rank

    def validate(self, x):
        if not isinstance(x, tuple) or len(x) != self.rank:
            raise CarrierMismatchError(f"{x!r} is not a rank-{self.rank} vector")
        for a in x:
            if not isinstance(a, int) or isinstance(a, bool):
                raise CarrierMismatchError(f"{x!r} has a non-integer coordinate")

    def descriptor(self):
        return f"Z^{self.rank}"

    def format_element(self, x):
        return "(" + ",".join(str(a) for a in x) + ")"


class LexGroup(LGroup):
    """Z x_lex G for a tail group G.

    The head is always a rank-1 integer; this is the only lexicographic
    product the library needs.
    """

    def __init__(self, tail: LGroup):
        self.tail = tail

    @property
    def zero(self):
        return LexPair(0, self.tail.zero)

    def add(self, x, y):
        return LexPair(x.head + y.head, self.tail.add(x.tail, y.tail))

    def negate(self, x):
        return LexPair(-x.head, self.tail.negate(x.tail))

    def leq(self, x, y):
        return x.head < y.head or (x.head == y.head and self.tail.leq(x.tail, y.tail))

    def inf(self, x, y):
        if x.head < y.head:
            return x
        if y.head < x.head:
            return y
        return LexPair(x.head, self.tail.inf(x.tail, y.tail))

    def sup(self, x, y):
        if x.head > y.head:
            return x
        if y.head > x.head:
            return y
        return LexPair(x.head, self.tail.sup(x.tail, y.tail))

    def enumerate(self, bound):
        tails = self.tail.enumerate(bound)
        return [
            LexPair(h, t)
            for h in range(-bound, bound + 1)
            for t in tails
        ]

    def window_size(self, bound):
        return (2 * bound + 1) * self.tail.window_size(bound)

    def validate(self, x):
        if not isinstance(x, LexPair):
            raise CarrierMismatchError(f"{x!r} is not a lexicographic pair")
        if not isinstance(x.head, int) or isinstance(x.head, bool):
            raise CarrierMismatchError(f"{x!r} has a non-integer head")
        self.tail.validate(x.tail)

    def descriptor(self):
        return f"Lex(Z,{self.tail.descriptor()})"

    def format_element(self, x):
        return f"({x.head},{self.tail.format_element(x.tail)})"


class UnitalGroup(LGroup):
    """A group together with a distinguished element, used as a model of
    the unital theories.  Delegates every group operation."""

    def __init__(self, group: LGroup, unit):
        group.validate(unit)
        if not group.leq(group.zero, unit):
            raise InvalidUnitError(
                f"{group.format_element(unit)} is not >= 0 in {group.descriptor()}"
            )
        self.group = group
        self.unit = unit

    @property
    def zero(self):
        return self.group.zero

    def add(self, x, y):
        return self.group.add(x, y)

    def negate(self, x):
        return self.group.negate(x)

    def leq(self, x, y):
        return self.group.leq(x, y)

    def inf(self, x, y):
        return self.group.inf(x, y)

    def sup(self, x, y):
        return self.group.sup(x, y)

    def enumerate(self, bound):
        return self.group.enumerate(bound)

    def window_size(self, bound):
        return self.group.window_size(bound)

    def validate(self, x):
        self.group.validate(x)

    def descriptor(self):
        return f"Unital({self.group.descriptor()},{self.group.format_element(self.unit)})"

    def format_element(self, x):
        return self.group.format_element(x)


# ---------------------------------------------------------------------------
# Positive parts
# ---------------------------------------------------------------------------


def pos_part(G: LGroup, g):
    """g+ = sup(0, g)."""
    return G.sup(G.zero, g)


def neg_part(G: LGroup, g):
    """g- = sup(0, -g)."""
    return G.sup(G.zero, G.negate(g))


def abs_val(G: LGroup, g):
    """|g| = g+ + g-."""
    return G.add(pos_part(G, g), neg_part(G, g))


# ---------------------------------------------------------------------------
# Monoid carriers
# ---------------------------------------------------------------------------


class LMonoid:
    """Cancellative subtractive lattice-ordered abelian monoid with
    bottom element.  ``subtract(x, y)`` for y <= x returns the unique z
    with y + z = x, witnessing the subtractivity axiom."""

    signature = "monoid"

    @property
    def zero(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def leq(self, x, y) -> bool:
        return self.inf(x, y) == x

    def inf(self, x, y):
        raise NotImplementedError

    def sup(self, x, y):
        raise NotImplementedError

    def subtract(self, x, y):
        raise NotImplementedError

    def enumerate(self, bound: int) -> list:
        raise NotImplementedError

    def window_size(self, bound: int) -> int:
        return len(self.enumerate(bound))

    def validate(self, x) -> None:
        raise NotImplementedError

    def descriptor(self) -> str:
        raise NotImplementedError

    def format_element(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor()}>"


class NMonoid(LMonoid):
    """The natural numbers under addition."""

    @property
    def zero(self):
        return 0

    def add(self, x, y):
        return x + y

    def inf(self, x, y):
        return min(x, y)

    def sup(self, x, y):
        return max(x, y)

    def subtract(self, x, y):
        if y > x:
            raise CarrierMismatchError(f"cannot subtract {y} from {x} in N")
        return x - y

    def enumerate(self, bound):
        return list(range(bound + 1))

    def window_size(self, bound):
        return bound + 1

    def validate(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise CarrierMismatchError(f"{x!r} is not a natural number")

    def descriptor(self):
        return "N"


class NnMonoid(LMonoid):
    """N^n with pointwise operations."""

    def __init__(self, rank: int):
        if rank < 0:
            raise ValueError("rank must be >= 0")
        self.rank = rank

    @property
    def zero(self):
        return (0,) * self.rank

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inf(self, x, y):
        return tuple(min(a, b) for a, b in zip(x, y))

    def sup(self, x, y):
        return tuple(max(a, b) for a, b in zip(x, y))

    def subtract(self, x, y):
        if not self.leq(y, x):
            raise CarrierMismatchError(f"{y!r} is not below {x!r} in N^{self.rank}")
        return tuple(a - b for a, b in zip(x, y))

    def enumerate(self, bound):
        rng = range(bound + 1)
        return [tuple(t) for t in itertools.product(rng, repeat=self.rank)]

    def window_size(self, bound):
        return (bound + 1) ** self.rank

    def validate(self, x):
        if not isinstance(x, tuple) or len(x) != self.rank:
            raise CarrierMismatchError(f"{x!r} is not a rank-{self.rank} vector")
        for a in x:
            if not isinstance(a, int) or isinstance(a, bool) or a < 0:
                raise CarrierMismatchError(f"{x!r} has a negative coordinate")

    def descriptor(self):
        return f"N^{self.rank}"

    def format_element(self, x):
        return "(" + ",".join(str(a) for a in x) + ")"


class PositiveConeMonoid(LMonoid):
    """The positive cone {g | 0 <= g} of a group, with the restricted
    operations.  Subtractivity is witnessed by subtraction in the group."""

    def __init__(self, group: LGroup):
        self.group = group

    @property
    def zero(self):
        return self.group.zero

    def add(self, x, y):
        return self.group.add(x, y)

    def leq(self, x, y):
        return self.group.leq(x, y)

    def inf(self, x, y):
        return self.group.inf(x, y)

    def sup(self, x, y):
        return self.group.sup(x, y)

    def subtract(self, x, y):
        if not self.group.leq(y, x):
            raise CarrierMismatchError("subtraction would leave the cone")
        return self.group.sub(x, y)

    def enumerate(self, bound):
        z = self.group.zero
        return [g for g in self.group.enumerate(bound) if self.group.leq(z, g)]

    def validate(self, x):
        self.group.validate(x)
        if not self.group.leq(self.group.zero, x):
            raise CarrierMismatchError(
                f"{self.group.format_element(x)} is not in the positive cone"
            )

    def descriptor(self):
        return f"PosCone({self.group.descriptor()})"

    def format_element(self, x):
        return self.group.format_element(x)


def positive_cone(G: LGroup) -> PositiveConeMonoid:
    """The functor sending a group to its positive cone."""
    return PositiveConeMonoid(G)


# ---------------------------------------------------------------------------
# Canonical pairs and the Grothendieck group
# ---------------------------------------------------------------------------


def canon_pair(M: LMonoid, x, y) -> CanonPair:
    """The canonical representative of the pair class [x, y].

    Returns (u, v) with x = inf(x, y) + u, y = inf(x, y) + v and
    inf(u, v) = 0; it lies in the class of (x, y) because cross-sums
    agree: x + v = y + u.
    """
    i = M.inf(x, y)
    return CanonPair(M.subtract(x, i), M.subtract(y, i))


class GrothendieckGroup(LGroup):
    """Group of differences of a cancellative monoid, on canonical pairs.

    Every operation re-canonicalizes, so structural equality of
    ``CanonPair`` values is group equality.  The lattice operations use
    the pair formulas Inf([x,y],[h,k]) = [inf(x+k, y+h), y+k] and its
    sup twin, then canonicalize.
    """

    def __init__(self, monoid: LMonoid):
        self.monoid = monoid

    @property
    def zero(self):
        z = self.monoid.zero
        return CanonPair(z, z)

    def add(self, x, y):
        m = self.monoid
        return canon_pair(m, m.add(x.u, y.u), m.add(x.v, y.v))

    def negate(self, x):
        return CanonPair(x.v, x.u)

    def inf(self, x, y):
        m = self.monoid
        return canon_pair(m, m.inf(m.add(x.u, y.v), m.add(x.v, y.u)), m.add(x.v, y.v))

    def sup(self, x, y):
        m = self.monoid
        return canon_pair(m, m.sup(m.add(x.u, y.v), m.add(x.v, y.u)), m.add(x.v, y.v))

    def leq(self, x, y):
        return self.inf(x, y) == x

    def enumerate(self, bound):
        m = self.monoid
        seen = set()
        out = []
        window = m.enumerate(bound)
        for x in window:
            for y in window:
                p = canon_pair(m, x, y)
                if p not in seen:
                    seen.add(p)
                    out.append(p)
        return out

    def validate(self, x):
        if not isinstance(x, CanonPair):
            raise CarrierMismatchError(f"{x!r} is not a canonical pair")
        self.monoid.validate(x.u)
        self.monoid.validate(x.v)
        if self.monoid.inf(x.u, x.v) != self.monoid.zero:
            raise CarrierMismatchError(f"{x!r} is not canonical: inf(u,v) != 0")

    def descriptor(self):
        return f"Groth({self.monoid.descriptor()})"

    def format_element(self, x):
        f = self.monoid.format_element
        return f"[{f(x.u)},{f(x.v)}]"


def grothendieck_group(M: LMonoid) -> GrothendieckGroup:
    """The functor sending a cancellative monoid to its group of
    differences."""
    return GrothendieckGroup(M)


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------

MONOID_AXIOMS = [
    "M.1", "M.2", "M.3", "M.4", "M.5", "M.6", "M.7",
    "M.8", "M.9", "M.10", "M.11", "M.12", "M.13", "M.14",
]


def check_monoid_axioms(M: LMonoid, bound: int) -> Verdict:
    """Exhaustively check M.1-M.14 over ``M.enumerate(bound)``.

    The existential witness of the subtractivity axiom M.14 is searched
    within ``enumerate(2 * bound)``, which suffices for every carrier
    whose window only escapes additively.
    """
    elems = M.enumerate(bound)
    z = M.zero

    for x in elems:
        if M.add(x, z) != x:
            return CounterExample(x, axiom="M.2")
        if not M.leq(x, x):
            return CounterExample(x, axiom="M.4")
        if not M.leq(z, x):
            return CounterExample(x, axiom="M.13")

    for x in elems:
        for y in elems:
            if M.add(x, y) != M.add(y, x):
                return CounterExample((x, y), axiom="M.3")
            if M.leq(x, y) and M.leq(y, x) and x != y:
                return CounterExample((x, y), axiom="M.5")
            i = M.inf(x, y)
            if not (M.leq(i, x) and M.leq(i, y)):
                return CounterExample((x, y), axiom="M.7")
            s = M.sup(x, y)
            if not (M.leq(x, s) and M.leq(y, s)):
                return CounterExample((x, y), axiom="M.9")

    witnesses = M.enumerate(2 * bound)
    for x in elems:
        for y in elems:
            if M.leq(x, y):
                if not any(M.add(x, w) == y for w in witnesses):
                    return CounterExample(
                        (x, y),
                        axiom="M.14",
                        note=f"no witness within enumerate({2 * bound})",
                    )

    for x in elems:
        for y in elems:
            for t in elems:
                if M.add(x, M.add(y, t)) != M.add(M.add(x, y), t):
                    return CounterExample((x, y, t), axiom="M.1")
                if M.leq(x, y) and M.leq(y, t) and not M.leq(x, t):
                    return CounterExample((x, y, t), axiom="M.6")
                if M.leq(t, x) and M.leq(t, y) and not M.leq(t, M.inf(x, y)):
                    return CounterExample((x, y, t), axiom="M.8")
                if M.leq(x, t) and M.leq(y, t) and not M.leq(M.sup(x, y), t):
                    return CounterExample((x, y, t), axiom="M.10")
                if M.leq(x, y) and not M.leq(M.add(t, x), M.add(t, y)):
                    return CounterExample((x, y, t), axiom="M.11")
                if M.add(x, y) == M.add(x, t) and y != t:
                    return CounterExample((x, y, t), axiom="M.12")

    return Holds()


def strong_unit_check(G: LGroup, u, bound: int) -> Verdict:
    """Check that ``u`` behaves as a strong unit on the bounded window.

    The first axiom (u >= 0) is exact.  The archimedean-style axiom (every
    positive x lies below some nu) is an infinitary disjunction; n is
    searched up to a cap derived from the window, and a counterexample
    carries the bounded-search caveat since a larger witness could exist
    off-window.
    """
    G.validate(u)
    if not G.leq(G.zero, u):
        return CounterExample(u, axiom="Lu.1")

    cap = _unit_search_cap(u, bound)
    z = G.zero
    for x in G.enumerate(bound):
        if not G.leq(z, x):
            continue
        acc = z
        found = False
        for _ in range(cap + 1):
            if G.leq(x, acc):
                found = True
                break
            acc = G.add(acc, u)
        if not found:
            return CounterExample(
                x,
                axiom="Lu.2",
                note=f"no n <= {cap} with x <= nu; inconclusive-at-bound caveat applies",
            )
    return Holds()


def _unit_search_cap(u, bound: int) -> int:
    return bound * (1 + max(_flat_coords(u), default=0)) + 1


def _flat_coords(x) -> List[int]:
    if isinstance(x, bool):
        raise CarrierMismatchError("booleans are not group elements")
    if isinstance(x, int):
        return [abs(x)]
    if isinstance(x, tuple):
        out = []
        for a in x:
            out.extend(_flat_coords(a))
        return out
    if isinstance(x, LexPair):
        return [abs(x.head)] + _flat_coords(x.tail)
    raise CarrierMismatchError(f"cannot read coordinates of {x!r}")
