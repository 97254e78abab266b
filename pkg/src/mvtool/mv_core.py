"""Concrete MV-algebra carriers and the radical/Boolean machinery.

Carriers: Chang's algebra C on formal symbols {nc, 1-nc}, the finite
chains L(m) (with B = L(1) and the trivial algebra = L(0)), unit
intervals Gamma(G, u) of unital groups, lexicographic unit intervals
Sigma(G) = Gamma(Z x_lex G, (1, 0)), and finite products.  Everything is
exact and immutable; Chang indices are arbitrary-precision naturals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Sequence

from .errors import CarrierMismatchError, InvalidUnitError
from .lgroup_core import LexGroup, LexPair, LGroup
from .verdicts import CounterExample, Finite, Holds, NoneUpTo, Verdict


@dataclass(frozen=True)
class ChangElem:
    """Element of Chang's algebra: Fin(n) denotes nc, CoFin(n) denotes
    1 - nc.  The two families are disjoint as denoted elements; Fin(0)
    is 0 and CoFin(0) is 1."""

    kind: Literal["fin", "cofin"]
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Chang index must be a natural number")

    def __repr__(self):
        return f"ChangElem({self.kind!r}, {self.n})"


def Fin(n: int) -> ChangElem:
    return ChangElem("fin", n)


def CoFin(n: int) -> ChangElem:
    return ChangElem("cofin", n)


# ---------------------------------------------------------------------------
# Carriers
# ---------------------------------------------------------------------------


class MvAlgebra:
    """MV-algebra interface: a carrier with oplus, neg and 0.

    The derived operations (odot, sup, inf, the natural order, the
    distance d) are defined once here from oplus and neg.
    """

    signature = "mv"
    carrier_kind = "abstract"

    @property
    def zero(self):
        raise NotImplementedError

    def oplus(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    @property
    def one(self):
        return self.neg(self.zero)

    def odot(self, x, y):
        return self.neg(self.oplus(self.neg(x), self.neg(y)))

    def ominus(self, x, y):
        """x - y in the truncated sense: x odot (neg y)."""
        return self.odot(x, self.neg(y))

    def sup(self, x, y):
        return self.oplus(self.odot(x, self.neg(y)), y)

    def inf(self, x, y):
        return self.odot(self.oplus(x, self.neg(y)), y)

    def leq(self, x, y) -> bool:
        return self.inf(x, y) == x

    def d(self, x, y):
        """Distance: (x ominus y) oplus (y ominus x)."""
        return self.oplus(self.ominus(x, y), self.ominus(y, x))

    def enumerate(self, bound: int) -> list:
        raise NotImplementedError

    def window_size(self, bound: int) -> int:
        return len(self.enumerate(bound))

    def carrier(self) -> Optional[list]:
        """The full carrier when finite, else None."""
        return None

    def validate(self, x) -> None:
        raise NotImplementedError

    def descriptor(self) -> str:
        raise NotImplementedError

    def format_element(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor()}>"


class ChangAlgebra(MvAlgebra):
    """Chang's algebra C = {0, c, 2c, ..., 1-2c, 1-c, 1}.

    nc oplus mc = (n+m)c; (1-nc) oplus mc = 1-(n-m)c truncated at 1;
    coinfinite elements absorb to 1; neg swaps the families.
    """

    carrier_kind = "chang"

    @property
    def zero(self):
        return Fin(0)

    def oplus(self, x, y):
        if x.kind == "fin" and y.kind == "fin":
            return Fin(x.n + y.n)
        if x.kind == "cofin" and y.kind == "cofin":
            return CoFin(0)
        cof, fin = (x, y) if x.kind == "cofin" else (y, x)
        return CoFin(max(0, cof.n - fin.n))

    def neg(self, x):
        return Fin(x.n) if x.kind == "cofin" else CoFin(x.n)

    def enumerate(self, bound):
        return [Fin(n) for n in range(bound + 1)] + [CoFin(n) for n in range(bound + 1)]

    def window_size(self, bound):
        return 2 * (bound + 1)

    def validate(self, x):
        if not isinstance(x, ChangElem):
            raise CarrierMismatchError(f"{x!r} is not a Chang element")

    def descriptor(self):
        return "C"

    def format_element(self, x):
        if x.kind == "fin":
            return "0" if x.n == 0 else f"{x.n}c"
        return "1" if x.n == 0 else f"1-{x.n}c"


class FiniteChainAlgebra(MvAlgebra):
    """The (m+1)-element Lukasiewicz chain {0, 1/m, ..., 1}, stored as
    indices 0..m.  L(1) is the two-element Boolean algebra; L(0) is the
    trivial algebra."""

    carrier_kind = "finite_chain"

    def __init__(self, m: int):
        if m < 0:
            raise ValueError("chain parameter must be >= 0")
        self.m = m

    @property
    def zero(self):
        return 0

    def oplus(self, x, y):
        return min(self.m, x + y)

    def neg(self, x):
        return self.m - x

    def enumerate(self, bound):
        return list(range(self.m + 1))

    def window_size(self, bound):
        return self.m + 1

    def carrier(self):
        return list(range(self.m + 1))

    def validate(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x <= self.m:
            raise CarrierMismatchError(f"{x!r} is not an index of L({self.m})")

    def descriptor(self):
        if self.m == 0:
            return "Trivial"
        return "B" if self.m == 1 else f"L({self.m})"

    def format_element(self, x):
        if self.m <= 1:
            return str(x)
        if x == 0:
            return "0"
        if x == self.m:
            return "1"
        return f"{x}/{self.m}"


class GammaAlgebra(MvAlgebra):
    """Unit interval [0, u] of a unital group, with the truncation
    operations x oplus y = inf(u, x + y) and neg x = u - x.

    The defining formulas are the standard truncation ones; they are
    validated by the invariant that the lexicographic instance
    Gamma(Z x_lex G, (1, 0)) reproduces the Sigma(G) carrier.
    """

    carrier_kind = "gamma"

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

    @property
    def one(self):
        return self.unit

    def oplus(self, x, y):
        return self.group.inf(self.unit, self.group.add(x, y))

    def neg(self, x):
        return self.group.sub(self.unit, x)

    def enumerate(self, bound):
        g = self.group
        z = g.zero
        return [
            x for x in g.enumerate(bound)
            if g.leq(z, x) and g.leq(x, self.unit)
        ]

    def carrier(self):
        # Finite exactly when the interval [0, u] is: pointwise carriers
        # with every coordinate bounded by u, or a lexicographic head over
        # a trivial tail.
        return _interval_carrier(self.group, self.unit)

    def validate(self, x):
        self.group.validate(x)
        g = self.group
        if not (g.leq(g.zero, x) and g.leq(x, self.unit)):
            raise CarrierMismatchError(
                f"{g.format_element(x)} is outside [0, {g.format_element(self.unit)}]"
            )

    def descriptor(self):
        return f"Gamma({self.group.descriptor()},{self.group.format_element(self.unit)})"

    def format_element(self, x):
        return self.group.format_element(x)


def _interval_carrier(group: LGroup, unit) -> Optional[list]:
    if isinstance(unit, int):
        return list(range(unit + 1))
    if isinstance(unit, tuple):
        return [tuple(t) for t in itertools.product(*(range(a + 1) for a in unit))]
    if isinstance(unit, LexPair):
        # A lexicographic interval [0, (h, t)] is infinite unless the
        # tail group is trivial.
        if group.tail.window_size(1) == 1:
            t = group.tail.zero
            return [LexPair(h, t) for h in range(unit.head + 1)]
        return None
    return None


class SigmaAlgebra(GammaAlgebra):
    """Sigma(G) = Gamma(Z x_lex G, (1, 0)): the perfect MV-algebra whose
    radical is the tagged positive cone (0, g >= 0) and whose coradical
    is (1, g <= 0)."""

    carrier_kind = "sigma"

    def __init__(self, group: LGroup):
        self.base_group = group
        lex = LexGroup(group)
        super().__init__(lex, LexPair(1, group.zero))

    def rad(self, g) -> LexPair:
        """The radical element (0, g); requires g >= 0."""
        x = LexPair(0, g)
        self.validate(x)
        return x

    def corad(self, g) -> LexPair:
        """The coradical element (1, g); requires g <= 0."""
        x = LexPair(1, g)
        self.validate(x)
        return x

    def tag_of(self, x) -> str:
        self.validate(x)
        return "rad" if x.head == 0 else "corad"

    def descriptor(self):
        return f"Sigma({self.base_group.descriptor()})"


class ProductAlgebra(MvAlgebra):
    """Finite direct product with componentwise operations.  Enumeration
    is the cartesian product of the factor enumerations at the same
    bound, which grows exponentially in the number of factors."""

    carrier_kind = "product"

    def __init__(self, factors: Sequence[MvAlgebra]):
        if not factors:
            raise ValueError("a product needs at least one factor")
        self.factors = tuple(factors)

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    def oplus(self, x, y):
        return tuple(f.oplus(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def enumerate(self, bound):
        return [
            tuple(t)
            for t in itertools.product(*(f.enumerate(bound) for f in self.factors))
        ]

    def window_size(self, bound):
        size = 1
        for f in self.factors:
            size *= f.window_size(bound)
        return size

    def carrier(self):
        parts = [f.carrier() for f in self.factors]
        if any(p is None for p in parts):
            return None
        return [tuple(t) for t in itertools.product(*parts)]

    def validate(self, x):
        if not isinstance(x, tuple) or len(x) != len(self.factors):
            raise CarrierMismatchError(
                f"{x!r} does not have arity {len(self.factors)}"
            )
        for f, a in zip(self.factors, x):
            f.validate(a)

    def descriptor(self):
        return "Prod(" + ",".join(f.descriptor() for f in self.factors) + ")"

    def format_element(self, x):
        return "(" + ",".join(f.format_element(a) for f, a in zip(self.factors, x)) + ")"


class PointedAlgebra(MvAlgebra):
    """An algebra with a distinguished element, used as a model of the
    pointed theories.  Delegates every operation."""

    carrier_kind = "pointed"

    def __init__(self, algebra: MvAlgebra, point):
        algebra.validate(point)
        self.algebra = algebra
        self.unit = point

    @property
    def zero(self):
        return self.algebra.zero

    def oplus(self, x, y):
        return self.algebra.oplus(x, y)

    def neg(self, x):
        return self.algebra.neg(x)

    def enumerate(self, bound):
        return self.algebra.enumerate(bound)

    def window_size(self, bound):
        return self.algebra.window_size(bound)

    def carrier(self):
        return self.algebra.carrier()

    def validate(self, x):
        self.algebra.validate(x)

    def descriptor(self):
        return (f"Pointed({self.algebra.descriptor()},"
                f"{self.algebra.format_element(self.unit)})")

    def format_element(self, x):
        return self.algebra.format_element(x)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def derived_ops(A: MvAlgebra, x, y) -> dict:
    """Evaluate every derived operation at a pair, after validating that
    both arguments belong to the carrier."""
    A.validate(x)
    A.validate(y)
    return {
        "odot": A.odot(x, y),
        "sup": A.sup(x, y),
        "inf": A.inf(x, y),
        "leq": A.leq(x, y),
        "one": A.one,
        "d": A.d(x, y),
    }


def nat_scalar(A: MvAlgebra, n: int, x):
    """nx = x oplus ... oplus x, with 0x = 0."""
    if n < 0:
        raise ValueError("scalar must be a natural number")
    acc = A.zero
    for _ in range(n):
        acc = A.oplus(acc, x)
    return acc


def mv_power(A: MvAlgebra, x, n: int):
    """x^n = x odot ... odot x, with x^0 = 1."""
    if n < 0:
        raise ValueError("exponent must be a natural number")
    acc = A.one
    for _ in range(n):
        acc = A.odot(acc, x)
    return acc


def order_of(A: MvAlgebra, x, bound: int):
    """The least n <= bound with nx = 1, else NoneUpTo(bound)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    one = A.one
    acc = A.zero
    for n in range(1, bound + 1):
        acc = A.oplus(acc, x)
        if acc == one:
            return Finite(n)
    return NoneUpTo(bound)


def radical_membership(A: MvAlgebra, x) -> bool:
    """x <= neg x.  Characterizes the radical in any Chang-variety
    algebra."""
    return A.leq(x, A.neg(x))


def coradical_membership(A: MvAlgebra, x) -> bool:
    """neg x <= x."""
    return A.leq(A.neg(x), x)


def is_boolean(A: MvAlgebra, x) -> bool:
    """Idempotence: x oplus x = x."""
    return A.oplus(x, x) == x


def boolean_skeleton_generators(A: MvAlgebra, gens: Iterable) -> list:
    """The images (2x)^2 of the generators, which generate the Boolean
    skeleton of a finitely generated Chang-variety algebra."""
    return [mv_power(A, nat_scalar(A, 2, g), 2) for g in gens]


def check_chang_variety(A: MvAlgebra, bound: int) -> Verdict:
    """Check the Chang-variety axioms 2x^2 = (2x)^2 and 2(2x)^2 = (2x)^2
    over the bounded enumeration."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for x in A.enumerate(bound):
        sq2 = nat_scalar(A, 2, mv_power(A, x, 2))
        dbl_sq = mv_power(A, nat_scalar(A, 2, x), 2)
        if sq2 != dbl_sq:
            return CounterExample(x, axiom="xi")
        if nat_scalar(A, 2, dbl_sq) != dbl_sq:
            return CounterExample(x, axiom="P.2")
    return Holds()


class PerfectnessReport:
    """Outcome of ``check_perfect``: the P.1-P.4 verdict plus the verdict
    of the equivalent family {P.1, beta}, which must agree on genuine
    MV-algebras."""

    def __init__(self, verdict: Verdict, p_family: Verdict, beta_family: Verdict):
        self.verdict = verdict
        self.p_family = p_family
        self.beta_family = beta_family

    @property
    def ok(self) -> bool:
        return self.verdict.ok

    @property
    def families_agree(self) -> bool:
        return self.p_family.ok == self.beta_family.ok

    def __repr__(self):
        return (
            f"PerfectnessReport({self.verdict!r}, families_agree="
            f"{self.families_agree})"
        )


def check_perfect(A: MvAlgebra, bound: int) -> PerfectnessReport:
    """Check perfectness axioms P.1-P.4 over the bounded enumeration.

    P.3 is checked in its idempotent form x oplus x = x |- x = 0 \\/ x = 1.
    The report also carries the verdicts of the two provably equivalent
    families {P.1, P.2, P.3} and {P.1, beta}.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    elems = A.enumerate(bound)
    zero, one = A.zero, A.one

    def axiom_p1(x):
        return nat_scalar(A, 2, mv_power(A, x, 2)) == mv_power(A, nat_scalar(A, 2, x), 2)

    def axiom_p2(x):
        sq = mv_power(A, nat_scalar(A, 2, x), 2)
        return nat_scalar(A, 2, sq) == sq

    def axiom_p3(x):
        if A.oplus(x, x) != x:
            return True
        return x == zero or x == one

    def axiom_p4(x):
        return x != A.neg(x)

    def axiom_beta(x):
        return A.leq(x, A.neg(x)) or A.leq(A.neg(x), x)

    verdict: Verdict = Holds()
    for name, ax in (("P.1", axiom_p1), ("P.2", axiom_p2),
                     ("P.3", axiom_p3), ("P.4", axiom_p4)):
        for x in elems:
            if not ax(x):
                verdict = CounterExample(x, axiom=name)
                break
        if not verdict.ok:
            break

    p_family: Verdict = Holds()
    for name, ax in (("P.1", axiom_p1), ("P.2", axiom_p2), ("P.3", axiom_p3)):
        for x in elems:
            if not ax(x):
                p_family = CounterExample(x, axiom=name)
                break
        if not p_family.ok:
            break

    beta_family: Verdict = Holds()
    for name, ax in (("P.1", axiom_p1), ("beta", axiom_beta)):
        for x in elems:
            if not ax(x):
                beta_family = CounterExample(x, axiom=name)
                break
        if not beta_family.ok:
            break

    return PerfectnessReport(verdict, p_family, beta_family)
