"""The functors between perfect MV-algebras and lattice-ordered abelian
groups, their pointed variants, and the pair representation of groups
inside perfect algebras.

Sigma sends a group G to the unit interval of Z x_lex G at (1, 0); Delta
sends a perfect algebra to the Grothendieck group of its radical.  The
natural isomorphisms phi (on groups) and beta (on algebras) witness that
the two are inverse to each other, exactly, on bounded windows.
"""

from __future__ import annotations

from typing import Callable, Tuple

from .errors import CarrierMismatchError, NotPerfectError, PreconditionError
from .lgroup_core import (
    CanonPair,
    GrothendieckGroup,
    LexPair,
    LGroup,
    LMonoid,
    canon_pair,
    grothendieck_group,
    neg_part,
    pos_part,
    strong_unit_check,
)
from .mv_core import (
    GammaAlgebra,
    MvAlgebra,
    SigmaAlgebra,
    check_perfect,
    nat_scalar,
    radical_membership,
)
from .verdicts import CounterExample, Holds, Verdict

SigmaElem = LexPair  # Rad(g) is (0, g) with g >= 0; Corad(g) is (1, g) with g <= 0.


class RadicalMonoid(LMonoid):
    """The radical {x | x <= neg x} of a Chang-variety algebra, as a
    cancellative lattice-ordered abelian monoid under oplus.

    Subtractivity is witnessed inside the carrier: for x <= y the unique
    z with x oplus z = y is y odot (neg x).
    """

    def __init__(self, algebra: MvAlgebra):
        self.algebra = algebra

    @property
    def zero(self):
        return self.algebra.zero

    def add(self, x, y):
        return self.algebra.oplus(x, y)

    def leq(self, x, y):
        return self.algebra.leq(x, y)

    def inf(self, x, y):
        return self.algebra.inf(x, y)

    def sup(self, x, y):
        return self.algebra.sup(x, y)

    def subtract(self, x, y):
        if not self.algebra.leq(y, x):
            raise CarrierMismatchError("subtraction needs y <= x in the radical")
        return self.algebra.odot(x, self.algebra.neg(y))

    def enumerate(self, bound):
        return [
            x for x in self.algebra.enumerate(bound)
            if radical_membership(self.algebra, x)
        ]

    def validate(self, x):
        self.algebra.validate(x)
        if not radical_membership(self.algebra, x):
            raise CarrierMismatchError(
                f"{self.algebra.format_element(x)} is not a radical element"
            )

    def descriptor(self):
        return f"Rad({self.algebra.descriptor()})"

    def format_element(self, x):
        return self.algebra.format_element(x)


# ---------------------------------------------------------------------------
# The functors
# ---------------------------------------------------------------------------


def sigma(G: LGroup) -> SigmaAlgebra:
    """The perfect MV-algebra Gamma(Z x_lex G, (1, 0))."""
    return SigmaAlgebra(G)


def gamma(G: LGroup, u) -> GammaAlgebra:
    """The unit interval [0, u] with truncated addition."""
    return GammaAlgebra(G, u)


def delta(A: MvAlgebra, check_bound: int = 4) -> GrothendieckGroup:
    """The Grothendieck group of the radical monoid of a perfect algebra.

    Perfectness is verified on ``enumerate(check_bound)`` first; a
    counterexample aborts the construction.
    """
    report = check_perfect(A, check_bound)
    if not report.ok:
        raise NotPerfectError(
            f"{A.descriptor()} is not perfect at bound {check_bound}: "
            f"{report.verdict!r}",
            counterexample=report.verdict,
        )
    return grothendieck_group(RadicalMonoid(A))


def phi_G(G: LGroup, g) -> CanonPair:
    """The group-side natural isomorphism G -> Delta(Sigma(G)):
    g maps to [(0, g+), (0, g+ - g)].  The image pair is canonical
    because inf(g+, g+ - g) = g+ - sup(0, g) = 0."""
    G.validate(g)
    p = pos_part(G, g)
    return CanonPair(LexPair(0, p), LexPair(0, G.sub(p, g)))


def phi_G_inverse(G: LGroup, pair: CanonPair):
    """Inverse of phi: [(0, g1), (0, g2)] maps to g1 - g2."""
    u, v = pair.u, pair.v
    if not (isinstance(u, LexPair) and isinstance(v, LexPair)
            and u.head == 0 and v.head == 0):
        raise CarrierMismatchError(f"{pair!r} is not a radical pair over Sigma")
    return G.sub(u.tail, v.tail)


def beta_A(A: MvAlgebra, x) -> SigmaElem:
    """The algebra-side natural isomorphism A -> Sigma(Delta(A)).

    Radical x maps to (0, [x, 0]); coradical x maps to (1, -[neg x, 0])
    = (1, [0, neg x]).  Elements in neither part witness that A is not
    perfect.
    """
    A.validate(x)
    nx = A.neg(x)
    if A.leq(x, nx):
        return LexPair(0, CanonPair(x, A.zero))
    if A.leq(nx, x):
        return LexPair(1, CanonPair(A.zero, nx))
    raise NotPerfectError(
        f"{A.format_element(x)} is neither radical nor coradical",
        counterexample=x,
    )


def beta_A_inverse(A: MvAlgebra, s: SigmaElem):
    """Inverse of beta: (0, [x, 0]) maps to x and (1, [0, y]) to neg y."""
    if not isinstance(s, LexPair) or not isinstance(s.tail, CanonPair):
        raise CarrierMismatchError(f"{s!r} is not an element of Sigma(Delta(A))")
    if s.head == 0 and s.tail.v == A.zero:
        return s.tail.u
    if s.head == 1 and s.tail.u == A.zero:
        return A.neg(s.tail.v)
    raise CarrierMismatchError(f"{s!r} is not in the image of beta")


class RadPairGroup(LGroup):
    """Group structure on radical pairs (u, v) with inf(u, v) = 0,
    computed componentwise.

    The lattice operations use the positive/negative-part identities
    inf(x, y)+ = inf(x+, y+), inf(x, y)- = sup(x-, y-) (and dually for
    sup), which is an independent route from the Grothendieck-group
    formulas; agreement of the two is a tested invariant.
    """

    def __init__(self, algebra: MvAlgebra, check_bound: int = 4):
        report = check_perfect(algebra, check_bound)
        if not report.ok:
            raise NotPerfectError(
                f"{algebra.descriptor()} is not perfect at bound {check_bound}",
                counterexample=report.verdict,
            )
        self.algebra = algebra
        self.monoid = RadicalMonoid(algebra)

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
        return CanonPair(m.inf(x.u, y.u), m.sup(x.v, y.v))

    def sup(self, x, y):
        m = self.monoid
        return CanonPair(m.sup(x.u, y.u), m.inf(x.v, y.v))

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
            raise CarrierMismatchError(f"{x!r} is not a pair")
        self.monoid.validate(x.u)
        self.monoid.validate(x.v)
        if self.monoid.inf(x.u, x.v) != self.monoid.zero:
            raise CarrierMismatchError(f"{x!r} is not canonical")

    def descriptor(self):
        return f"RadPairs({self.algebra.descriptor()})"

    def format_element(self, x):
        f = self.algebra.format_element
        return f"[{f(x.u)},{f(x.v)}]"


def pair_group_ops(A: MvAlgebra) -> RadPairGroup:
    """The interpretation of the group theory on radical pairs of a
    perfect algebra."""
    return RadPairGroup(A)


# ---------------------------------------------------------------------------
# Pointed / unital variants
# ---------------------------------------------------------------------------


def sigma_star(G: LGroup, u, bound: int = 4) -> Tuple[SigmaAlgebra, SigmaElem]:
    """(Sigma(G), (0, u)): the pointed perfect algebra of a unital group.

    The unit axioms are verified on the bounded window first.
    """
    verdict = strong_unit_check(G, u, bound)
    if not verdict.ok:
        raise PreconditionError(
            f"{G.format_element(u)} fails the strong-unit axioms at bound {bound}",
            report=verdict,
        )
    alg = sigma(G)
    return alg, alg.rad(u)


def delta_star(A: MvAlgebra, a, bound: int = 4) -> Tuple[GrothendieckGroup, CanonPair]:
    """(Delta(A), [a, 0]): the unital group of a pointed perfect algebra.

    Requires a <= neg a, and that every radical element on the window
    lies below some na (searched up to a derived cap).
    """
    A.validate(a)
    if not A.leq(a, A.neg(a)):
        raise PreconditionError(
            f"{A.format_element(a)} is not a radical element",
            report=CounterExample(a, axiom="Pstar.1"),
        )
    cap = 2 * bound + 2
    for x in A.enumerate(bound):
        if not radical_membership(A, x):
            continue
        if not any(A.leq(x, nat_scalar(A, n, a)) for n in range(cap + 1)):
            raise PreconditionError(
                f"{A.format_element(x)} exceeds every multiple of the point "
                f"up to {cap}",
                report=CounterExample(x, axiom="Pstar.2",
                                      note=f"search capped at n <= {cap}"),
            )
    group = delta(A, check_bound=bound)
    return group, CanonPair(a, A.zero)


def ant_check(G: LGroup, u, bound: int) -> Verdict:
    """Check the two antiarchimedean sequents on the unit interval
    [0, u] enumerated at ``bound``.

    Holds exactly for units realizing a lexicographic product with Z in
    front; Gamma(Z, 2) already fails at x = 1.
    """
    interval = gamma(G, u)
    two = lambda t: G.add(t, t)
    for x in interval.enumerate(bound):
        lhs = G.sup(G.zero, G.sub(two(G.inf(two(x), u)), u))
        rhs = G.inf(u, two(G.sup(G.sub(two(x), u), G.zero)))
        if lhs != rhs:
            return CounterExample(x, axiom="Ant.1")
        if G.inf(two(x), u) == x and x != G.zero and x != u:
            return CounterExample(x, axiom="Ant.2")
    return Holds()


# ---------------------------------------------------------------------------
# Round-trip verification
# ---------------------------------------------------------------------------


def _bijection_failures(fmt_dom, fmt_cod, image: dict, codomain: list,
                        inverse, forward) -> list:
    """Bijectivity evidence on windows: injectivity of the image,
    image contained in the codomain window, and surjectivity witnessed
    by the explicit inverse (every codomain-window element has a
    preimage that maps back onto it).

    Set equality of the two windows is deliberately not required: over a
    lexicographic carrier, canonicalizing pairs of window elements can
    produce coordinates beyond the window, so the codomain window may
    properly contain the image while the map is still a carrier-level
    bijection.
    """
    failures = []
    by_value: dict = {}
    for g, v in image.items():
        if v in by_value:
            failures.append({
                "kind": "not-injective",
                "elements": [fmt_dom(by_value[v]), fmt_dom(g)],
            })
        by_value[v] = g
    cod = set(codomain)
    for v in sorted(set(image.values()) - cod, key=repr):
        failures.append({"kind": "image-outside-window", "element": fmt_cod(v)})
    for p in codomain:
        if forward(inverse(p)) != p:
            failures.append({"kind": "not-surjective", "element": fmt_cod(p)})
    return failures


def phi_roundtrip_report(G: LGroup, bound: int) -> dict:
    """Verify that phi_G is a bijective homomorphism of groups with
    lattice structure between the windows of G and Delta(Sigma(G)), and
    that its inverse undoes it.  Returns counts and a list of failures
    (empty on success)."""
    window = G.enumerate(bound)
    target = delta(sigma(G))
    fmt = G.format_element
    image = {g: phi_G(G, g) for g in window}
    failures = _bijection_failures(fmt, target.format_element, image,
                                   target.enumerate(bound),
                                   lambda p: phi_G_inverse(G, p),
                                   lambda g: phi_G(G, g))
    for g in window:
        if phi_G_inverse(G, image[g]) != g:
            failures.append({"kind": "inverse", "element": fmt(g)})
    checked_pairs = 0
    for g in window:
        if image[G.negate(g)] != target.negate(image[g]):
            failures.append({"kind": "negate", "element": fmt(g)})
        for h in window:
            checked_pairs += 1
            pg, ph = image[g], image[h]
            if phi_G(G, G.add(g, h)) != target.add(pg, ph):
                failures.append({"kind": "add", "elements": [fmt(g), fmt(h)]})
            if phi_G(G, G.inf(g, h)) != target.inf(pg, ph):
                failures.append({"kind": "inf", "elements": [fmt(g), fmt(h)]})
            if phi_G(G, G.sup(g, h)) != target.sup(pg, ph):
                failures.append({"kind": "sup", "elements": [fmt(g), fmt(h)]})
    return {"direction": "group", "model": G.descriptor(), "bound": bound,
            "checked_pairs": checked_pairs, "failures": failures}


def beta_roundtrip_report(A: MvAlgebra, bound: int) -> dict:
    """Verify that beta_A is a bijective MV-homomorphism between the
    windows of A and Sigma(Delta(A))."""
    window = A.enumerate(bound)
    target = sigma(delta(A))
    fmt = A.format_element
    image = {x: beta_A(A, x) for x in window}
    failures = _bijection_failures(fmt, target.format_element, image,
                                   target.enumerate(bound),
                                   lambda s: beta_A_inverse(A, s),
                                   lambda x: beta_A(A, x))
    for x in window:
        if beta_A_inverse(A, image[x]) != x:
            failures.append({"kind": "inverse", "element": fmt(x)})
        if image.get(A.neg(x), beta_A(A, A.neg(x))) != target.neg(image[x]):
            failures.append({"kind": "neg", "element": fmt(x)})
    checked_pairs = 0
    for x in window:
        for y in window:
            checked_pairs += 1
            if beta_A(A, A.oplus(x, y)) != target.oplus(image[x], image[y]):
                failures.append({"kind": "oplus", "elements": [fmt(x), fmt(y)]})
    return {"direction": "algebra", "model": A.descriptor(), "bound": bound,
            "checked_pairs": checked_pairs, "failures": failures}


def chi_roundtrip_report(G: LGroup, bound: int) -> dict:
    """Verify chi_G: g -> [g+, g-] as an isomorphism onto the
    Grothendieck group of the positive cone."""
    from .lgroup_core import positive_cone, grothendieck_group

    window = G.enumerate(bound)
    target = grothendieck_group(positive_cone(G))
    fmt = G.format_element

    def chi(g):
        return CanonPair(pos_part(G, g), neg_part(G, g))

    image = {g: chi(g) for g in window}
    failures = _bijection_failures(fmt, target.format_element, image,
                                   target.enumerate(bound),
                                   lambda p: G.sub(p.u, p.v), chi)
    checked_pairs = 0
    for g in window:
        if chi(G.negate(g)) != target.negate(image[g]):
            failures.append({"kind": "negate", "element": fmt(g)})
        for h in window:
            checked_pairs += 1
            if chi(G.add(g, h)) != target.add(image[g], image[h]):
                failures.append({"kind": "add", "elements": [fmt(g), fmt(h)]})
            if chi(G.inf(g, h)) != target.inf(image[g], image[h]):
                failures.append({"kind": "inf", "elements": [fmt(g), fmt(h)]})
            if chi(G.sup(g, h)) != target.sup(image[g], image[h]):
                failures.append({"kind": "sup", "elements": [fmt(g), fmt(h)]})
    return {"direction": "group-to-pairs", "model": G.descriptor(),
            "bound": bound, "checked_pairs": checked_pairs,
            "failures": failures}


def phi_M_roundtrip_report(M: LMonoid, bound: int) -> dict:
    """Verify phi_M: x -> [x, 0] as an isomorphism onto the positive
    cone of the Grothendieck group."""
    from .lgroup_core import positive_cone, grothendieck_group

    window = M.enumerate(bound)
    groth = grothendieck_group(M)
    target = positive_cone(groth)
    fmt = M.format_element

    def phi_m(x):
        return CanonPair(x, M.zero)

    image = {x: phi_m(x) for x in window}
    failures = _bijection_failures(fmt, groth.format_element, image,
                                   target.enumerate(bound),
                                   lambda p: p.u, phi_m)
    checked_pairs = 0
    for x in window:
        for y in window:
            checked_pairs += 1
            if phi_m(M.add(x, y)) != target.add(image[x], image[y]):
                failures.append({"kind": "add", "elements": [fmt(x), fmt(y)]})
            if phi_m(M.inf(x, y)) != target.inf(image[x], image[y]):
                failures.append({"kind": "inf", "elements": [fmt(x), fmt(y)]})
            if phi_m(M.sup(x, y)) != target.sup(image[x], image[y]):
                failures.append({"kind": "sup", "elements": [fmt(x), fmt(y)]})
    return {"direction": "monoid-to-cone", "model": M.descriptor(),
            "bound": bound, "checked_pairs": checked_pairs,
            "failures": failures}


# ---------------------------------------------------------------------------
# Homomorphism mapping
# ---------------------------------------------------------------------------


def sigma_map(h: Callable) -> Callable:
    """Sigma on arrows: (a, g) maps to (a, h(g))."""

    def mapped(x: SigmaElem) -> SigmaElem:
        return LexPair(x.head, h(x.tail))

    return mapped


def delta_map(target: MvAlgebra, h: Callable) -> Callable:
    """Delta on arrows: [x, y] maps to [h(x), h(y)], re-canonicalized in
    the radical monoid of the target algebra."""
    monoid = RadicalMonoid(target)

    def mapped(p: CanonPair) -> CanonPair:
        return canon_pair(monoid, h(p.u), h(p.v))

    return mapped
