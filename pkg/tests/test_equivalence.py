"""The functors, natural isomorphisms, pair representation, pointed
variants, and the antiarchimedean checks."""

import itertools

import pytest

import mvtool as mv
from mvtool.lgroup_core import CanonPair, LexPair
from mvtool.verdicts import Finite, NoneUpTo

Z = mv.ZGroup()
Z2 = mv.ZnGroup(2)
LexZZ = mv.LexGroup(mv.ZGroup())
C = mv.ChangAlgebra()


# ---------------------------------------------------------------------------
# Independent oracle for the truncation operations: plain interval
# arithmetic over Z x_lex Z written out directly.
# ---------------------------------------------------------------------------


def lex_leq(a, b):
    return a[0] < b[0] or (a[0] == b[0] and a[1] <= b[1])


def lex_min(a, b):
    return a if lex_leq(a, b) else b


def sigma_z_oplus_oracle(x, y):
    s = (x[0] + y[0], x[1] + y[1])
    return lex_min((1, 0), s)


def sigma_z_neg_oracle(x):
    return (1 - x[0], -x[1])


def test_sigma_z_ops_match_interval_oracle():
    S = mv.sigma(Z)
    window = S.enumerate(6)
    for x in window:
        nx = S.neg(x)
        assert (nx.head, nx.tail) == sigma_z_neg_oracle((x.head, x.tail))
        for y in window:
            got = S.oplus(x, y)
            assert (got.head, got.tail) == \
                sigma_z_oplus_oracle((x.head, x.tail), (y.head, y.tail))


def test_sigma_examples():
    S = mv.sigma(Z)
    assert S.oplus(S.rad(2), S.corad(-3)) == LexPair(1, -1)
    assert S.tag_of(LexPair(1, -1)) == "corad"
    assert S.tag_of(LexPair(0, 4)) == "rad"
    # sigma of the trivial group is the two-element algebra
    S0 = mv.sigma(mv.ZnGroup(0))
    assert sorted([S0.zero, S0.one], key=repr) == \
        sorted(S0.enumerate(5), key=repr)
    # sigma(Z) is isomorphic to C via Fin/CoFin tagging
    bij = {}
    for n in range(13):
        bij[mv.Fin(n)] = S.rad(n)
        bij[mv.CoFin(n)] = S.corad(-n)
    small = [x for x in bij if x.n <= 6]
    for x, y in itertools.product(small, repeat=2):
        assert bij[C.oplus(x, y)] == S.oplus(bij[x], bij[y])
        assert bij[C.neg(x)] == S.neg(bij[x])


def test_sigma_tagging_matches_membership_predicates():
    S = mv.sigma(Z2)
    for x in S.enumerate(5):
        assert (S.tag_of(x) == "rad") == mv.radical_membership(S, x)
        assert (S.tag_of(x) == "corad") == mv.coradical_membership(S, x)


def test_sigma_is_perfect_and_in_chang_variety():
    for G in (Z, Z2, LexZZ):
        S = mv.sigma(G)
        assert mv.check_perfect(S, 5).ok
        assert mv.check_chang_variety(S, 5).ok


def test_gamma_examples():
    assert mv.gamma(Z, 1).enumerate(4) == [0, 1]
    assert mv.gamma(Z, 2).enumerate(4) == [0, 1, 2]
    with pytest.raises(mv.InvalidUnitError):
        mv.gamma(Z, -1)
    # the lexicographic unit interval is exactly the sigma carrier
    G = mv.gamma(mv.LexGroup(Z), LexPair(1, 0))
    S = mv.sigma(Z)
    for b in (2, 5):
        assert G.enumerate(b) == S.enumerate(b)
    assert mv.gamma(Z2, (1, 1)).carrier() is not None


def test_sigma_corad_orders():
    S = mv.sigma(Z2)
    for x in S.enumerate(4):
        if S.tag_of(x) == "corad":
            expect = Finite(1) if x == S.one else Finite(2)
            assert mv.order_of(S, x, 10) == expect
        elif x != S.zero:
            assert mv.order_of(S, x, 20) == NoneUpTo(20)


def test_delta_of_chang_is_z():
    D = mv.delta(C)

    def to_int(p):
        return p.u.n - p.v.n

    window = D.enumerate(5)
    assert sorted(to_int(p) for p in window) == list(range(-5, 6))
    for p, q in itertools.product(window, repeat=2):
        assert to_int(D.add(p, q)) == to_int(p) + to_int(q)
        assert to_int(D.sup(p, q)) == max(to_int(p), to_int(q))
    assert mv.delta(mv.FiniteChainAlgebra(1)).enumerate(4) == [
        CanonPair(0, 0)
    ]


def test_delta_rejects_non_perfect():
    with pytest.raises(mv.NotPerfectError):
        mv.delta(mv.FiniteChainAlgebra(2))
    with pytest.raises(mv.NotPerfectError):
        mv.delta(mv.ProductAlgebra([C, C]))


def test_phi_examples():
    assert mv.phi_G(Z, 0) == CanonPair(LexPair(0, 0), LexPair(0, 0))
    assert mv.phi_G(Z, -3) == CanonPair(LexPair(0, 0), LexPair(0, 3))
    assert mv.phi_G_inverse(
        Z, CanonPair(LexPair(0, 5), LexPair(0, 2))) == 3
    for g in Z2.enumerate(4):
        assert mv.phi_G_inverse(Z2, mv.phi_G(Z2, g)) == g


def test_phi_roundtrip_reports():
    for G in (Z, Z2, LexZZ):
        rep = mv.phi_roundtrip_report(G, 4)
        assert rep["failures"] == []
        assert rep["checked_pairs"] == len(G.enumerate(4)) ** 2


def test_beta_examples():
    assert mv.beta_A(C, mv.Fin(2)) == LexPair(0, CanonPair(mv.Fin(2), mv.Fin(0)))
    assert mv.beta_A(C, mv.CoFin(0)) == LexPair(1, CanonPair(mv.Fin(0), mv.Fin(0)))
    assert mv.beta_A(C, mv.CoFin(3)) == LexPair(1, CanonPair(mv.Fin(0), mv.Fin(3)))
    target = mv.sigma(mv.delta(C))
    assert mv.beta_A(C, mv.CoFin(0)) == target.one
    # an element incomparable with its negation witnesses non-perfectness
    with pytest.raises(mv.NotPerfectError):
        mv.beta_A(mv.ProductAlgebra([C, C]), (mv.Fin(1), mv.CoFin(1)))


def test_beta_roundtrip_reports():
    for A in (C, mv.sigma(Z2), mv.FiniteChainAlgebra(1)):
        rep = mv.beta_roundtrip_report(A, 4)
        assert rep["failures"] == []


def test_monoid_group_roundtrips():
    for G in (Z, Z2):
        assert mv.chi_roundtrip_report(G, 4)["failures"] == []
    for M in (mv.NMonoid(), mv.NnMonoid(2)):
        assert mv.phi_M_roundtrip_report(M, 4)["failures"] == []


def test_pair_group_examples():
    P = mv.pair_group_ops(C)
    s = P.add(CanonPair(mv.Fin(1), mv.Fin(0)), CanonPair(mv.Fin(0), mv.Fin(2)))
    assert s == CanonPair(mv.Fin(0), mv.Fin(1))
    assert P.negate(CanonPair(mv.Fin(2), mv.Fin(0))) == \
        CanonPair(mv.Fin(0), mv.Fin(2))
    assert P.zero == CanonPair(mv.Fin(0), mv.Fin(0))
    # the defining relation of the sum: z + v + b = t + u + a
    m = P.monoid
    for p in P.enumerate(3):
        for q in P.enumerate(3):
            z, t = P.add(p, q).u, P.add(p, q).v
            assert m.add(m.add(z, p.v), q.v) == m.add(m.add(t, p.u), q.u)
            assert m.inf(z, t) == m.zero


def test_pair_group_agrees_with_delta():
    """The identity on canonical pairs is an isomorphism between the
    componentwise pair group and the Grothendieck group of the radical."""
    for A in (C, mv.sigma(Z)):
        P = mv.pair_group_ops(A)
        D = mv.delta(A)
        elems = P.enumerate(4)
        assert set(elems) == set(D.enumerate(4))
        for p, q in itertools.product(elems, repeat=2):
            assert P.add(p, q) == D.add(p, q)
            assert P.inf(p, q) == D.inf(p, q)
            assert P.sup(p, q) == D.sup(p, q)
            assert P.leq(p, q) == D.leq(p, q)
        for p in elems:
            assert P.negate(p) == D.negate(p)


def test_pair_group_on_canonical_pairs_up_to_ten():
    P = mv.pair_group_ops(C)
    D = mv.delta(C)
    pairs = [CanonPair(mv.Fin(n), mv.Fin(0)) for n in range(11)] + \
            [CanonPair(mv.Fin(0), mv.Fin(n)) for n in range(1, 11)]
    for p, q in itertools.product(pairs, repeat=2):
        assert P.add(p, q) == D.add(p, q)
        assert P.inf(p, q) == D.inf(p, q)
        assert P.sup(p, q) == D.sup(p, q)


def test_sigma_star_and_delta_star():
    S, a = mv.sigma_star(Z, 1)
    assert a == LexPair(0, 1)
    assert S.tag_of(a) == "rad"
    D, unit = mv.delta_star(C, mv.Fin(1))
    assert unit == CanonPair(mv.Fin(1), mv.Fin(0))
    # the unit really is a strong unit of delta(C) on a window
    window = D.enumerate(4)
    for p in window:
        if D.leq(D.zero, p):
            assert any(
                D.leq(p, _scale(D, n, unit)) for n in range(10)
            )
    # round-trip markers match
    assert mv.beta_A(C, mv.Fin(1)) == LexPair(0, CanonPair(mv.Fin(1), mv.Fin(0)))
    assert mv.phi_G(Z, 1) == CanonPair(LexPair(0, 1), LexPair(0, 0))

    S0, a0 = mv.sigma_star(mv.ZnGroup(0), ())
    assert len(S0.enumerate(2)) == 2 and a0 == S0.zero


def _scale(G, n, x):
    acc = G.zero
    for _ in range(n):
        acc = G.add(acc, x)
    return acc


def test_delta_star_precondition_failures():
    with pytest.raises(mv.PreconditionError):
        mv.delta_star(C, mv.CoFin(1))  # not a radical element
    with pytest.raises(mv.PreconditionError):
        mv.delta_star(C, mv.Fin(0))  # zero does not generate the radical
    with pytest.raises(mv.PreconditionError):
        mv.sigma_star(Z2, (1, 0))  # not a strong unit for the pointwise order


def test_ant_check_examples():
    assert mv.ant_check(LexZZ, LexPair(1, 0), 6).ok
    assert mv.ant_check(Z, 1, 4).ok
    v = mv.ant_check(Z, 2, 4)
    assert not v.ok and v.env == 1
    assert mv.ant_check(Z2, (1, 1), 4).ok is False


def test_functor_action_on_homomorphisms():
    # diagonal embedding h: Z -> Z^2 is a lattice-group homomorphism
    def h(g):
        return (g, g)

    Sh = mv.sigma_map(h)
    S, S2 = mv.sigma(Z), mv.sigma(Z2)
    for x in S.enumerate(4):
        assert S2.validate(Sh(x)) is None
        for y in S.enumerate(4):
            assert Sh(S.oplus(x, y)) == S2.oplus(Sh(x), Sh(y))
        assert Sh(S.neg(x)) == S2.neg(Sh(x))

    # MV-homomorphism C -> C doubling the index, mapped through delta
    def f(x):
        return mv.ChangElem(x.kind, 2 * x.n)

    Df = mv.delta_map(C, f)
    D = mv.delta(C)
    for p in D.enumerate(3):
        for q in D.enumerate(3):
            assert Df(D.add(p, q)) == D.add(Df(p), Df(q))
