"""Acceptance suite: one test per criterion, each printing a pass/fail
line.  All comparisons are exact integer/structural equality; the only
tolerances are the stated enumeration bounds and runtime budgets.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
per-criterion lines).
"""

import itertools
import json
import time

import pytest

import mvtool as mv
from mvtool import cli, registry
from mvtool.checking import check_sequent
from mvtool.descriptors import parse_model
from mvtool.verdicts import CounterExample, Finite, NoneUpTo

C = mv.ChangAlgebra()
B = mv.FiniteChainAlgebra(1)
L2 = mv.FiniteChainAlgebra(2)
CC = mv.ProductAlgebra([C, C])
Z = mv.ZGroup()
Z2 = mv.ZnGroup(2)
LexZZ = mv.LexGroup(Z)


def _report(criterion, description, ok):
    print(f"[criterion {criterion}] {description}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {criterion} failed: {description}"


def test_criterion_1_axiom_suites():
    started = time.monotonic()
    failures = []
    cache = {}
    for label, desc in registry.axiom_suite():
        model = cache.setdefault(desc, parse_model(desc))
        verdict = check_sequent(model, registry.lookup(label), 6,
                                exists_bound=12)
        if not verdict.ok:
            failures.append((label, desc, verdict))
    elapsed = time.monotonic() - started
    ok = not failures and elapsed < 60.0
    _report(1, f"every registry axiom holds in its model family at bound 6 "
               f"({elapsed:.1f}s, {len(registry.axiom_suite())} checks, "
               f"{len(failures)} failures)", ok)


def test_criterion_2_dinola_lettieri_roundtrip():
    failures = []
    for G in (Z, Z2, LexZZ):
        rep = mv.phi_roundtrip_report(G, 6)
        failures += rep["failures"]
    for A in (C, mv.sigma(Z2), B):
        rep = mv.beta_roundtrip_report(A, 6)
        failures += rep["failures"]
    _report(2, "phi and beta are exact bijective homomorphisms at bound 6",
            not failures)


def test_criterion_3_monoid_group_equivalence():
    failures = []
    for G in (Z, Z2):
        failures += mv.chi_roundtrip_report(G, 4)["failures"]
    for M in (mv.NMonoid(), mv.NnMonoid(2)):
        failures += mv.phi_M_roundtrip_report(M, 4)["failures"]

    P = mv.pair_group_ops(C)
    D = mv.delta(C)
    pairs = [mv.CanonPair(mv.Fin(n), mv.Fin(0)) for n in range(11)] + \
            [mv.CanonPair(mv.Fin(0), mv.Fin(n)) for n in range(1, 11)]
    agree = True
    for p, q in itertools.product(pairs, repeat=2):
        agree &= P.add(p, q) == D.add(p, q)
        agree &= P.inf(p, q) == D.inf(p, q)
        agree &= P.sup(p, q) == D.sup(p, q)
        agree &= P.leq(p, q) == D.leq(p, q)
    _report(3, "chi/phi_M round trips exact at bound 4; pair group agrees "
               "with the radical Grothendieck group up to components 10",
            not failures and agree)


def test_criterion_4_provable_sequents():
    ok = True
    sigma_z2 = mv.sigma(Z2)
    for model in (C, sigma_z2):
        for n in range(1, 6):
            ok &= check_sequent(model, registry.lookup(f"gamma_{n}"), 64).ok
        for n in range(1, 9):
            ok &= check_sequent(model, registry.lookup(f"chi_{n}"), 64).ok
        for roman in ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"):
            ok &= check_sequent(model, registry.lookup(f"rad_ideal.{roman}"),
                                8).ok

    fam = ["P.1", "P.2", "P.3", "beta"]
    for model in (C, B, CC, L2, sigma_z2, mv.FiniteChainAlgebra(0)):
        rep = registry.check_family(model, fam, 6)
        ok &= bool(rep.family_checks) and rep.family_checks[0]["agree"]
    _report(4, "gamma_n/chi_n at bound 64, rad_ideal at bound 8, and the "
               "two perfectness families agree on all six carriers", ok)


def test_criterion_5_negative_controls():
    v1 = check_sequent(L2, registry.lookup("xi"), 3)
    ok = isinstance(v1, CounterExample) and v1.env == {"x": 1} \
        and L2.format_element(v1.env["x"]) == "1/2"
    v2 = check_sequent(CC, registry.lookup("P.3"), 6)
    ok &= isinstance(v2, CounterExample) and \
        v2.env == {"x": (mv.Fin(0), mv.CoFin(0))}
    v3 = mv.strong_unit_check(Z2, (1, 0), 3)
    ok &= isinstance(v3, CounterExample) and v3.env == (0, 1)
    _report(5, "xi fails in L(2) at x=1/2, P.3 fails in CxC at (0,1), "
               "(1,0) is not a strong unit of Z^2", ok)


def test_criterion_6_decomposition():
    d = mv.decompose_product(CC, [(mv.Fin(1), mv.CoFin(1))], bound=8)
    ok = len(d.factors) == 2
    for f in d.factors:
        ok &= mv.check_perfect(f, 8).ok
    ok &= mv.product_reconstruction_check(CC, d, 6).ok

    CCB = mv.ProductAlgebra([C, C, B])
    for A in (CC, CCB):
        booleans = [x for x in A.enumerate(6) if mv.is_boolean(A, x)]
        for a in booleans:
            ok &= mv.pushout_pullback_check(A, a, 6).ok
    _report(6, "CxC decomposes into two perfect factors with exact "
               "reconstruction; pushout-pullback bijection holds for every "
               "Boolean element of CxC and CxCxB at bound 6", ok)


def test_criterion_7_order_facts():
    ok = True
    for n in range(1, 11):
        ok &= mv.order_of(C, mv.CoFin(n), 10) == Finite(2)
        ok &= mv.order_of(C, mv.Fin(n), 50) == NoneUpTo(50)
    _report(7, "ord(1-nc) = 2 and ord(nc) unresolved at bound 50 for "
               "n = 1..10", ok)


def test_criterion_8_antiarchimedean():
    v1 = mv.ant_check(LexZZ, mv.LexPair(1, 0), 6)
    v2 = mv.ant_check(Z, 2, 4)
    ok = v1.ok and isinstance(v2, CounterExample)
    _report(8, "antiarchimedean identities hold on Z x_lex Z at (1,0) and "
               "fail on Gamma(Z,2)", ok)


FULL_SUITE_CONFIGS = [
    cli.RunConfig(command="check", model="C", sequent="gamma_3", bound=64,
                  seed=11),
    cli.RunConfig(command="check", model="Sigma(Z^2)", sequent="chi_4",
                  bound=16, seed=11),
    cli.RunConfig(command="check", model="L(2)", sequent="xi", bound=3,
                  seed=11),
    cli.RunConfig(command="check-family", model="Prod(C,C)",
                  sequents=["P.1", "P.2", "P.3", "beta"], bound=5, seed=11),
    cli.RunConfig(command="check-family", model="Z^2",
                  sequents=["L.1", "L.8", "L.12", "phi_sup"], bound=4,
                  seed=11),
    cli.RunConfig(command="check-family", model="PosCone(Lex(Z,Z))",
                  sequents=["M.12", "M.13", "M.14", "C"], bound=3, seed=11),
    cli.RunConfig(command="roundtrip", group="Lex(Z,Z)", bound=4, seed=11),
    cli.RunConfig(command="roundtrip", algebra="Sigma(Z^2)", bound=4, seed=11),
    cli.RunConfig(command="decompose", model="Prod(C,C)", gens="(1c,1-1c)",
                  bound=8, seed=11),
    cli.RunConfig(command="ant-check", group="Lex(Z,Z)", unit="(1,0)",
                  bound=6, seed=11),
    cli.RunConfig(command="registry-list", seed=11),
]


def _run_full_suite():
    reports = []
    for config in FULL_SUITE_CONFIGS:
        code, report = cli.run(config)
        report.pop("elapsed_ms")
        reports.append((code, json.dumps(report, sort_keys=True)))
    return reports


def test_criterion_9_determinism_and_runtime():
    started = time.monotonic()
    first = _run_full_suite()
    second = _run_full_suite()
    elapsed = time.monotonic() - started
    ok = first == second and elapsed < 300.0
    _report(9, f"two same-seed runs of the suite agree byte-for-byte "
               f"excluding elapsed_ms ({elapsed:.1f}s for both runs)", ok)
