"""Registry of named sequents and the model families they are checked
against.

Labels follow the conventional names of the axioms: MV.1-6 for
MV-algebras, P.1-4 (with beta, sigma, tau, alpha and the P.3' variant)
for perfect algebras, xi for Chang's variety, L.1-12 and Lu.1-2 for
(unital) groups, M.1-14 plus the cancellation sequent C for the monoid
theory, gamma_n / chi_n for the power lemmas, rad_ideal.i-ix for the
radical-ideal lemma, Pstar.1-2 for pointed perfect algebras, and
Ant.1-2 / A.1-2 for the antiarchimedean and Chang-transfer sequents on
unital groups.

Infinitary disjunctions carry an explicit cap (16); their checks are
sound for witnessed truth but cannot refute, and the checker reports
inconclusive-at-bound in that case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .checking import check_sequent
from .errors import UnknownLabelError
from .sequents import Sequent, parse_sequent
from .verdicts import Verdict

BIGVEE_CAP = 16


@dataclass(frozen=True)
class RegistryEntry:
    label: str
    sequent: Sequent
    theory: str
    kind: str  # "axiom" | "provable" | "alias"
    doc: str
    models: Tuple[str, ...]  # descriptors of the registered model family


def _entries() -> List[RegistryEntry]:
    mv_models = ("C", "B", "Prod(C,C)", "Gamma(Z,2)", "Sigma(Z^2)")
    chang_models = ("C", "B", "Prod(C,C)", "Sigma(Z^2)")
    perfect_models = ("C", "Sigma(Z^2)")
    l_models = ("Z", "Z^2", "Lex(Z,Z)", "Groth(N)", "Groth(N^2)")
    m_models = ("N", "N^2", "PosCone(Z^2)", "PosCone(Lex(Z,Z))")
    lu_models = ("Unital(Z,1)", "Unital(Lex(Z,Z),(1,0))")
    pstar_models = ("Pointed(C,1c)", "Pointed(Sigma(Z^2),(0,(1,1)))")
    ant_models = ("Unital(Lex(Z,Z),(1,0))", "Unital(Z,1)")

    out: List[RegistryEntry] = []

    def add(label, src, theory, kind, doc, models):
        seq = parse_sequent(src)
        out.append(RegistryEntry(label, Sequent(seq.context, seq.antecedent,
                                                seq.consequent, name=label),
                                 theory, kind, doc, tuple(models)))

    # --- MV-algebra axioms ------------------------------------------------
    add("MV.1", "true |-[x,y,z] x (+) (y (+) z) = (x (+) y) (+) z",
        "MV", "axiom", "associativity of the MV sum", mv_models)
    add("MV.2", "true |-[x,y] x (+) y = y (+) x",
        "MV", "axiom", "commutativity of the MV sum", mv_models)
    add("MV.3", "true |-[x] x (+) 0 = x",
        "MV", "axiom", "0 is neutral", mv_models)
    add("MV.4", "true |-[x] neg (neg x) = x",
        "MV", "axiom", "complement is involutive", mv_models)
    add("MV.5", "true |-[x] x (+) neg 0 = neg 0",
        "MV", "axiom", "1 is absorbing", mv_models)
    add("MV.6", "true |-[x,y] neg (neg x (+) y) (+) y = neg (neg y (+) x) (+) x",
        "MV", "axiom", "the characteristic MV axiom (sup is symmetric)", mv_models)

    # --- Chang variety ----------------------------------------------------
    add("xi", "true |-[x] 2*x^2 = (2*x)^2",
        "C", "axiom", "defining identity of the variety generated by Chang's algebra",
        chang_models)

    # --- perfect algebras --------------------------------------------------
    add("P.1", "true |-[x] x^2 (+) x^2 = (x (+) x)^2",
        "P", "axiom", "squares distribute over doubling", perfect_models)
    add("P.2", "true |-[x] 2*(2*x)^2 = (2*x)^2",
        "P", "axiom", "(2x)^2 is idempotent; also an axiom of the Chang variety",
        chang_models)
    add("P.3", "x (+) x = x |-[x] x = 0 \\/ x = 1",
        "P", "axiom", "the only idempotents are the bounds", perfect_models)
    add("P.3'", "inf(x, neg x) = 0 |-[x] x = 0 \\/ x = 1",
        "P", "alias", "P.3 stated through the complemented-element form",
        perfect_models)
    add("P.4", "x = neg x |-[x] false",
        "P", "axiom", "no fixed point of complement (non-triviality)", perfect_models)
    add("beta", "true |-[x] x <= neg x \\/ neg x <= x",
        "P", "axiom", "every element is radical or coradical; with P.1 this "
        "family is equivalent to {P.1, P.2, P.3}", perfect_models)
    add("sigma", "true |-[x] x^2 (+) x^2 = (x (+) x)^2",
        "P", "alias", "classical name for the P.1 identity", perfect_models)
    add("tau", "x^2 = x |-[x] x = 0 \\/ x = 1",
        "P", "provable", "idempotence under the MV product forces a bound",
        perfect_models)
    add("alpha", "x = neg x |-[x] false",
        "P", "alias", "fixed-point form of non-triviality, equivalent to P.4 "
        "over the Chang variety", perfect_models)
    add("nontrivial", "0 = 1 |-[] false",
        "P", "provable", "non-triviality as a closed sequent", perfect_models)

    for n in range(1, 6):
        add(f"gamma_{n}", f"{2 ** n}*x = 1 |-[x] 2*x = 1",
            "C", "provable",
            f"order collapse: if 2^{n} x = 1 then already 2x = 1", chang_models)
    for n in range(1, 9):
        add(f"chi_{n}", f"{n}*x^2 = 1 |-[x] 2*x = 1",
            "MV", "provable",
            f"if {n} x^2 = 1 then 2x = 1 (holds in every MV-algebra)", mv_models)

    rad_ideal = [
        ("i", "x <= neg x /\\ y <= x |-[x,y] y <= neg y",
         "the radical is downward closed"),
        ("ii", "neg z <= z |-[z] neg (z^2) <= z^2",
         "squares of coradical elements are coradical"),
        ("iii", "z <= neg z |-[z] 2*z <= neg (2*z)",
         "doubles of radical elements are radical"),
        ("iv", "z^2 <= neg (z^2) |-[z] z <= neg z",
         "radical squares come from radical elements"),
        ("v", "x <= neg x /\\ y <= neg y |-[x,y] sup(x,y) <= neg sup(x,y)",
         "the radical is closed under sup"),
        ("vi", "x <= neg x /\\ y <= neg y |-[x,y] inf(x,y) <= neg inf(x,y)",
         "the radical is closed under inf"),
        ("vii", "x <= neg x /\\ y <= neg y |-[x,y] x (+) y <= neg (x (+) y)",
         "the radical is closed under the MV sum"),
        ("viii", "neg x <= x /\\ neg y <= y |-[x,y] x (+) y = 1",
         "coradical elements sum to 1"),
        ("ix", "x <= neg x /\\ neg y <= y |-[x,y] x <= y",
         "radical elements sit below coradical ones"),
    ]
    for roman, src, doc in rad_ideal:
        add(f"rad_ideal.{roman}", src, "P", "provable", doc, perfect_models)

    # --- lattice-ordered abelian groups -------------------------------------
    l_axioms = [
        ("L.1", "true |-[x,y,z] x + (y + z) = (x + y) + z", "associativity"),
        ("L.2", "true |-[x] x + 0 = x", "0 is neutral"),
        ("L.3", "true |-[x] x + (- x) = 0", "inverses"),
        ("L.4", "true |-[x,y] x + y = y + x", "commutativity"),
        ("L.5", "true |-[x] x <= x", "reflexivity"),
        ("L.6", "x <= y /\\ y <= x |-[x,y] x = y", "antisymmetry"),
        ("L.7", "x <= y /\\ y <= z |-[x,y,z] x <= z", "transitivity"),
        ("L.8", "true |-[x,y] inf(x,y) <= x /\\ inf(x,y) <= y",
         "inf is a lower bound"),
        ("L.9", "z <= x /\\ z <= y |-[x,y,z] z <= inf(x,y)",
         "inf is the greatest lower bound"),
        ("L.10", "true |-[x,y] x <= sup(x,y) /\\ y <= sup(x,y)",
         "sup is an upper bound"),
        ("L.11", "x <= z /\\ y <= z |-[x,y,z] sup(x,y) <= z",
         "sup is the least upper bound"),
        ("L.12", "x <= y |-[x,y,t] t + x <= t + y", "translation invariance"),
    ]
    for label, src, doc in l_axioms:
        add(label, src, "L", "axiom", doc, l_models)

    add("Lu.1", "true |-[] 0 <= u", "Lu", "axiom",
        "the strong unit is positive", lu_models)
    add("Lu.2", f"0 <= x |-[x] bigvee n<={BIGVEE_CAP} . x <= n*u", "Lu", "axiom",
        "every positive element lies below a multiple of the unit "
        f"(capped at n <= {BIGVEE_CAP})", lu_models)

    # --- lattice-ordered abelian monoids -------------------------------------
    m_axioms = [
        ("M.1", "true |-[x,y,z] x + (y + z) = (x + y) + z", "associativity"),
        ("M.2", "true |-[x] x + 0 = x", "0 is neutral"),
        ("M.3", "true |-[x,y] x + y = y + x", "commutativity"),
        ("M.4", "true |-[x] x <= x", "reflexivity"),
        ("M.5", "x <= y /\\ y <= x |-[x,y] x = y", "antisymmetry"),
        ("M.6", "x <= y /\\ y <= z |-[x,y,z] x <= z", "transitivity"),
        ("M.7", "true |-[x,y] inf(x,y) <= x /\\ inf(x,y) <= y",
         "inf is a lower bound"),
        ("M.8", "z <= x /\\ z <= y |-[x,y,z] z <= inf(x,y)",
         "inf is the greatest lower bound"),
        ("M.9", "true |-[x,y] x <= sup(x,y) /\\ y <= sup(x,y)",
         "sup is an upper bound"),
        ("M.10", "x <= z /\\ y <= z |-[x,y,z] sup(x,y) <= z",
         "sup is the least upper bound"),
        ("M.11", "x <= y |-[x,y,t] t + x <= t + y", "translation invariance"),
        ("M.12", "x + y = x + z |-[x,y,z] y = z", "cancellation"),
        ("M.13", "true |-[x] 0 <= x", "0 is the bottom element"),
        ("M.14", "x <= y |-[x,y] exists z . x + z = y", "subtractivity"),
    ]
    for label, src, doc in m_axioms:
        add(label, src, "M", "axiom", doc, m_models)
    add("C", "x + a = y + a |-[x,y,a] x = y", "M", "provable",
        "cancellation in the form used for radical monoids", m_models)
    add("M.cancel_le", "x + z <= y + z |-[x,y,z] x <= y", "M", "provable",
        "order cancellation", m_models)
    add("M.inf_translate", "true |-[a,b,c] inf(a,b) + c = inf(a + c, b + c)",
        "M", "provable", "inf commutes past translation", m_models)

    # --- pointed perfect algebras ---------------------------------------------
    add("Pstar.1", "true |-[] u <= neg u", "Pstar", "axiom",
        "the marked element is radical", pstar_models)
    add("Pstar.2", f"x <= neg x |-[x] bigvee n<={BIGVEE_CAP} . x <= n*u",
        "Pstar", "axiom",
        "the marked element generates the radical "
        f"(capped at n <= {BIGVEE_CAP})", pstar_models)

    # --- unital-group transfers --------------------------------------------------
    ant1 = ("0 <= x /\\ x <= u |-[x] "
            "sup(0, 2*inf(2*x, u) - u) = inf(u, 2*sup(2*x - u, 0))")
    add("Ant.1", ant1, "Ant", "axiom",
        "first antiarchimedean identity on the unit interval", ant_models)
    add("Ant.2",
        "0 <= x /\\ x <= u /\\ inf(2*x, u) = x |-[x] x = 0 \\/ x = u",
        "Ant", "axiom",
        "interval elements fixed by doubling-then-truncation are trivial",
        ant_models)
    add("A.1", ant1, "A", "axiom",
        "Chang-variety transfer, first identity (same sequent as Ant.1)",
        ant_models)
    add("A.2",
        "0 <= x /\\ x <= u |-[x] "
        "inf(u, 2*sup(0, 2*inf(2*x, u) - u)) = sup(0, 2*inf(2*x, u) - u)",
        "A", "axiom", "Chang-variety transfer, second identity", ant_models)

    # --- group-side identity used by the sup-preservation proof -----------------
    add("phi_sup",
        "true |-[g1,g2] sup(0, sup(g1, g2)) + "
        "inf((sup(0,g1) + sup(0,g2)) - g2, (sup(0,g2) + sup(0,g1)) - g1) = "
        "((sup(0,g1) + sup(0,g2)) + sup(0, sup(g1,g2))) - sup(g1,g2)",
        "L", "provable",
        "positive-part identity witnessing that the group-side isomorphism "
        "preserves sup", l_models)

    return out


_REGISTRY: Optional[Dict[str, RegistryEntry]] = None


def _registry() -> Dict[str, RegistryEntry]:
    global _REGISTRY
    if _REGISTRY is None:
        entries = _entries()
        reg: Dict[str, RegistryEntry] = {}
        for e in entries:
            if e.label in reg:
                raise ValueError(f"duplicate registry label {e.label}")
            reg[e.label] = e
        _REGISTRY = reg
    return _REGISTRY


def named_sequents() -> Dict[str, Sequent]:
    """Label-to-sequent mapping for every named sequent."""
    return {label: e.sequent for label, e in _registry().items()}


def lookup(label: str) -> Sequent:
    try:
        return _registry()[label].sequent
    except KeyError:
        raise UnknownLabelError(f"no sequent registered under {label!r}") from None


def entry(label: str) -> RegistryEntry:
    try:
        return _registry()[label]
    except KeyError:
        raise UnknownLabelError(f"no sequent registered under {label!r}") from None


def all_entries() -> List[RegistryEntry]:
    return list(_registry().values())


def registered_models(theory: str) -> Tuple[str, ...]:
    """Descriptors of the carriers registered as models of a theory."""
    for e in _registry().values():
        if e.theory == theory:
            return e.models
    raise UnknownLabelError(f"no theory registered under {theory!r}")


# The two provably equivalent axiom families: their verdicts must agree
# on every MV carrier.
EQUIVALENT_FAMILIES: List[Tuple[Tuple[str, ...], Tuple[str, ...]]] = [
    (("P.1", "P.2", "P.3"), ("P.1", "beta")),
]


@dataclass
class FamilyReport:
    model: str
    bound: int
    verdicts: Dict[str, Verdict]
    family_checks: List[dict]

    @property
    def all_hold(self) -> bool:
        return all(v.ok for v in self.verdicts.values())


def check_family(model, labels: List[str], bound: int, *,
                 exists_bound: Optional[int] = None) -> FamilyReport:
    """Check a batch of registry sequents against one model.

    Existential searches default to a window at twice the bound, which
    witnesses subtractivity for every registered carrier.  When the batch
    contains both halves of a registered equivalent family, the report
    records whether the two family verdicts agree (they must, on genuine
    MV carriers).
    """
    if exists_bound is None:
        exists_bound = 2 * bound
    verdicts: Dict[str, Verdict] = {}
    for label in labels:
        seq = lookup(label)
        verdicts[label] = check_sequent(model, seq, bound,
                                        exists_bound=exists_bound)
    family_checks = []
    label_set = set(labels)
    for fam_a, fam_b in EQUIVALENT_FAMILIES:
        if set(fam_a) <= label_set and set(fam_b) <= label_set:
            hold_a = all(verdicts[l].ok for l in fam_a)
            hold_b = all(verdicts[l].ok for l in fam_b)
            family_checks.append({
                "family_a": list(fam_a),
                "family_b": list(fam_b),
                "verdict_a": "holds" if hold_a else "fails",
                "verdict_b": "holds" if hold_b else "fails",
                "agree": hold_a == hold_b,
            })
    return FamilyReport(model.descriptor(), bound, verdicts, family_checks)


def axiom_suite() -> List[Tuple[str, str]]:
    """(label, model descriptor) pairs for every registered axiom over
    its model family."""
    out = []
    for e in _registry().values():
        if e.kind == "axiom":
            for m in e.models:
                out.append((e.label, m))
    return out
