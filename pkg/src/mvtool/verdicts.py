"""Verdict values returned by the bounded checkers.

A check over a finite enumeration ends in one of three ways: it holds
everywhere, a concrete counterexample was found, or the only failures
involve a bounded search that ran out of candidates (so the verdict
cannot soundly be "fails").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class Verdict:
    kind: str = ""

    @property
    def ok(self) -> bool:
        return isinstance(self, Holds)


@dataclass(frozen=True)
class Holds(Verdict):
    kind: str = field(default="holds", init=False)


@dataclass(frozen=True)
class CounterExample(Verdict):
    """A concrete refutation.

    ``env`` is the offending assignment: a variable-to-value mapping for
    sequent checks, or a bare element / tuple for the algebra-level
    checkers.  ``axiom`` names the failed axiom where relevant and
    ``note`` carries bounded-search caveats.
    """

    env: Any
    axiom: str | None = None
    note: str | None = None
    kind: str = field(default="counterexample", init=False)


@dataclass(frozen=True)
class InconclusiveAtBound(Verdict):
    """Every concrete failure candidate involved an unwitnessed bounded
    existential or capped infinitary disjunction, so the check is neither
    confirmed nor refuted at this bound."""

    bound: int
    note: str | None = None
    kind: str = field(default="inconclusive-at-bound", init=False)


@dataclass(frozen=True)
class Finite:
    """Result of an order computation: the least n with nx = 1."""

    n: int


@dataclass(frozen=True)
class NoneUpTo:
    """No n <= bound satisfied nx = 1 (sound under-approximation of
    infinite order)."""

    bound: int

