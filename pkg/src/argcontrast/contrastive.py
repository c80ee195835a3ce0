"""Contrastive explanations: why the fact rather than the foil(s)."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Iterable, Sequence

from .errors import ApplicabilityError, InputError
from .explanations import Candidates, acc_explanation, nonacc_explanation
from .framework import AF, conflict_relevant
from .semantics import Semantics, Strategy, acceptance_status, extensions


class Direction(Enum):
    ACC = "acc"
    NONACC = "nonacc"


class ContrastKind(Enum):
    COMMON = "common"
    PAIR = "pair"


def _key(items: Iterable[Hashable]) -> tuple[str, ...]:
    return tuple(sorted(str(x) for x in items))


@dataclass(frozen=True)
class ContrastiveResult:
    """Either the shared elements of both explanations, or both explanations side by side.

    ``fact_side`` and ``foil_side`` are always filled with the operands used,
    so a COMMON result can still be inspected.
    """

    kind: ContrastKind
    fact_side: frozenset
    foil_side: frozenset
    common: frozenset = field(default_factory=frozenset)

    @property
    def is_pair(self) -> bool:
        return self.kind is ContrastKind.PAIR

    def as_dict(self) -> dict:
        if self.kind is ContrastKind.COMMON:
            return {"kind": "common", "explanation": list(_key(self.common))}
        return {"kind": "pair", "fact_side": list(_key(self.fact_side)),
                "foil_side": list(_key(self.foil_side))}


@dataclass(frozen=True)
class Violation:
    condition: str  # acceptance-status | never-coexist | conflict-relevance
    foil: str
    detail: str

    def as_dict(self) -> dict:
        return {"condition": self.condition, "detail": self.detail, "foil": self.foil}


@dataclass(frozen=True)
class ApplicabilityReport:
    violations: tuple[Violation, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"notes": list(self.notes), "ok": self.ok,
                "violations": [v.as_dict() for v in self.violations]}


Options = Sequence[frozenset]


def combine(fact_options: Options, foil_options: Sequence[Options]) -> ContrastiveResult:
    """Intersect a fact explanation with the union of foil explanations.

    Each side may offer several admissible sets (credulous acceptance). A
    choice that makes the intersection non-empty is preferred, then the
    smallest set, then the lexicographically first one.
    """

    def choose(options: Options, other: frozenset) -> frozenset:
        return min(options, key=lambda s: (not (s & other), len(s), _key(s)))

    foil_default = frozenset().union(*(min(o, key=lambda s: (len(s), _key(s))) for o in foil_options))
    fact = choose(fact_options, foil_default)
    foil = frozenset().union(*(choose(o, fact) for o in foil_options))
    common = fact & foil
    if common:
        return ContrastiveResult(ContrastKind.COMMON, fact, foil, common)
    return ContrastiveResult(ContrastKind.PAIR, fact, foil)


def derive_foil(af: AF, a: str) -> frozenset[str]:
    """The direct attackers of ``a``."""
    return af.attackers(a)


def check_applicability(af: AF, sem: Semantics, strategy: Strategy, fact: str,
                        foils: Iterable[str], direction: Direction) -> ApplicabilityReport:
    foils = af.check_set(foils)
    af.check(fact)
    if not foils:
        raise InputError("at least one foil is required")
    exts = extensions(af, sem)
    fact_status = acceptance_status(af, sem, fact)
    dagger = strategy.dagger
    violations: list[Violation] = []
    notes: list[str] = []
    for b in sorted(foils):
        foil_status = acceptance_status(af, sem, b)
        if direction is Direction.ACC:
            fact_ok = fact_status.accepted(strategy)
            foil_ok = foil_status.nonaccepted(dagger)
            want = (f"fact {strategy.value}ly accepted", f"foil {dagger.value}ly non-accepted")
        else:
            fact_ok = fact_status.nonaccepted(strategy)
            foil_ok = foil_status.accepted(dagger)
            want = (f"fact {strategy.value}ly non-accepted", f"foil {dagger.value}ly accepted")
        if not fact_ok:
            violations.append(Violation("acceptance-status", b, f"{want[0]} required, {fact!r} is not"))
        if not foil_ok:
            violations.append(Violation("acceptance-status", b, f"{want[1]} required, {b!r} is not"))
        joint = [e for e in exts if fact in e and b in e]
        if joint:
            violations.append(Violation(
                "never-coexist", b, f"{fact!r} and {b!r} share {len(joint)} extension(s), e.g. "
                + "{" + ",".join(sorted(joint[0])) + "}"))
        if not (conflict_relevant(af, fact, b) or conflict_relevant(af, b, fact)):
            violations.append(Violation(
                "conflict-relevance", b, f"neither {fact!r} nor {b!r} is conflict-relevant for the other"))
        if af.self_attacking(b):
            notes.append(f"foil {b!r} attacks itself and is therefore never relevant")
    return ApplicabilityReport(tuple(violations), tuple(notes))


def _options(result: frozenset | Candidates) -> tuple[frozenset, ...]:
    return result.explanations if isinstance(result, Candidates) else (result,)


def cont_acc(af: AF, sem: Semantics, strategy: Strategy, fact: str,
             foils: Iterable[str]) -> ContrastiveResult:
    """Why is ``fact`` accepted while the foils are not."""
    foils = frozenset(foils)
    report = check_applicability(af, sem, strategy, fact, foils, Direction.ACC)
    if not report.ok:
        raise ApplicabilityError(report)
    x = _options(acc_explanation(af, sem, strategy, fact))
    ys = [(nonacc_explanation(af, sem, strategy.dagger, b),) for b in sorted(foils)]
    return combine(x, ys)


def cont_nonacc(af: AF, sem: Semantics, strategy: Strategy, fact: str,
                foils: Iterable[str]) -> ContrastiveResult:
    """Why is ``fact`` non-accepted while the foils are accepted."""
    foils = frozenset(foils)
    report = check_applicability(af, sem, strategy, fact, foils, Direction.NONACC)
    if not report.ok:
        raise ApplicabilityError(report)
    x = (nonacc_explanation(af, sem, strategy, fact),)
    ys = [_options(acc_explanation(af, sem, strategy.dagger, b)) for b in sorted(foils)]
    return combine(x, ys)


def contrast(af: AF, sem: Semantics, strategy: Strategy, fact: str,
             foils: Iterable[str] | None, direction: Direction) -> ContrastiveResult:
    """Dispatch on direction; ``foils=None`` derives them from the attackers of ``fact``."""
    if foils is None:
        foils = derive_foil(af, fact)
        if not foils:
            raise InputError(f"{fact!r} is not attacked, so no foil can be derived")
    if direction is Direction.ACC:
        return cont_acc(af, sem, strategy, fact, foils)
    return cont_nonacc(af, sem, strategy, fact, foils)
