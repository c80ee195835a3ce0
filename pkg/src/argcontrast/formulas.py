"""Basic and contrastive explanations for formulas of a structured framework."""

from __future__ import annotations

from typing import Iterable

from .aspic import Literal, Presentation, StructuredFramework
from .contrastive import ApplicabilityReport, ContrastiveResult, Direction, Violation, combine
from .errors import ApplicabilityError, InputError, PreconditionError
from .explanations import Candidates, def_by_in, not_def
from .framework import conflict_relevant
from .semantics import AcceptanceStatus, Semantics, Strategy, extensions, status_from_partition


def ext_with_formula(fw: StructuredFramework, sem: Semantics, phi: Literal) -> tuple[frozenset[str], ...]:
    ids = fw.args_for(phi)
    return tuple(e for e in extensions(fw.af, sem) if e & ids)


def ext_without_formula(fw: StructuredFramework, sem: Semantics, phi: Literal) -> tuple[frozenset[str], ...]:
    ids = fw.args_for(phi)
    return tuple(e for e in extensions(fw.af, sem) if not e & ids)


def accepted_args(fw: StructuredFramework, sem: Semantics, phi: Literal) -> frozenset[str]:
    """Arguments for ``phi`` that belong to at least one extension."""
    members = frozenset().union(*extensions(fw.af, sem))
    return fw.args_for(phi) & members


def formula_status(fw: StructuredFramework, sem: Semantics, phi: Literal) -> AcceptanceStatus | None:
    """Acceptance flags of ``phi``; ``None`` when no argument concludes it."""
    if not fw.args_for(phi):
        return None
    return status_from_partition(len(extensions(fw.af, sem)), len(ext_with_formula(fw, sem, phi)),
                                 len(ext_without_formula(fw, sem, phi)))


def _status(fw: StructuredFramework, sem: Semantics, phi: Literal) -> AcceptanceStatus:
    status = formula_status(fw, sem, phi)
    if status is None:
        raise PreconditionError(f"no argument concludes {phi}")
    return status


def formula_acc_explanation(fw: StructuredFramework, sem: Semantics, strategy: Strategy, phi: Literal,
                            presentation: Presentation = Presentation.IDENTITY) -> frozenset | Candidates:
    if not _status(fw, sem, phi).accepted(strategy):
        raise PreconditionError(f"{phi} is not {strategy.value}ly accepted under {sem.value} semantics")
    af = fw.af
    accepted = sorted(accepted_args(fw, sem, phi))
    if strategy is Strategy.SKEPTICAL:
        ids: frozenset[str] = frozenset()
        for a in accepted:
            for e in extensions(af, sem):
                ids |= def_by_in(af, a, e)
        return fw.present(ids, presentation)
    options = [((a, e), fw.present(def_by_in(af, a, e), presentation))
               for a in accepted for e in extensions(af, sem) if a in e]
    return Candidates.from_options(options)


def formula_nonacc_explanation(fw: StructuredFramework, sem: Semantics, strategy: Strategy, phi: Literal,
                               presentation: Presentation = Presentation.IDENTITY) -> frozenset:
    if not _status(fw, sem, phi).nonaccepted(strategy):
        raise PreconditionError(f"{phi} is not {strategy.value}ly non-accepted under {sem.value} semantics")
    af = fw.af
    ids: frozenset[str] = frozenset()
    for a in sorted(fw.args_for(phi)):
        for e in extensions(af, sem):
            if strategy is Strategy.CREDULOUS or a not in e:
                ids |= not_def(af, a, e)
    return fw.present(ids, presentation)


def formula_foil(fw: StructuredFramework, phi: Literal) -> frozenset[Literal]:
    """The contrary of ``phi`` when some argument concludes it."""
    return frozenset([-phi]) & fw.conclusions


def check_formula_applicability(fw: StructuredFramework, sem: Semantics, strategy: Strategy, fact: Literal,
                                foils: Iterable[Literal], direction: Direction) -> ApplicabilityReport:
    foils = frozenset(foils)
    if not foils:
        raise InputError("at least one foil is required")
    for lit in (fact, *sorted(foils)):
        if lit not in fw.conclusions:
            raise InputError(f"no argument concludes {lit}")
    af = fw.af
    fact_status = _status(fw, sem, fact)
    violations: list[Violation] = []
    for psi in sorted(foils):
        foil_status = _status(fw, sem, psi)
        if direction is Direction.ACC:
            checks = [(fact_status.accepted(strategy), f"fact {strategy.value}ly accepted", fact),
                      (foil_status.nonaccepted(strategy.dagger), f"foil {strategy.dagger.value}ly non-accepted", psi)]
        else:
            checks = [(fact_status.nonaccepted(strategy), f"fact {strategy.value}ly non-accepted", fact),
                      (foil_status.accepted(strategy.dagger), f"foil {strategy.dagger.value}ly accepted", psi)]
        for ok, want, lit in checks:
            if not ok:
                violations.append(Violation("acceptance-status", str(psi), f"{want} required, {lit} is not"))
        joint = [e for e in extensions(af, sem) if {fact, psi} <= fw.concs(e)]
        if joint:
            violations.append(Violation("never-coexist", str(psi),
                                        f"{fact} and {psi} are both concluded in {len(joint)} extension(s)"))
        pairs = [(a, b) for a in fw.args_for(fact) for b in fw.args_for(psi)]
        if not any(conflict_relevant(af, a, b) or conflict_relevant(af, b, a) for a, b in pairs):
            violations.append(Violation("conflict-relevance", str(psi),
                                        f"no argument for {fact} is conflict-related to one for {psi}"))
    return ApplicabilityReport(tuple(violations))


def _options(result) -> tuple[frozenset, ...]:
    return result.explanations if isinstance(result, Candidates) else (result,)


def formula_contrastive(fw: StructuredFramework, sem: Semantics, strategy: Strategy, fact: Literal,
                        foils: Iterable[Literal] | None, direction: Direction,
                        presentation: Presentation = Presentation.IDENTITY) -> ContrastiveResult:
    """Contrast ``fact`` with ``foils``; ``None`` uses the contrary of the fact."""
    if foils is None:
        foils = formula_foil(fw, fact)
        if not foils:
            raise InputError(f"no argument concludes {-fact}, so no foil can be derived for {fact}")
    foils = frozenset(foils)
    report = check_formula_applicability(fw, sem, strategy, fact, foils, direction)
    if not report.ok:
        raise ApplicabilityError(report)
    dagger = strategy.dagger
    if direction is Direction.ACC:
        x = _options(formula_acc_explanation(fw, sem, strategy, fact, presentation))
        ys = [(formula_nonacc_explanation(fw, sem, dagger, psi, presentation),) for psi in sorted(foils)]
    else:
        x = (formula_nonacc_explanation(fw, sem, strategy, fact, presentation),)
        ys = [_options(formula_acc_explanation(fw, sem, dagger, psi, presentation)) for psi in sorted(foils)]
    return combine(x, ys)
