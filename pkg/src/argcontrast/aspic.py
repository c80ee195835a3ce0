"""Structured argumentation with strict and defeasible rules over classical negation.

Arguments are built bottom-up from the knowledge base; a derived Dung
framework is then used for all semantic questions. No preferences are
modelled, so every attack succeeds.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable

from .errors import InputError
from .framework import AF

ATOM = re.compile(r"^[A-Za-z0-9_]+$")
RULE_NAME_ATOM = re.compile(r"^n\(([A-Za-z0-9_]+)\)$")


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    negated: bool = False

    def __post_init__(self) -> None:
        if not (ATOM.match(self.atom) or RULE_NAME_ATOM.match(self.atom)):
            raise InputError(f"invalid atom {self.atom!r}")

    @classmethod
    def parse(cls, text: str) -> Literal:
        text = text.strip()
        negated = False
        while text.startswith("~") or text.startswith("¬"):
            negated = not negated
            text = text[1:].strip()
        m = re.fullmatch(r"n\s*\(\s*([A-Za-z0-9_]+)\s*\)", text)
        if m:
            text = f"n({m.group(1)})"
        return cls(text, negated)

    def __neg__(self) -> Literal:
        return Literal(self.atom, not self.negated)

    @property
    def names_rule(self) -> str | None:
        """The rule name if this literal is ``n(r)`` or its negation."""
        m = RULE_NAME_ATOM.match(self.atom)
        return m.group(1) if m else None

    def __str__(self) -> str:
        return ("~" if self.negated else "") + self.atom


def undercutter(rule_name: str) -> Literal:
    return Literal(f"n({rule_name})", negated=True)


@dataclass(frozen=True)
class Rule:
    name: str
    antecedents: tuple[Literal, ...]
    consequent: Literal
    defeasible: bool = True

    def __str__(self) -> str:
        arrow = "=>" if self.defeasible else "->"
        kind = "defeasible" if self.defeasible else "strict"
        return f"{kind} {self.name}: {', '.join(map(str, self.antecedents))} {arrow} {self.consequent}."


@dataclass(frozen=True)
class Theory:
    """Axioms, ordinary premises and rules. Declaration order is kept; it fixes argument ids."""

    axioms: tuple[Literal, ...] = ()
    premises: tuple[Literal, ...] = ()
    rules: tuple[Rule, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "axioms", tuple(dict.fromkeys(self.axioms)))
        object.__setattr__(self, "premises", tuple(dict.fromkeys(self.premises)))
        object.__setattr__(self, "rules", tuple(self.rules))
        both = set(self.axioms) & set(self.premises)
        if both:
            raise InputError(f"literal(s) declared both axiom and premise: {', '.join(sorted(map(str, both)))}")
        names = [r.name for r in self.rules]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise InputError(f"duplicate rule name(s): {', '.join(dupes)}")
        known = set(names)
        for lit in self.literals:
            ref = lit.names_rule
            if ref is not None and ref not in known:
                raise InputError(f"{lit} refers to undeclared rule {ref!r}")

    @property
    def literals(self) -> Iterable[Literal]:
        yield from self.axioms
        yield from self.premises
        for r in self.rules:
            yield from r.antecedents
            yield r.consequent

    @cached_property
    def rule_by_name(self) -> dict[str, Rule]:
        return {r.name: r for r in self.rules}

    def to_text(self) -> str:
        lines = [f"axiom {x}." for x in self.axioms]
        lines += [f"premise {x}." for x in self.premises]
        lines += [str(r) for r in self.rules]
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class StructuredArgument:
    id: str
    conc: Literal
    prem: frozenset[Literal]
    children: tuple[str, ...] = ()
    sub: frozenset[str] = field(default_factory=frozenset)
    toprule: str | None = None
    defeasible_top: bool = False

    @property
    def is_premise(self) -> bool:
        return self.toprule is None


class AttackKind(Enum):
    UNDERCUT = "undercut"
    REBUT = "rebut"
    UNDERMINE = "undermine"


@dataclass(frozen=True)
class Attack:
    attacker: str
    target: str
    kind: AttackKind
    on: str  # attacked sub-argument id, or the undermined premise

    def as_dict(self) -> dict:
        return {"attacker": self.attacker, "kind": self.kind.value, "on": self.on, "target": self.target}


def build_arguments(theory: Theory) -> tuple[StructuredArgument, ...]:
    """All non-circular arguments of ``theory`` with deterministic ids.

    Premise arguments are named ``A1, A2, ...`` in knowledge-base order; rule
    arguments ``B1, B2, ...`` ordered by rule declaration and then by their
    direct sub-arguments.
    """
    kb = list(theory.axioms) + list(theory.premises)
    # internal nodes: (sort_key, conc, prem, children(internal idx), subconcs, rule)
    nodes: list[tuple] = []
    by_structure: dict[tuple, int] = {}
    by_conc: dict[Literal, list[int]] = {}

    def add(structure, sort_key, conc, prem, children, subconcs, rule) -> bool:
        if structure in by_structure:
            return False
        by_structure[structure] = len(nodes)
        by_conc.setdefault(conc, []).append(len(nodes))
        nodes.append((sort_key, conc, prem, children, subconcs, rule))
        return True

    for i, lit in enumerate(kb):
        add(("kb", lit), (0, i), lit, frozenset([lit]), (), frozenset([lit]), None)

    changed = True
    while changed:
        changed = False
        for ri, rule in enumerate(theory.rules):
            pools = [by_conc.get(lit, []) for lit in rule.antecedents]
            for combo in itertools.product(*[list(p) for p in pools]):
                below = frozenset().union(*(nodes[c][4] for c in combo)) if combo else frozenset()
                if rule.consequent in below:
                    continue  # circular
                structure = ("rule", rule.name, tuple(combo))
                if structure in by_structure:
                    continue
                key = (1, ri, tuple(nodes[c][0] for c in combo))
                prem = frozenset().union(*(nodes[c][2] for c in combo)) if combo else frozenset()
                changed |= add(structure, key, rule.consequent, prem, tuple(combo),
                               below | {rule.consequent}, rule)

    order = sorted(range(len(nodes)), key=lambda i: nodes[i][0])
    ids: dict[int, str] = {}
    n_prem = n_rule = 0
    for i in order:
        if nodes[i][5] is None:
            n_prem += 1
            ids[i] = f"A{n_prem}"
        else:
            n_rule += 1
            ids[i] = f"B{n_rule}"

    subs: dict[int, frozenset[str]] = {}

    def sub_of(i: int) -> frozenset[str]:
        if i not in subs:
            subs[i] = frozenset([ids[i]]).union(*(sub_of(c) for c in nodes[i][3]))
        return subs[i]

    out = []
    for i in order:
        _, conc, prem, children, _, rule = nodes[i]
        out.append(StructuredArgument(
            id=ids[i], conc=conc, prem=prem, children=tuple(ids[c] for c in children),
            sub=sub_of(i), toprule=rule.name if rule else None,
            defeasible_top=bool(rule and rule.defeasible)))
    return tuple(out)


def compute_attacks(arguments: Iterable[StructuredArgument], theory: Theory) -> tuple[Attack, ...]:
    arguments = list(arguments)
    by_id = {a.id: a for a in arguments}
    axioms = frozenset(theory.axioms)
    found: set[tuple[str, str, AttackKind, str]] = set()
    for b in arguments:
        subs = [by_id[s] for s in sorted(b.sub)]
        for a in arguments:
            for s in subs:
                if s.defeasible_top and a.conc == undercutter(s.toprule):
                    found.add((a.id, b.id, AttackKind.UNDERCUT, s.id))
                if s.defeasible_top and a.conc == -s.conc:
                    found.add((a.id, b.id, AttackKind.REBUT, s.id))
            for p in b.prem - axioms:
                if a.conc == -p:
                    found.add((a.id, b.id, AttackKind.UNDERMINE, str(p)))
    return tuple(Attack(*t) for t in sorted(found, key=lambda t: (t[0], t[1], t[2].value, t[3])))


class Presentation(Enum):
    IDENTITY = "id"
    PREMISES = "prem"


@dataclass(frozen=True)
class StructuredFramework:
    """A theory together with its arguments, attacks and derived Dung framework."""

    theory: Theory
    arguments: tuple[StructuredArgument, ...]
    attacks: tuple[Attack, ...]
    af: AF

    @cached_property
    def by_id(self) -> dict[str, StructuredArgument]:
        return {a.id: a for a in self.arguments}

    @cached_property
    def conclusions(self) -> frozenset[Literal]:
        return frozenset(a.conc for a in self.arguments)

    def args_for(self, phi: Literal) -> frozenset[str]:
        return frozenset(a.id for a in self.arguments if a.conc == phi)

    def concs(self, ids: Iterable[str]) -> frozenset[Literal]:
        return frozenset(self.by_id[i].conc for i in ids)

    def present(self, ids: Iterable[str], presentation: Presentation) -> frozenset:
        if presentation is Presentation.IDENTITY:
            return frozenset(ids)
        return frozenset().union(*(self.by_id[i].prem for i in ids))


def derive_af(theory: Theory) -> StructuredFramework:
    arguments = build_arguments(theory)
    attacks = compute_attacks(arguments, theory)
    af = AF(frozenset(a.id for a in arguments), frozenset((t.attacker, t.target) for t in attacks))
    return StructuredFramework(theory, arguments, attacks, af)


def describe(arg: StructuredArgument, fw: StructuredFramework) -> str:
    if arg.is_premise:
        return str(arg.conc)
    rule = fw.theory.rule_by_name[arg.toprule]
    arrow = "=>" if rule.defeasible else "->"
    return f"{', '.join(arg.children)} {arrow}[{rule.name}] {arg.conc}"
