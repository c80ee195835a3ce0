"""Text formats: APX-style frameworks, rule theories, and JSON result envelopes.

Framework files hold ``arg(<id>).`` and ``att(<id>,<id>).`` statements.
Theory files hold::

    axiom <lit>.
    premise <lit>.
    strict <name>: <lit>, ..., <lit> -> <lit>.
    defeasible <name>: <lit>, ..., <lit> => <lit>.

where a literal is ``[~]atom`` or ``[~]n(<rulename>)``. In both formats ``%``
starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field
from typing import Any

from .aspic import Literal, Rule, Theory
from .errors import InputError, ParseError
from .framework import AF

_ID = r"[A-Za-z0-9_]+"
_ARG = re.compile(rf"\s*arg\s*\(\s*({_ID})\s*\)\s*\.")
_ATT = re.compile(rf"\s*att\s*\(\s*({_ID})\s*,\s*({_ID})\s*\)\s*\.")
_LIT = rf"~*\s*(?:n\s*\(\s*{_ID}\s*\)|{_ID})"
_FACT = re.compile(rf"\s*(axiom|premise)\s+({_LIT})\s*\.")
_RULE = re.compile(
    rf"\s*(strict|defeasible)\s+({_ID})\s*:\s*({_LIT}(?:\s*,\s*{_LIT})*)\s*(->|=>)\s*({_LIT})\s*\.")


def _strip_comment(line: str) -> str:
    return line.split("%", 1)[0]


def _statements(text: str, patterns):
    """Yield (line, column, pattern index, match) for every statement in ``text``."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        pos = 0
        while line[pos:].strip():
            for k, pat in enumerate(patterns):
                m = pat.match(line, pos)
                if m:
                    yield lineno, pos + 1 + (len(line[pos:]) - len(line[pos:].lstrip())), k, m
                    pos = m.end()
                    break
            else:
                col = pos + 1 + (len(line[pos:]) - len(line[pos:].lstrip()))
                snippet = line[pos:].strip()
                raise ParseError(f"malformed statement {snippet!r}", lineno, col)


def parse_af(text: str) -> AF:
    arguments: list[str] = []
    declared: set[str] = set()
    attacks: set[tuple[str, str]] = set()
    for line, col, kind, m in _statements(text, (_ARG, _ATT)):
        if kind == 0:
            name = m.group(1)
            if name in declared:
                raise ParseError(f"argument {name!r} declared twice", line, col)
            declared.add(name)
            arguments.append(name)
        else:
            a, b = m.group(1), m.group(2)
            for end in (a, b):
                if end not in declared:
                    raise ParseError(f"attack mentions undeclared argument {end!r}", line, col)
            attacks.add((a, b))
    return AF(frozenset(arguments), frozenset(attacks))


def format_af(af: AF) -> str:
    return af.to_apx()


def parse_theory(text: str) -> Theory:
    axioms: list[Literal] = []
    premises: list[Literal] = []
    rules: list[Rule] = []
    seen_rules: set[str] = set()
    where: dict[str, tuple[int, int]] = {}
    for line, col, kind, m in _statements(text, (_FACT, _RULE)):
        if kind == 0:
            lit = Literal.parse(m.group(2))
            other = premises if m.group(1) == "axiom" else axioms
            if lit in other:
                raise ParseError(f"{lit} cannot be both an axiom and a premise", line, col)
            (axioms if m.group(1) == "axiom" else premises).append(lit)
            where.setdefault(str(lit), (line, col))
        else:
            name = m.group(2)
            if name in seen_rules:
                raise ParseError(f"duplicate rule name {name!r}", line, col)
            seen_rules.add(name)
            defeasible = m.group(4) == "=>"
            if defeasible != (m.group(1) == "defeasible"):
                raise ParseError(f"rule {name!r}: arrow does not match its kind", line, col)
            ants = tuple(Literal.parse(t) for t in re.split(r"\s*,\s*", m.group(3).strip()))
            rules.append(Rule(name, ants, Literal.parse(m.group(5)), defeasible))
            where[name] = (line, col)
    for rule_or_lit in [*axioms, *premises, *rules]:
        lits = [rule_or_lit] if isinstance(rule_or_lit, Literal) else [*rule_or_lit.antecedents,
                                                                          rule_or_lit.consequent]
        for lit in lits:
            ref = lit.names_rule
            if ref is not None and ref not in seen_rules:
                key = str(rule_or_lit) if isinstance(rule_or_lit, Literal) else rule_or_lit.name
                line, col = where.get(key, (1, 1))
                raise ParseError(f"{lit} refers to undeclared rule {ref!r}", line, col)
    return Theory(tuple(axioms), tuple(premises), tuple(rules))


def format_theory(theory: Theory) -> str:
    return theory.to_text()


@dataclass
class QueryResult:
    """What one CLI query asked and what it produced, in a JSON-friendly shape."""

    command: str
    query: dict[str, Any] = field(default_factory=dict)
    semantics: str | None = None
    strategy: str | None = None
    result: Any = None
    applicability: dict[str, Any] | None = None
    error: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> QueryResult:
        data = json.loads(text)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise InputError(f"unexpected envelope keys: {', '.join(sorted(unknown))}")
        return cls(**data)
