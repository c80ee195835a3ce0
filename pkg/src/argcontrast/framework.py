"""Abstract argumentation frameworks and the argument-level attack/defense relations."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable

from .errors import InputError, UnknownArgumentError

ARGUMENT_ID = re.compile(r"^[A-Za-z0-9_]+$")


def canonical(items: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(items))


def canonical_extensions(exts: Iterable[frozenset[str]]) -> tuple[frozenset[str], ...]:
    """Order extensions by size, then by their sorted member list."""
    return tuple(sorted(set(exts), key=lambda e: (len(e), sorted(e))))


class Relevance(Enum):
    CONFLICT = "conflict-relevant"
    DEFENDING = "defending-relevant"
    BOTH = "both"
    NONE = "not-relevant"


@dataclass(frozen=True)
class AF:
    """A finite Dung framework. Arguments are name tokens, attacks ordered pairs.

    Instances are immutable; the derived indexes below are computed lazily and
    cached on first use.
    """

    arguments: frozenset[str]
    attacks: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "arguments", frozenset(self.arguments))
        object.__setattr__(self, "attacks", frozenset(tuple(p) for p in self.attacks))
        for name in self.arguments:
            if not isinstance(name, str) or not ARGUMENT_ID.match(name):
                raise InputError(f"invalid argument name {name!r}")
        for a, b in self.attacks:
            if a not in self.arguments or b not in self.arguments:
                raise InputError(f"attack ({a},{b}) mentions an undeclared argument")

    @classmethod
    def from_edges(cls, arguments: Iterable[str], attacks: Iterable[tuple[str, str]] = ()) -> AF:
        return cls(frozenset(arguments), frozenset(attacks))

    @cached_property
    def sorted_arguments(self) -> tuple[str, ...]:
        return canonical(self.arguments)

    @cached_property
    def _attackers(self) -> dict[str, frozenset[str]]:
        index: dict[str, set[str]] = {a: set() for a in self.arguments}
        for a, b in self.attacks:
            index[b].add(a)
        return {a: frozenset(s) for a, s in index.items()}

    @cached_property
    def _attacked(self) -> dict[str, frozenset[str]]:
        index: dict[str, set[str]] = {a: set() for a in self.arguments}
        for a, b in self.attacks:
            index[a].add(b)
        return {a: frozenset(s) for a, s in index.items()}

    def check(self, *names: str) -> None:
        for name in names:
            if name not in self.arguments:
                raise UnknownArgumentError(name)

    def check_set(self, s: Iterable[str]) -> frozenset[str]:
        s = frozenset(s)
        self.check(*sorted(s))
        return s

    def attackers(self, a: str) -> frozenset[str]:
        self.check(a)
        return self._attackers[a]

    def attacked_by(self, a: str) -> frozenset[str]:
        self.check(a)
        return self._attacked[a]

    def self_attacking(self, a: str) -> bool:
        return (a, a) in self.attacks

    def plus(self, s: Iterable[str]) -> frozenset[str]:
        """Arguments attacked by some member of ``s``."""
        out: set[str] = set()
        for a in s:
            out |= self._attacked[a]
        return frozenset(out)

    @cached_property
    def _parity_closure(self) -> dict[str, tuple[frozenset[str], frozenset[str]]]:
        return {a: _parity_reach(self._attackers, a) for a in self.arguments}

    def indirect_attackers(self, a: str) -> frozenset[str]:
        """Arguments with an odd-length attack walk ending in ``a``."""
        self.check(a)
        return self._parity_closure[a][0]

    def indirect_defenders(self, a: str) -> frozenset[str]:
        """Arguments with an even-length (>= 2) attack walk ending in ``a``."""
        self.check(a)
        return self._parity_closure[a][1]

    def to_apx(self) -> str:
        lines = [f"arg({a})." for a in self.sorted_arguments]
        lines += [f"att({a},{b})." for a, b in sorted(self.attacks)]
        return "\n".join(lines) + ("\n" if lines else "")


def _parity_reach(attackers: dict[str, frozenset[str]], target: str) -> tuple[frozenset[str], frozenset[str]]:
    # BFS backwards over (argument, parity) states starting from the target at
    # distance 0. Walks may revisit vertices, so each state is expanded once.
    seen: set[tuple[str, int]] = set()
    queue = deque((b, 1) for b in attackers[target])
    seen.update(queue)
    while queue:
        node, parity = queue.popleft()
        for b in attackers[node]:
            state = (b, 1 - parity)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    odd = frozenset(n for n, p in seen if p == 1)
    even = frozenset(n for n, p in seen if p == 0)
    return odd, even


def conflict_free(af: AF, s: Iterable[str]) -> bool:
    s = af.check_set(s)
    return not any(a in s and b in s for a, b in af.attacks)


def defends(af: AF, s: Iterable[str], a: str) -> bool:
    """True iff ``s`` attacks every attacker of ``a``."""
    s = af.check_set(s)
    af.check(a)
    return af.attackers(a) <= af.plus(s)


def indirect_attackers(af: AF, a: str) -> frozenset[str]:
    return af.indirect_attackers(a)


def indirect_defenders(af: AF, a: str) -> frozenset[str]:
    return af.indirect_defenders(a)


def relevance(af: AF, a: str, b: str) -> Relevance:
    """Classify how ``a`` bears on ``b``; self-attackers are never relevant."""
    af.check(a, b)
    if af.self_attacking(a):
        return Relevance.NONE
    attacks = a in af.indirect_attackers(b)
    defends_ = a in af.indirect_defenders(b)
    if attacks and defends_:
        return Relevance.BOTH
    if attacks:
        return Relevance.CONFLICT
    if defends_:
        return Relevance.DEFENDING
    return Relevance.NONE


def conflict_relevant(af: AF, a: str, b: str) -> bool:
    return relevance(af, a, b) in (Relevance.CONFLICT, Relevance.BOTH)


def defending_relevant(af: AF, a: str, b: str) -> bool:
    return relevance(af, a, b) in (Relevance.DEFENDING, Relevance.BOTH)
