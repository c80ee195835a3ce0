"""Acceptance and non-acceptance explanations for single arguments."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError
from .framework import AF, canonical
from .semantics import (Semantics, Strategy, acceptance_status, ext_with, ext_without,
                        extensions)


def def_by(af: AF, a: str) -> frozenset[str]:
    """Arguments that (in)directly defend ``a``."""
    return af.indirect_defenders(a)


def def_by_in(af: AF, a: str, ext: Iterable[str]) -> frozenset[str]:
    return def_by(af, a) & frozenset(ext)


def not_def(af: AF, a: str, ext: Iterable[str]) -> frozenset[str]:
    """(In)direct attackers of ``a`` that ``ext`` does not attack."""
    ext = af.check_set(ext)
    return af.indirect_attackers(a) - af.plus(ext)


def not_def_intercepted(af: AF, a: str, ext: Iterable[str]) -> frozenset[str]:
    """Alternative reading of undefended attackers, kept for comparison.

    ``b`` is reported iff some odd walk from ``b`` to ``a`` has no argument at
    odd distance from ``a`` that ``ext`` attacks. Every walk is covered by the
    (argument, parity) states, so the search visits at most 2|args| states.
    """
    ext = af.check_set(ext)
    af.check(a)
    beaten = af.plus(ext)
    seen: set[tuple[str, int]] = set()
    queue: deque[tuple[str, int]] = deque()

    def push(node: str, parity: int) -> None:
        if parity == 1 and node in beaten:
            return
        if (node, parity) not in seen:
            seen.add((node, parity))
            queue.append((node, parity))

    for b in af.attackers(a):
        push(b, 1)
    while queue:
        node, parity = queue.popleft()
        for b in af.attackers(node):
            push(b, 1 - parity)
    return frozenset(n for n, p in seen if p == 1)


@dataclass(frozen=True)
class Candidates:
    """Every admissible answer to a credulous acceptance question.

    ``options`` pairs each witnessing extension with the explanation it
    yields; ``pick`` indexes the canonical answer (smallest, then
    lexicographically first).
    """

    options: tuple[tuple[frozenset[str], frozenset[str]], ...]
    pick: int

    @property
    def explanation(self) -> frozenset[str]:
        return self.options[self.pick][1]

    @property
    def explanations(self) -> tuple[frozenset[str], ...]:
        return tuple(expl for _, expl in self.options)

    @classmethod
    def from_options(cls, options: Iterable[tuple[frozenset[str], frozenset[str]]]) -> Candidates:
        options = tuple(options)
        if not options:
            raise ValueError("no candidates")
        pick = min(range(len(options)), key=lambda i: _size_then_lex(options[i][1]))
        return cls(options, pick)


def _size_then_lex(s: frozenset) -> tuple:
    return (len(s), canonical(str(x) for x in s))


def _describe(a: str, sem: Semantics) -> str:
    return f"argument {a!r} under {sem.value} semantics"


def require_accepted(af: AF, sem: Semantics, strategy: Strategy, a: str) -> None:
    status = acceptance_status(af, sem, a)
    if status.accepted(strategy):
        return
    if strategy is Strategy.SKEPTICAL:
        missing = len(ext_without(af, sem, a))
        raise PreconditionError(
            f"{_describe(a, sem)} is not skeptically accepted: missing from {missing} of "
            f"{len(extensions(af, sem))} extensions")
    raise PreconditionError(f"{_describe(a, sem)} is not credulously accepted: no extension contains it")


def require_nonaccepted(af: AF, sem: Semantics, strategy: Strategy, a: str) -> None:
    status = acceptance_status(af, sem, a)
    if status.nonaccepted(strategy):
        return
    if strategy is Strategy.SKEPTICAL:
        raise PreconditionError(f"{_describe(a, sem)} is not skeptically non-accepted: every extension contains it")
    inside = len(ext_with(af, sem, a))
    raise PreconditionError(
        f"{_describe(a, sem)} is not credulously non-accepted: it belongs to {inside} extensions")


def acc_explanation(af: AF, sem: Semantics, strategy: Strategy, a: str) -> frozenset[str] | Candidates:
    """Why is ``a`` accepted?

    Skeptical: the defenders of ``a`` found in any extension. Credulous: one
    defender set per extension containing ``a``, see :class:`Candidates`.
    """
    require_accepted(af, sem, strategy, a)
    if strategy is Strategy.SKEPTICAL:
        out: frozenset[str] = frozenset()
        for e in extensions(af, sem):
            out |= def_by_in(af, a, e)
        return out
    return Candidates.from_options((e, def_by_in(af, a, e)) for e in ext_with(af, sem, a))


def acc_explanation_set(af: AF, sem: Semantics, strategy: Strategy, a: str) -> frozenset[str]:
    """:func:`acc_explanation` reduced to a single set (the canonical pick for credulous)."""
    result = acc_explanation(af, sem, strategy, a)
    return result.explanation if isinstance(result, Candidates) else result


def nonacc_explanation(af: AF, sem: Semantics, strategy: Strategy, a: str) -> frozenset[str]:
    """Undefended attackers of ``a`` across the extensions that matter.

    Skeptical uses the extensions without ``a``; credulous uses all of them.
    """
    require_nonaccepted(af, sem, strategy, a)
    exts = ext_without(af, sem, a) if strategy is Strategy.SKEPTICAL else extensions(af, sem)
    out: frozenset[str] = frozenset()
    for e in exts:
        out |= not_def(af, a, e)
    return out
