"""Extension enumeration and acceptance status.

Complete extensions are enumerated as complete labellings with a small
backtracking search (in/out/undec, unit propagation after every choice).
Grounded, preferred, semi-stable and stable extensions are selected from
that list; admissible sets have their own search since most of them are not
complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import PreconditionError
from .framework import AF, canonical_extensions


class Semantics(Enum):
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    SEMI_STABLE = "semi-stable"
    STABLE = "stable"

    @classmethod
    def parse(cls, text: str) -> Semantics:
        key = text.strip().lower().replace("_", "-")
        aliases = {"adm": "admissible", "cmp": "complete", "co": "complete", "grd": "grounded",
                   "gr": "grounded", "prf": "preferred", "pr": "preferred", "sstb": "semi-stable",
                   "sst": "semi-stable", "semistable": "semi-stable", "stb": "stable", "st": "stable"}
        return cls(aliases.get(key, key))


# Semantics for which every extension is complete; non-acceptance explanations
# are guaranteed non-empty only for these.
COMPLETE_BASED = frozenset({Semantics.COMPLETE, Semantics.GROUNDED, Semantics.PREFERRED,
                            Semantics.SEMI_STABLE, Semantics.STABLE})


class Strategy(Enum):
    SKEPTICAL = "skeptical"
    CREDULOUS = "credulous"

    @property
    def dagger(self) -> Strategy:
        return Strategy.CREDULOUS if self is Strategy.SKEPTICAL else Strategy.SKEPTICAL

    @property
    def symbol(self) -> str:
        return "∩" if self is Strategy.SKEPTICAL else "∪"

    @classmethod
    def parse(cls, text: str) -> Strategy:
        key = text.strip().lower()
        aliases = {"sk": "skeptical", "sceptical": "skeptical", "cap": "skeptical",
                   "cr": "credulous", "cred": "credulous", "cup": "credulous"}
        return cls(aliases.get(key, key))


IN, OUT, UNDEC = 1, 0, 2


def grounded_extension(af: AF) -> frozenset[str]:
    """Least fixpoint of the characteristic function."""
    current: frozenset[str] = frozenset()
    while True:
        beaten = af.plus(current)
        nxt = frozenset(a for a in af.arguments if af.attackers(a) <= beaten)
        if nxt == current:
            return current
        current = nxt


# label domains are bitmasks over the three labels
_BIT = {IN: 1, OUT: 2, UNDEC: 4}
_ALL = 7


def _revise(af: AF, a: str, dom: dict[str, int]) -> list[str] | None:
    """Prune the domains of ``a`` and its attackers against the labelling rule for ``a``.

    Returns the arguments whose domain shrank, or ``None`` on a wipe-out.
    """
    atts = sorted(af.attackers(a))
    can_in = [b for b in atts if dom[b] & 1]
    can_out_all = all(dom[b] & 2 for b in atts)
    can_undec = [b for b in atts if dom[b] & 4]
    some_fixed_in = any(dom[b] == 1 for b in atts)
    mine = dom[a]
    new = 0
    if mine & 1 and can_out_all:
        new |= 1
    if mine & 2 and can_in:
        new |= 2
    if mine & 4 and can_undec and not some_fixed_in:
        new |= 4
    changed = []
    if new != mine:
        if not new:
            return None
        dom[a] = new
        changed.append(a)
    for b in atts:
        others = [c for c in atts if c != b]
        keep = 0
        if new & 2:
            keep |= 1
        out_ok = (new & 1 and all(dom[c] & 2 for c in others)) \
            or (new & 2 and any(dom[c] & 1 for c in others)) \
            or (new & 4 and any(dom[c] & 4 for c in others) and not any(dom[c] == 1 for c in others))
        if out_ok:
            keep |= 2
        undec_ok = (new & 2 and any(dom[c] & 1 for c in others)) \
            or (new & 4 and not any(dom[c] == 1 for c in others))
        if undec_ok:
            keep |= 4
        narrowed = dom[b] & keep
        if narrowed != dom[b]:
            if not narrowed:
                return None
            dom[b] = narrowed
            changed.append(b)
    return changed


def _propagate(af: AF, dom: dict[str, int], queue: set[str]) -> bool:
    """Run revisions to a fixpoint starting from ``queue``. False on a contradiction."""
    while queue:
        a = queue.pop()
        changed = _revise(af, a, dom)
        if changed is None:
            return False
        for x in changed:
            queue.add(x)
            queue.update(af.attacked_by(x))
    return True


def complete_labellings(af: AF) -> Iterator[dict[str, int]]:
    """Every complete labelling, as a map from argument to IN/OUT/UNDEC."""
    start = {a: _ALL for a in af.arguments}
    if not _propagate(af, start, set(af.arguments)):
        return
    stack = [start]
    while stack:
        dom = stack.pop()
        open_ = [a for a in af.sorted_arguments if dom[a] not in (1, 2, 4)]
        if not open_:
            yield {a: next(v for v, bit in _BIT.items() if dom[a] == bit) for a in af.arguments}
            continue
        pick = min(open_, key=lambda a: (bin(dom[a]).count("1"), -len(af.attackers(a)) - len(af.attacked_by(a))))
        # pushed in reverse so IN is explored first
        for value in (UNDEC, OUT, IN):
            if dom[pick] & _BIT[value]:
                child = dict(dom)
                child[pick] = _BIT[value]
                if _propagate(af, child, {pick, *af.attacked_by(pick)}):
                    stack.append(child)


def _complete(af: AF) -> tuple[frozenset[str], ...]:
    exts = {frozenset(a for a, v in lab.items() if v == IN) for lab in complete_labellings(af)}
    return canonical_extensions(exts)


def _admissible(af: AF) -> tuple[frozenset[str], ...]:
    order = af.sorted_arguments
    position = {a: i for i, a in enumerate(order)}
    found: list[frozenset[str]] = []

    def addable(c: str, chosen: frozenset[str]) -> bool:
        return not (af.self_attacking(c) or af.attackers(c) & chosen or af.attacked_by(c) & chosen)

    def viable(i: int, chosen: frozenset[str], beaten: frozenset[str]) -> bool:
        # every attacker of a member must still be counter-attackable by an undecided argument
        for a in chosen:
            for b in af.attackers(a) - beaten:
                if not any(position[c] >= i and addable(c, chosen) for c in af.attackers(b)):
                    return False
        return True

    def search(i: int, chosen: frozenset[str], beaten: frozenset[str]) -> None:
        if not viable(i, chosen, beaten):
            return
        if i == len(order):
            found.append(chosen)
            return
        search(i + 1, chosen, beaten)
        a = order[i]
        if addable(a, chosen):
            search(i + 1, chosen | {a}, beaten | af.attacked_by(a))

    search(0, frozenset(), frozenset())
    return canonical_extensions(found)


def _maximal(sets: tuple[frozenset[str], ...], key=lambda s: s) -> list[frozenset[str]]:
    return [s for s in sets if not any(key(s) < key(t) for t in sets)]


def extensions(af: AF, sem: Semantics) -> tuple[frozenset[str], ...]:
    """All ``sem``-extensions of ``af`` in canonical order."""
    cache = af.__dict__.setdefault("_extension_cache", {})
    if sem in cache:
        return cache[sem]
    if sem is Semantics.ADMISSIBLE:
        result = _admissible(af)
    elif sem is Semantics.GROUNDED:
        result = (grounded_extension(af),)
    else:
        complete = extensions(af, Semantics.COMPLETE) if sem is not Semantics.COMPLETE else _complete(af)
        if sem is Semantics.COMPLETE:
            result = complete
        elif sem is Semantics.PREFERRED:
            result = canonical_extensions(_maximal(complete))
        elif sem is Semantics.SEMI_STABLE:
            result = canonical_extensions(_maximal(complete, key=lambda s: s | af.plus(s)))
        else:
            result = canonical_extensions(e for e in complete if e | af.plus(e) == af.arguments)
    cache[sem] = result
    return result


def ext_with(af: AF, sem: Semantics, a: str) -> tuple[frozenset[str], ...]:
    af.check(a)
    return tuple(e for e in extensions(af, sem) if a in e)


def ext_without(af: AF, sem: Semantics, a: str) -> tuple[frozenset[str], ...]:
    af.check(a)
    return tuple(e for e in extensions(af, sem) if a not in e)


@dataclass(frozen=True)
class AcceptanceStatus:
    """The four acceptance flags of an item under one semantics.

    An item can be credulously accepted and skeptically non-accepted at once.
    """

    skeptically_accepted: bool
    credulously_accepted: bool
    skeptically_nonaccepted: bool
    credulously_nonaccepted: bool

    def accepted(self, strategy: Strategy) -> bool:
        return self.skeptically_accepted if strategy is Strategy.SKEPTICAL else self.credulously_accepted

    def nonaccepted(self, strategy: Strategy) -> bool:
        if strategy is Strategy.SKEPTICAL:
            return self.skeptically_nonaccepted
        return self.credulously_nonaccepted

    def as_dict(self) -> dict[str, bool]:
        return {
            "credulously_accepted": self.credulously_accepted,
            "credulously_nonaccepted": self.credulously_nonaccepted,
            "skeptically_accepted": self.skeptically_accepted,
            "skeptically_nonaccepted": self.skeptically_nonaccepted,
        }


def status_from_partition(n_all: int, n_with: int, n_without: int) -> AcceptanceStatus:
    if n_all == 0:
        raise PreconditionError("acceptance is undefined: the semantics has no extensions")
    return AcceptanceStatus(
        skeptically_accepted=n_with == n_all,
        credulously_accepted=n_with > 0,
        skeptically_nonaccepted=n_without > 0,
        credulously_nonaccepted=n_without == n_all,
    )


def acceptance_status(af: AF, sem: Semantics, a: str) -> AcceptanceStatus:
    exts = extensions(af, sem)
    return status_from_partition(len(exts), len(ext_with(af, sem, a)), len(ext_without(af, sem, a)))


def is_accepted(af: AF, sem: Semantics, strategy: Strategy, a: str) -> bool:
    return acceptance_status(af, sem, a).accepted(strategy)


def is_nonaccepted(af: AF, sem: Semantics, strategy: Strategy, a: str) -> bool:
    return acceptance_status(af, sem, a).nonaccepted(strategy)
