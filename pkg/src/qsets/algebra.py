"""Axiom-backed constructors over qsets.

Weak pairs, separation, union, difference by a strong singleton,
deterministic sub-qset extraction, power-qset cardinality, and ordered
pairs in the Kuratowski encoding.  Everything here is a pure function of
canonical values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import EMPTY, Entity, QSet
from .errors import (
    CardinalTooLarge,
    EmptyQset,
    MalformedPair,
    NotAMember,
    Overflow,
    UniverseMiss,
)
from .relations import indist

#: Exact powers are computed up to 2**POWER_BOUND; beyond raises Overflow.
POWER_BOUND = 64


@dataclass(frozen=True)
class StrongSingleton:
    """A sub-qset of some weak singleton holding exactly one element."""

    inner: QSet

    def __post_init__(self):
        if not isinstance(self.inner, QSet) or self.inner.qc != 1:
            raise ValueError("a strong singleton holds exactly one element")

    @property
    def element(self) -> Entity:
        """Representative of the single element class."""
        return next(self.inner.classes())[0]


@dataclass(frozen=True)
class OrderedPair:
    """Kuratowski pair [[a], [a, b]], collapsed to [[a]] when a and b are
    indistinguishable."""

    encoding: QSet

    @property
    def first(self) -> Entity:
        return decode_pair(self.encoding)[0]

    @property
    def second(self) -> Entity:
        return decode_pair(self.encoding)[1]


def weak_pair(x: Entity, y: Entity, universe: QSet) -> QSet:
    """All elements of ``universe`` indistinguishable from ``x`` or ``y``.

    Counts come from the universe, so the result may hold far more than
    two elements.  When ``x`` and ``y`` are indistinguishable this is the
    weak singleton of ``x`` relative to the universe.  Raises
    :class:`UniverseMiss` when either argument matches nothing.
    """
    if not isinstance(universe, QSet):
        raise TypeError(f"weak_pair needs a qset universe, got {universe!r}")
    found_x = found_y = False
    kept = []
    for rep, count in universe.classes():
        match_x = indist(rep, x)
        match_y = indist(rep, y)
        found_x = found_x or match_x
        found_y = found_y or match_y
        if match_x or match_y:
            kept.append((rep, count))
    if not found_x:
        raise UniverseMiss(f"nothing in the universe is indistinguishable from {x.canonical()}")
    if not found_y:
        raise UniverseMiss(f"nothing in the universe is indistinguishable from {y.canonical()}")
    return QSet.from_elements(kept)


def strong_pair(x: Entity, y: Entity) -> QSet:
    """Context-free pair with one occurrence per class.

    Collapses to a single class of count 1 when ``x`` and ``y`` are
    indistinguishable; this is the building block of ordered pairs.
    """
    if indist(x, y):
        return QSet.from_elements([(x, 1)])
    return QSet.from_elements([(x, 1), (y, 1)])


def separation(x: QSet, predicate: Callable[[Entity], bool]) -> QSet:
    """Sub-qset of the classes whose representative satisfies ``predicate``.

    The predicate sees class representatives only, so it cannot smuggle
    in identity facts about individual m-atoms.  Kept classes keep their
    full counts.
    """
    return QSet.from_elements(
        (rep, count) for rep, count in x.classes() if predicate(rep)
    )


def union(x: QSet, y: QSet) -> QSet:
    """Classwise union: counts add for indistinguishable classes,
    identity-bearing elements merge set-style."""
    return QSet.from_elements(list(x.classes()) + list(y.classes()))


def difference(x: QSet, s: StrongSingleton) -> QSet:
    """Remove one occurrence of the class of ``s``'s element from ``x``.

    The quasi-cardinal drops by exactly one.  Raises
    :class:`NotAMember` when the class is absent.
    """
    target = s.element
    classes = list(x.classes())
    for i, (rep, count) in enumerate(classes):
        if indist(rep, target):
            remaining = classes[:i] + classes[i + 1 :]
            if count > 1:
                remaining.append((rep, count - 1))
            return QSet.from_elements(remaining)
    raise NotAMember(f"{target.canonical()} has no indistinguishable element in {x.canonical()}")


def strong_singleton_of(x: QSet) -> "tuple[StrongSingleton, QSet]":
    """Split off one element of ``x``'s first canonical class.

    Returns the strong singleton and the remainder; their union is
    indistinguishable from ``x``.  Raises :class:`EmptyQset` on an empty
    input.
    """
    if x.qc == 0:
        raise EmptyQset("cannot extract a strong singleton from the empty qset")
    rep, _ = next(x.classes())
    singleton = StrongSingleton(QSet.from_elements([(rep, 1)]))
    return singleton, difference(x, singleton)


def sub_qset_of_card(x: QSet, beta: int) -> QSet:
    """Deterministic sub-qset of quasi-cardinal ``beta``.

    Classes are consumed in canonical order until ``beta`` elements have
    been taken.  Raises :class:`CardinalTooLarge` when ``beta`` exceeds
    the quasi-cardinal of ``x``.
    """
    if not isinstance(beta, int) or isinstance(beta, bool) or beta < 0:
        raise ValueError(f"bad cardinal {beta!r}: want a non-negative integer")
    if beta > x.qc:
        raise CardinalTooLarge(f"requested {beta} elements from a qset of quasi-cardinal {x.qc}")
    remaining = beta
    taken = []
    for rep, count in x.classes():
        if remaining == 0:
            break
        take = min(count, remaining)
        taken.append((rep, take))
        remaining -= take
    return QSet.from_elements(taken)


def power_qc(x: QSet) -> int:
    """Quasi-cardinal of the power qset: exactly 2**qc(x).

    Raises :class:`Overflow` above the exact-arithmetic bound rather
    than ever wrapping.
    """
    n = x.qc
    if n > POWER_BOUND:
        raise Overflow(f"2**{n} exceeds the exact bound 2**{POWER_BOUND}")
    return 1 << n


def distinguishable_subqsets(x: QSet) -> int:
    """How many sub-qsets of ``x`` the model can actually tell apart.

    Each class of count c contributes a choice of 0..c occurrences, each
    identity-bearing element an in/out choice.  Always at most
    ``power_qc(x)``, with equality exactly when every class has count 1.
    """
    if x.qc > POWER_BOUND:
        raise Overflow(f"enumeration bound 2**{x.qc} exceeds 2**{POWER_BOUND}")
    result = 1
    for _, count in x.matoms:
        result *= count + 1
    for _, count in x.nested:
        result *= count + 1
    return result << (len(x.macros) + len(x.nats))


def ordered_pair(a: Entity, b: Entity) -> OrderedPair:
    """Kuratowski ordered pair of ``a`` and ``b``.

    When the coordinates are indistinguishable the encoding collapses to
    [[a]], so pairs over one species cannot order anything: any relation
    holding (a, b) holds something indistinguishable from (b, a).
    """
    return OrderedPair(strong_pair(strong_pair(a, a), strong_pair(a, b)))


def _single_class(q: QSet) -> Entity:
    classes = list(q.classes())
    if len(classes) != 1 or classes[0][1] != 1:
        raise MalformedPair(f"{q.canonical()} is not a one-element qset")
    return classes[0][0]


def decode_pair(encoding: QSet) -> "tuple[Entity, Entity]":
    """Read a Kuratowski encoding back into its two coordinates.

    Raises :class:`MalformedPair` for anything that is not the encoding
    of some ordered pair.
    """
    if not isinstance(encoding, QSet):
        raise MalformedPair(f"{encoding!r} is not a qset")
    if encoding.matoms or encoding.macros or encoding.nats:
        raise MalformedPair(f"{encoding.canonical()} holds atoms at pair level")
    classes = encoding.nested
    if len(classes) == 1:
        inner, count = classes[0]
        if count != 1:
            raise MalformedPair(f"{encoding.canonical()} repeats its inner qset")
        first = _single_class(inner)
        return first, first
    if len(classes) == 2:
        (q1, c1), (q2, c2) = classes
        if c1 != 1 or c2 != 1:
            raise MalformedPair(f"{encoding.canonical()} repeats an inner qset")
        if q1.qc == 1 and q2.qc == 2:
            single, double = q1, q2
        elif q1.qc == 2 and q2.qc == 1:
            single, double = q2, q1
        else:
            raise MalformedPair(f"{encoding.canonical()} lacks a singleton/doubleton split")
        first = _single_class(single)
        double_classes = list(double.classes())
        if len(double_classes) != 2 or any(c != 1 for _, c in double_classes):
            raise MalformedPair(f"{double.canonical()} is not a two-element qset of distinct classes")
        if indist(double_classes[0][0], first):
            return first, double_classes[1][0]
        if indist(double_classes[1][0], first):
            return first, double_classes[0][0]
        raise MalformedPair(f"{double.canonical()} does not contain the first coordinate")
    raise MalformedPair(f"{encoding.canonical()} has {len(classes)} classes, a pair has 1 or 2")


__all__ = [
    "EMPTY",
    "OrderedPair",
    "POWER_BOUND",
    "StrongSingleton",
    "decode_pair",
    "difference",
    "distinguishable_subqsets",
    "ordered_pair",
    "power_qc",
    "separation",
    "strong_pair",
    "strong_singleton_of",
    "sub_qset_of_card",
    "union",
    "weak_pair",
]
