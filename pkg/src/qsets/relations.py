"""Indistinguishability, extensional equality, similarity, and quotients.

Indistinguishability is a total equivalence over all entities.  It
extends identity: identical things are indistinguishable, but m-atoms of
one species are indistinguishable without any fact of identity between
them.  Extensional equality is the identity-like relation for everything
that is not an m-atom; applying it to an m-atom raises
:class:`~qsets.errors.IllFormedFormula`.

On qsets the two relations coincide with canonical structural equality:
two qsets are indistinguishable exactly when their quotients match class
by class with equal counts, and the canonical form is precisely that
quotient written down in a fixed order.  :func:`weak_ext_indist` keeps
the explicit quotient-matching computation as a separately testable
route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Entity, MAtom, MacroAtom, NatLabel, QSet
from .errors import IllFormedFormula


def indist(x: Entity, y: Entity) -> bool:
    """The indistinguishability relation; total, and an equivalence.

    m-atoms compare by species, M-atoms and labels by identity, qsets by
    canonical form; entities of different kinds are distinguishable.
    """
    if isinstance(x, MAtom):
        return isinstance(y, MAtom) and x.species == y.species
    if isinstance(x, MacroAtom):
        return isinstance(y, MacroAtom) and x.name == y.name
    if isinstance(x, NatLabel):
        return isinstance(y, NatLabel) and x.value == y.value
    if isinstance(x, QSet):
        return isinstance(y, QSet) and x == y
    raise TypeError(f"not an entity: {x!r}")


def ext_eq(x: Entity, y: Entity) -> bool:
    """Extensional equality, defined only away from m-atoms.

    Raises :class:`IllFormedFormula` if either argument is an m-atom;
    for everything else it agrees with :func:`indist`.
    """
    if isinstance(x, MAtom) or isinstance(y, MAtom):
        raise IllFormedFormula("equality applied to an m-atom is not a formula")
    return indist(x, y)


@dataclass(frozen=True)
class QuotientView:
    """The element classes of a qset: (representative, count) pairs.

    Representatives pairwise fail indistinguishability, counts are >= 1,
    and the counts sum to the quasi-cardinal of the source.
    """

    classes: "tuple[tuple[Entity, int], ...]"

    @property
    def total(self) -> int:
        return sum(count for _, count in self.classes)


def quotient(x: QSet) -> QuotientView:
    """Partition the elements of ``x`` into indistinguishability classes."""
    if not isinstance(x, QSet):
        raise TypeError(f"quotient needs a qset, got {x!r}")
    return QuotientView(tuple(x.classes()))


def sim(x: QSet, y: QSet) -> bool:
    """Similarity: every element of one is indistinguishable from every
    element of the other.  Vacuously true when either side is empty."""
    reps_x = [rep for rep, _ in x.classes()]
    reps_y = [rep for rep, _ in y.classes()]
    return all(indist(a, b) for a in reps_x for b in reps_y)


def qsim(x: QSet, y: QSet) -> bool:
    """Similar and of equal quasi-cardinal."""
    return sim(x, y) and x.qc == y.qc


def weak_ext_indist(x: QSet, y: QSet) -> bool:
    """Quotient-matching indistinguishability of two qsets.

    True when every class of ``x`` pairs off with a class of ``y`` of
    indistinguishable representative and equal count, and conversely.
    Agrees with ``indist`` on qsets; kept as the explicit computation.
    """
    classes_x = list(x.classes())
    classes_y = list(y.classes())
    if len(classes_x) != len(classes_y):
        return False
    unmatched = classes_y
    for rep, count in classes_x:
        for j, (other, other_count) in enumerate(unmatched):
            if count == other_count and indist(rep, other):
                unmatched = unmatched[:j] + unmatched[j + 1 :]
                break
        else:
            return False
    return not unmatched
