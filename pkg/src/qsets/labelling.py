"""Attaching integer labels to indiscernible objects.

The loop: start from a finite weak singleton (a pure qset whose elements
all share one species), repeatedly split off a strong singleton, pair it
with the next integer, and store the pair in a warehouse qset.  It
terminates after exactly qc(input) rounds because each difference drops
the quasi-cardinal by one.

The output is deliberately weak as a labelling: the pairs are pairwise
distinguishable through their second coordinates, while their first
coordinates stay mutually indistinguishable.  Labels stick to positions
in the warehouse, never to individuals, so the ability to label these
objects confers no individuality on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebra
from .core import Entity, NatLabel, QSet
from .errors import MalformedPair, NotPure
from .relations import indist


@dataclass(frozen=True)
class LabelledWarehouse:
    """Qset of ordered pairs (strong singleton, integer label).

    ``n`` is the number of pairs; labels run 1..n with no repeats, all
    first coordinates are pairwise indistinguishable, and qc(w) == n.
    """

    w: QSet
    n: int

    def pairs(self) -> "list[tuple[Entity, Entity]]":
        """Decoded (first, second) coordinates, one per warehouse element."""
        out = []
        for encoding, count in self.w.nested:
            out.extend([algebra.decode_pair(encoding)] * count)
        return out


def label(source: QSet) -> LabelledWarehouse:
    """Run the labelling loop over a finite weak singleton.

    Raises :class:`NotPure` unless the input is a pure qset of a single
    species (the empty qset is the degenerate case and yields an empty
    warehouse; the loop body itself would misstep on it, so it is
    guarded before the first round).
    """
    if not isinstance(source, QSet):
        raise TypeError(f"label needs a qset, got {source!r}")
    if source.macros or source.nats or source.nested or len(source.matoms) > 1:
        raise NotPure(
            f"label needs a pure single-species qset, got {source.canonical()}"
        )
    n = source.qc
    encodings = []
    current = source
    head = None  # [x'] is loop-invariant over a single-species input
    m = 0
    while current.qc > 0:
        m += 1
        if m > n:
            raise RuntimeError("labelling failed to shrink its input; difference is broken")
        singleton, current = algebra.strong_singleton_of(current)
        if head is None:
            head = algebra.strong_pair(singleton.inner, singleton.inner)
        tail = algebra.strong_pair(singleton.inner, NatLabel(m))
        encodings.append(algebra.strong_pair(head, tail))
    return LabelledWarehouse(QSet.from_elements([(e, 1) for e in encodings]), n)


def verify_weak_labelling(warehouse: LabelledWarehouse) -> bool:
    """Check the weak-labelling postcondition on a warehouse.

    Three conditions: second coordinates pairwise distinguishable, first
    coordinates pairwise indistinguishable, and the pairs themselves
    pairwise distinguishable.  Raises :class:`MalformedPair` when some
    warehouse element is not an ordered-pair encoding at all.

    The pairwise checks run in linear time: transitivity collapses the
    first-coordinate check onto one representative, canonical strings
    decide distinguishability of seconds, and the warehouse's canonical
    form already keeps distinguishable pair classes apart, so only a
    repeated class (count above 1) can break the third condition.
    """
    w = warehouse.w
    if w.matoms or w.macros or w.nats:
        raise MalformedPair(f"{w.canonical()} holds non-pair elements")
    firsts: list[Entity] = []
    seconds: list[Entity] = []
    repeated = False
    for encoding, count in w.nested:
        first, second = algebra.decode_pair(encoding)
        firsts.extend([first] * count)
        seconds.extend([second] * count)
        repeated = repeated or count > 1
    if len({s.canonical() for s in seconds}) != len(seconds):
        return False
    if firsts and not all(indist(firsts[0], f) for f in firsts[1:]):
        return False
    if repeated:
        return False
    return True
