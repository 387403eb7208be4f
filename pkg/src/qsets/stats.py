"""Microstate counting for collections of indistinguishable particles.

States are k anonymous distinguishable cells.  An assignment of n
indistinguishable particles to cells carries no more information than
its occupancy vector (n_1, ..., n_k), which is exactly a quasi-function
from a pure qset into the cells: the counting that treats particles as
non-individuals from the start gives Bose-Einstein, adding the exclusion
rule gives Fermi-Dirac, and re-weighting occupancies by the multinomial
recovers Maxwell-Boltzmann, the classical count for individuals.

Closed forms:

* Bose-Einstein:      C(n + k - 1, k - 1)
* Fermi-Dirac:        C(k, n)
* Maxwell-Boltzmann:  k ** n

All arithmetic is exact; counts above 2**64 raise
:class:`~qsets.errors.Overflow` instead of being approximated.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import QSet
from .errors import NotPure, Overflow, ScaleExceeded

#: Explicit enumeration is supported for n, k up to this bound.
ENUMERATION_LIMIT = 12

#: Exact counts above this raise Overflow.
CARDINAL_LIMIT = 1 << 64

_LOG2_LIMIT = 64.0


class StatKind(enum.Enum):
    """The three supported counting rules."""

    BOSE_EINSTEIN = "be"
    FERMI_DIRAC = "fd"
    MAXWELL_BOLTZMANN = "mb"


@dataclass(frozen=True)
class OccupancyVector:
    """Per-state occupation numbers for one microstate class."""

    counts: "tuple[int, ...]"

    def __post_init__(self):
        if any(not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in self.counts):
            raise ValueError("occupancies must be non-negative integers")

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def k(self) -> int:
        return len(self.counts)


def _check_nk(n: int, k: int) -> None:
    for value in (n, k):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"bad argument {value!r}: want a non-negative integer")


def _guard(value: int) -> int:
    if value > CARDINAL_LIMIT:
        raise Overflow(f"count {value} exceeds 2**64")
    return value


def _bounded_comb(a: int, b: int) -> int:
    """Exact C(a, b) with an Overflow error above 2**64."""
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    if a > 256:
        # lgamma sits well within 1e-9 of the true value here, so a
        # margin of 1 bit cannot misclassify.
        log2 = (math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)) / math.log(2)
        if log2 > _LOG2_LIMIT + 1:
            raise Overflow(f"C({a}, {b}) exceeds 2**64")
    return _guard(math.comb(a, b))


def _bounded_pow(k: int, n: int) -> int:
    """Exact k**n with an Overflow error above 2**64."""
    if k == 0:
        return 1 if n == 0 else 0
    if k == 1:
        return 1
    if n > 64:
        raise Overflow(f"{k}**{n} exceeds 2**64")
    return _guard(k**n)


def enumerate_occupancies(n: int, k: int, exclusion: bool = False) -> "list[OccupancyVector]":
    """All ways to split n among k states, largest-first lexicographic.

    With ``exclusion`` every occupation number is capped at 1.  Raises
    :class:`ScaleExceeded` past the desk-scale bound.
    """
    _check_nk(n, k)
    if n > ENUMERATION_LIMIT or k > ENUMERATION_LIMIT:
        raise ScaleExceeded(
            f"enumeration supports n, k <= {ENUMERATION_LIMIT}, got n={n} k={k}"
        )
    cap = 1 if exclusion else n
    out: list[OccupancyVector] = []

    def fill(prefix: "tuple[int, ...]", left: int, slots: int) -> None:
        if slots == 0:
            if left == 0:
                out.append(OccupancyVector(prefix))
            return
        for first in range(min(left, cap), -1, -1):
            fill(prefix + (first,), left - first, slots - 1)

    fill((), n, k)
    return out


def microstate_count(n: int, k: int, kind: StatKind) -> int:
    """Number of microstates for n particles over k states under ``kind``."""
    _check_nk(n, k)
    if kind is StatKind.BOSE_EINSTEIN:
        if k == 0:
            return 1 if n == 0 else 0
        return _bounded_comb(n + k - 1, k - 1)
    if kind is StatKind.FERMI_DIRAC:
        return _bounded_comb(k, n)
    if kind is StatKind.MAXWELL_BOLTZMANN:
        return _bounded_pow(k, n)
    raise TypeError(f"unknown statistics kind: {kind!r}")


def mb_weight(vector: OccupancyVector) -> int:
    """Multinomial weight n! / (n_1! ... n_k!) of one occupancy vector.

    This is how many labelled assignments collapse onto the vector, the
    re-weighting under which occupancies of indiscernibles reproduce the
    classical Maxwell-Boltzmann count.
    """
    remaining = vector.n
    result = 1
    for count in vector.counts:
        result *= _bounded_comb(remaining, count)
        remaining -= count
    return _guard(result)


def quasi_function_count(source: QSet, k: int) -> int:
    """Distinct quasi-functions from a pure qset into k states.

    A quasi-function from indistinguishable sources is determined by how
    many elements land in each state, so this equals the Bose-Einstein
    count for qc(source) particles.  Raises :class:`NotPure` unless the
    source is a pure qset of at most one species.
    """
    if not isinstance(source, QSet):
        raise TypeError(f"quasi_function_count needs a qset, got {source!r}")
    if source.macros or source.nats or source.nested or len(source.matoms) > 1:
        raise NotPure(
            f"quasi-function counting needs a pure single-species qset, got {source.canonical()}"
        )
    return microstate_count(source.qc, k, StatKind.BOSE_EINSTEIN)
