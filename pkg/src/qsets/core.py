"""Entity kinds, the canonical qset representation, and membership queries.

Four kinds of entity exist in the model:

* m-atoms (:class:`MAtom`): known only by species.  Two m-atoms of one
  species are indistinguishable, and asking whether they are *identical*
  is ill-formed, not false.
* M-atoms (:class:`MacroAtom`): classical urelements with ordinary
  identity, named by a string.
* natural labels (:class:`NatLabel`): opaque classical values standing in
  for sets of the classical fragment; the labelling loop hands them out.
* qsets (:class:`QSet`): finite collections of all of the above.

A qset never stores individual m-atoms.  A collection of n
indistinguishable m-atoms is represented by its species together with the
count n, which is exactly the information the model makes meaningful:
such a collection has a cardinal but no ordinal, so there is nothing to
order and nothing to name.  Indistinguishable nested qsets are likewise
stored once with a count.

All values are immutable after construction and safe to share between
threads.  ``==`` between qsets compares canonical forms, which for qsets
coincides with indistinguishability; it is a representation-level tool,
not the theory's extensional equality (for that, use
:func:`qsets.relations.ext_eq`, which refuses m-atoms).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import DepthExceeded, IllFormedFormula

#: Construction refuses qsets nested deeper than this.
MAX_DEPTH = 32

_SPECIES_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

# memo of names already validated; construction is hot in the labelling loop
_KNOWN_SPECIES: "set[str]" = set()
_KNOWN_NAMES: "set[str]" = set()


def _check_species(species: str) -> str:
    if species not in _KNOWN_SPECIES:
        if not isinstance(species, str) or not _SPECIES_RE.match(species):
            raise ValueError(
                f"bad species {species!r}: want a nonempty lowercase identifier"
            )
        _KNOWN_SPECIES.add(species)
    return species


def _check_name(name: str) -> str:
    if name not in _KNOWN_NAMES:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise ValueError(f"bad M-atom name {name!r}: want a nonempty identifier")
        _KNOWN_NAMES.add(name)
    return name


class Entity:
    """Common base for everything that can occur in a qset."""

    __slots__ = ()

    def canonical(self) -> str:
        """Canonical source text for this entity (parseable, total order key)."""
        raise NotImplementedError

    @property
    def depth(self) -> int:
        """Nesting depth: 0 for atoms, 1 + max over members for qsets."""
        return 0


@dataclass(frozen=True)
class MAtom(Entity):
    """One m-atom, known only by its species (a lowercase identifier)."""

    species: str

    def __post_init__(self):
        _check_species(self.species)

    def canonical(self) -> str:
        return f"m:{self.species}"


@dataclass(frozen=True)
class MacroAtom(Entity):
    """A classical urelement; its name is its identity."""

    name: str

    def __post_init__(self):
        _check_name(self.name)

    def canonical(self) -> str:
        return f"M:{self.name}"


@dataclass(frozen=True)
class NatLabel(Entity):
    """An opaque natural-number label with classical identity."""

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 0:
            raise ValueError(f"bad label {self.value!r}: want a non-negative integer")

    def canonical(self) -> str:
        return f"n:{self.value}"


MAtomsArg = Union[Mapping[str, int], Iterable[Union[str, "tuple[str, int]"]]]


def _check_count(count) -> int:
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        raise ValueError(f"bad count {count!r}: want an integer >= 1")
    return count


class QSet(Entity):
    """A finite qset held in canonical form.

    Parts, in canonical order:

    * ``matoms``: ``((species, count), ...)`` sorted by species
    * ``macros``: ``(name, ...)`` sorted
    * ``nats``: ``(value, ...)`` sorted
    * ``nested``: ``((qset, count), ...)`` sorted by the member's
      canonical text; members are pairwise distinguishable

    Duplicate species and indistinguishable nested qsets merge by adding
    counts; M-atoms and labels carry identity, so they deduplicate.
    Construction is the only mutation point; instances are hashable and
    the canonical text is cached.
    """

    __slots__ = ("_matoms", "_macros", "_nats", "_nested", "_qc", "_depth", "_canon", "_hash")

    def __init__(
        self,
        matoms: MAtomsArg = (),
        macros: Iterable[str] = (),
        nats: Iterable[int] = (),
        nested: Iterable[Union["QSet", "tuple[QSet, int]"]] = (),
    ):
        species_counts: dict[str, int] = {}
        items = matoms.items() if hasattr(matoms, "items") else matoms
        for item in items:
            species, count = item if isinstance(item, tuple) else (item, 1)
            _check_species(species)
            species_counts[species] = species_counts.get(species, 0) + _check_count(count)

        macro_names = set()
        for name in macros:
            _check_name(name)
            macro_names.add(name)

        nat_values = set()
        for value in nats:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"bad label {value!r}: want a non-negative integer")
            nat_values.add(value)

        nested_counts: dict[QSet, int] = {}
        for item in nested:
            member, count = item if isinstance(item, tuple) else (item, 1)
            if not isinstance(member, QSet):
                raise TypeError(f"nested members must be qsets, got {member!r}")
            nested_counts[member] = nested_counts.get(member, 0) + _check_count(count)

        self._matoms = tuple(sorted(species_counts.items()))
        self._macros = tuple(sorted(macro_names))
        self._nats = tuple(sorted(nat_values))
        self._nested = tuple(sorted(nested_counts.items(), key=lambda it: it[0]._canon))

        depth = 1 + max((q._depth for q, _ in self._nested), default=0)
        if depth > MAX_DEPTH:
            raise DepthExceeded(f"qset nesting depth {depth} exceeds the bound {MAX_DEPTH}")
        self._depth = depth

        self._qc = (
            sum(c for _, c in self._matoms)
            + len(self._macros)
            + len(self._nats)
            + sum(c for _, c in self._nested)
        )

        parts = []
        for species, count in self._matoms:
            parts.append(f"m:{species}" if count == 1 else f"m:{species}*{count}")
        for name in self._macros:
            parts.append(f"M:{name}")
        for value in self._nats:
            parts.append(f"n:{value}")
        for member, count in self._nested:
            parts.append(member._canon if count == 1 else f"{member._canon}*{count}")
        self._canon = "[" + ", ".join(parts) + "]"
        self._hash = hash(self._canon)

    @classmethod
    def from_elements(cls, elements: Iterable[Union[Entity, "tuple[Entity, int]"]]) -> "QSet":
        """Build a qset from (entity, count) pairs or bare entities.

        Counts on M-atoms and labels collapse to presence, set-style.
        """
        matoms: list[tuple[str, int]] = []
        macros: list[str] = []
        nats: list[int] = []
        nested: list[tuple[QSet, int]] = []
        for item in elements:
            entity, count = item if isinstance(item, tuple) else (item, 1)
            if isinstance(entity, MAtom):
                matoms.append((entity.species, count))
            elif isinstance(entity, MacroAtom):
                _check_count(count)
                macros.append(entity.name)
            elif isinstance(entity, NatLabel):
                _check_count(count)
                nats.append(entity.value)
            elif isinstance(entity, QSet):
                nested.append((entity, count))
            else:
                raise TypeError(f"not an entity: {entity!r}")
        return cls(matoms=matoms, macros=macros, nats=nats, nested=nested)

    @property
    def matoms(self) -> "tuple[tuple[str, int], ...]":
        return self._matoms

    @property
    def macros(self) -> "tuple[str, ...]":
        return self._macros

    @property
    def nats(self) -> "tuple[int, ...]":
        return self._nats

    @property
    def nested(self) -> "tuple[tuple[QSet, int], ...]":
        return self._nested

    @property
    def qc(self) -> int:
        """The quasi-cardinal: total element count across all parts."""
        return self._qc

    @property
    def depth(self) -> int:
        return self._depth

    @property
    def is_empty(self) -> bool:
        return self._qc == 0

    def classes(self) -> Iterator["tuple[Entity, int]"]:
        """Yield (representative, count) per element class, canonical order."""
        for species, count in self._matoms:
            yield MAtom(species), count
        for name in self._macros:
            yield MacroAtom(name), 1
        for value in self._nats:
            yield NatLabel(value), 1
        for member, count in self._nested:
            yield member, count

    def count_of_species(self, species: str) -> int:
        """Top-level count of m-atoms of ``species`` (0 if absent)."""
        for s, count in self._matoms:
            if s == species:
                return count
        return 0

    def canonical(self) -> str:
        return self._canon

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSet):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"QSet({self._canon!r})"


#: The empty qset.
EMPTY = QSet()


def qc(x: QSet) -> int:
    """Quasi-cardinal of ``x``; equals the classical cardinality on sets."""
    if not isinstance(x, QSet):
        raise TypeError(f"qc needs a qset, got {x!r}")
    return x.qc


def is_set(x: Entity) -> bool:
    """True when no m-atom occurs anywhere in the transitive closure of ``x``."""
    if isinstance(x, MAtom):
        return False
    if isinstance(x, (MacroAtom, NatLabel)):
        return True
    if isinstance(x, QSet):
        return not x.matoms and all(is_set(member) for member, _ in x.nested)
    raise TypeError(f"not an entity: {x!r}")


def member(z: Entity, x: QSet) -> bool:
    """Whether some element of ``x`` equals ``z`` extensionally.

    Raises :class:`IllFormedFormula` when ``z`` is an m-atom: picking out
    one individual m-atom would require the very identity the model
    denies them.  Species-level membership is :func:`member_species`.
    """
    if not isinstance(x, QSet):
        raise TypeError(f"member needs a qset on the right, got {x!r}")
    if isinstance(z, MAtom):
        raise IllFormedFormula(
            "membership of an individual m-atom is not a formula; "
            "use member_species for the class-level question"
        )
    if isinstance(z, MacroAtom):
        return z.name in x.macros
    if isinstance(z, NatLabel):
        return z.value in x.nats
    if isinstance(z, QSet):
        return any(member_qset == z for member_qset, _ in x.nested)
    raise TypeError(f"not an entity: {z!r}")


def member_species(species: str, x: QSet) -> int:
    """How many m-atoms of ``species`` the qset holds at top level."""
    if not isinstance(x, QSet):
        raise TypeError(f"member_species needs a qset, got {x!r}")
    return x.count_of_species(species)
