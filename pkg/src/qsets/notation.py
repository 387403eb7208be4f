"""Textual notation for entities: parser and canonical printer.

Grammar (whitespace insignificant between tokens)::

    entity := qset | atom
    qset   := '[' (elem (',' elem)*)? ']'
    elem   := 'm:' ident ('*' nat)? | 'M:' ident | 'n:' nat | qset ('*' nat)?
    atom   := 'm:' ident | 'M:' ident | 'n:' nat
    ident  := [a-zA-Z][a-zA-Z0-9_]*
    nat    := [0-9]+

``m:`` introduces an m-atom species (lowercase), ``M:`` an M-atom name,
``n:`` a natural label.  ``*count`` states the multiplicity of an
indistinguishability class directly; identity-bearing elements take no
count.  Parsing canonicalizes: duplicate species add their counts,
M-atoms and labels deduplicate, indistinguishable nested qsets merge.

Canonical output lists m-atom classes sorted by species, then M-atoms
sorted by name, then labels ascending, then nested classes sorted by
their own canonical text, with ``*count`` omitted when the count is 1.
Canonical text is a total key: two entities print identically exactly
when the model cannot tell them apart.
"""

from __future__ import annotations

import re

from .core import Entity, MAtom, MacroAtom, NatLabel, QSet, MAX_DEPTH
from .errors import CountZero, DepthExceeded, QsetSyntaxError

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_NAT = re.compile(r"[0-9]+")
_WS = re.compile(r"[ \t\r\n]*")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, at: "int | None" = None):
        raise QsetSyntaxError(message, (self.pos if at is None else at) + 1)

    def skip_ws(self) -> None:
        self.pos = _WS.match(self.text, self.pos).end()

    def peek(self) -> str:
        return self.text[self.pos : self.pos + 1]

    def take(self, literal: str) -> None:
        self.pos += len(literal)

    def lex(self, pattern: re.Pattern, expected: str) -> str:
        m = pattern.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {expected}")
        self.pos = m.end()
        return m.group()


def _count(r: _Reader) -> int:
    """Optional '*' nat suffix; returns 1 when absent."""
    r.skip_ws()
    if r.peek() != "*":
        return 1
    r.take("*")
    r.skip_ws()
    start = r.pos
    value = int(r.lex(_NAT, "a count"))
    if value == 0:
        raise CountZero(start + 1)
    return value


def _atom(r: _Reader) -> Entity:
    tag = r.text[r.pos : r.pos + 2]
    if tag == "m:":
        r.take("m:")
        r.skip_ws()
        start = r.pos
        name = r.lex(_IDENT, "a species name")
        if name != name.lower():
            r.fail("species names are lowercase", at=start)
        return MAtom(name)
    if tag == "M:":
        r.take("M:")
        r.skip_ws()
        return MacroAtom(r.lex(_IDENT, "an M-atom name"))
    if tag == "n:":
        r.take("n:")
        r.skip_ws()
        return NatLabel(int(r.lex(_NAT, "a label value")))
    r.fail("expected '[', 'm:', 'M:' or 'n:'")


def _qset(r: _Reader, depth: int) -> QSet:
    if depth > MAX_DEPTH:
        raise DepthExceeded(f"nesting deeper than {MAX_DEPTH}")
    r.take("[")
    matoms: list[tuple[str, int]] = []
    macros: list[str] = []
    nats: list[int] = []
    nested: list[tuple[QSet, int]] = []
    r.skip_ws()
    if r.peek() == "]":
        r.take("]")
        return QSet()
    while True:
        r.skip_ws()
        c = r.peek()
        if c == "[":
            member = _qset(r, depth + 1)
            nested.append((member, _count(r)))
        elif c == "":
            r.fail("expected an element")
        else:
            atom = _atom(r)
            if isinstance(atom, MAtom):
                matoms.append((atom.species, _count(r)))
            elif isinstance(atom, MacroAtom):
                macros.append(atom.name)
            else:
                nats.append(atom.value)
        r.skip_ws()
        c = r.peek()
        if c == ",":
            r.take(",")
            continue
        if c == "]":
            r.take("]")
            return QSet(matoms=matoms, macros=macros, nats=nats, nested=nested)
        r.fail("expected ',' or ']'")


def parse(text: str) -> Entity:
    """Parse source text into a canonical entity.

    Raises :class:`QsetSyntaxError` (with a 1-based offset) on anything
    outside the grammar, :class:`CountZero` on a ``*0`` multiplicity, and
    :class:`DepthExceeded` past the nesting bound.
    """
    r = _Reader(text)
    r.skip_ws()
    entity = _qset(r, 1) if r.peek() == "[" else _atom(r)
    r.skip_ws()
    if r.pos != len(r.text):
        r.fail("unexpected trailing input")
    return entity


def print_canonical(x: Entity) -> str:
    """Canonical text of an entity; parsing it back reproduces ``x``."""
    if not isinstance(x, Entity):
        raise TypeError(f"not an entity: {x!r}")
    return x.canonical()
