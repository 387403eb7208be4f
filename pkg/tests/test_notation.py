import random

import pytest

from qsets import (
    CountZero,
    DepthExceeded,
    GenConfig,
    MAtom,
    MacroAtom,
    NatLabel,
    QSet,
    QsetSyntaxError,
    generate,
    indist,
    parse,
    print_canonical,
)


class TestParse:
    def test_pure_qset(self):
        x = parse("[m:e*3]")
        assert x.matoms == (("e", 3),)
        assert x.qc == 3

    def test_merge_on_parse(self):
        assert parse("[m:e, m:e*2, M:A]") == QSet(matoms=[("e", 3)], macros=["A"])
        assert print_canonical(parse("[m:e, m:e*2, M:A]")) == "[m:e*3, M:A]"

    def test_nested_merge_by_indistinguishability(self):
        assert print_canonical(parse("[[m:e, M:A], [M:A, m:e]]")) == "[[m:e, M:A]*2]"

    def test_atoms(self):
        assert parse("m:e") == MAtom("e")
        assert parse("M:Box") == MacroAtom("Box")
        assert parse("n:7") == NatLabel(7)

    def test_whitespace_insignificant(self):
        assert parse(" [ m:e * 2 ,\tM:A , [ ] ] ") == parse("[m:e*2,M:A,[]]")

    def test_count_zero(self):
        with pytest.raises(CountZero) as err:
            parse("[m:e*0]")
        assert err.value.offset == 6

    @pytest.mark.parametrize(
        "text,offset",
        [
            ("", 1),
            ("x", 1),
            ("[m:", 4),
            ("[m:e", 5),
            ("[m:e,]", 6),
            ("[m:e]]", 6),
            ("m:e extra", 5),
            ("[m:e*]", 6),
            ("[M:A*2]", 5),
            ("[m:E]", 4),
            ("m: ", 4),
            ("[n:x]", 4),
        ],
    )
    def test_positioned_errors(self, text, offset):
        with pytest.raises(QsetSyntaxError) as err:
            parse(text)
        assert err.value.offset == offset, f"{text!r} -> {err.value}"

    def test_depth_guard(self):
        deep_ok = "[" * 32 + "]" * 32
        assert parse(deep_ok).depth == 32
        with pytest.raises(DepthExceeded):
            parse("[" * 33 + "]" * 33)
        with pytest.raises(DepthExceeded):
            parse("[" * 5000)

    def test_star_one_is_legal(self):
        assert parse("[m:e*1]") == parse("[m:e]")
        assert parse("[[m:p]*1]") == parse("[[m:p]]")


class TestPrintCanonical:
    def test_empty(self):
        assert print_canonical(parse("[]")) == "[]"

    def test_part_ordering(self):
        x = QSet(
            matoms=[("p", 1), ("e", 2)],
            macros=["A"],
            nats=[1],
            nested=[(QSet(matoms=[("e", 1)]), 2)],
        )
        assert print_canonical(x) == "[m:e*2, m:p, M:A, n:1, [m:e]*2]"

    def test_nested_sorted_by_canonical_text(self):
        x = parse("[[m:p], [m:e], [M:A]]")
        assert print_canonical(x) == "[[M:A], [m:e], [m:p]]"

    def test_atom_forms(self):
        assert print_canonical(MAtom("e")) == "m:e"
        assert print_canonical(MacroAtom("A")) == "M:A"
        assert print_canonical(NatLabel(12)) == "n:12"


def messy_render(entity, rng):
    """A random grammar-valid, usually non-canonical rendering."""
    if isinstance(entity, MAtom):
        return f"m:{entity.species}"
    if isinstance(entity, MacroAtom):
        return f"M:{entity.name}"
    if isinstance(entity, NatLabel):
        return f"n:{entity.value}"
    pieces = []
    for rep, count in entity.classes():
        text = messy_render(rep, rng)
        can_star = not isinstance(rep, (MacroAtom, NatLabel))
        if can_star and count > 1 and rng.random() < 0.4:
            split = rng.randint(1, count - 1)
            pieces.append(f"{text}*{split}" if split > 1 else text)
            pieces.append(f"{text}*{count - split}" if count - split > 1 else text)
        elif can_star and (count > 1 or rng.random() < 0.2):
            pieces.append(f"{text}*{count}")
        else:
            pieces.append(text)
    rng.shuffle(pieces)
    sep = rng.choice([",", ", ", " , ", ",  "])
    pad = rng.choice(["", " ", "  "])
    return "[" + pad + sep.join(pieces) + pad + "]"


class TestRoundTrip:
    def test_parse_after_print_is_identity(self):
        for entity in generate(GenConfig(seed=31), 300):
            text = print_canonical(entity)
            again = parse(text)
            assert print_canonical(again) == text
            assert again == entity or again.canonical() == entity.canonical()

    def test_print_after_parse_is_idempotent_on_messy_strings(self):
        rng = random.Random(99)
        for entity in generate(GenConfig(seed=37), 300):
            if not isinstance(entity, QSet):
                continue
            messy = messy_render(entity, rng)
            once = print_canonical(parse(messy))
            assert print_canonical(parse(once)) == once
            assert parse(messy) == entity

    def test_canonical_text_equal_iff_indistinguishable(self):
        entities = generate(GenConfig(seed=41), 80)
        for a in entities:
            for b in entities:
                same_text = print_canonical(a) == print_canonical(b)
                assert same_text == indist(a, b)
