"""Seeded entity generation and the machine-checked axiom battery.

Twelve named checks run over pseudo-random populations and together form
the evidence that the finite model satisfies its axioms at desk scale.
Case seeds derive deterministically from (master seed, property, case),
so runs are reproducible and cases could run in any order or in parallel
without changing the report.  Failing cases are shrunk by structural
descent (drop a class, halve a count) to a minimal counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache, reduce

from . import algebra, labelling, stats
from .core import EMPTY, Entity, MAtom, MacroAtom, NatLabel, QSet, is_set, member
from .errors import IllFormedFormula, UniverseMiss
from .relations import ext_eq, indist, weak_ext_indist

_MASK = (1 << 64) - 1


def _mix(*parts: int) -> int:
    """Deterministic 64-bit mixer for deriving per-case seeds."""
    acc = 0x9E3779B97F4A7C15
    for p in parts:
        acc = ((acc ^ (p & _MASK)) * 0xBF58476D1CE4E5B9) & _MASK
        acc ^= acc >> 31
    return acc


@dataclass(frozen=True)
class GenConfig:
    """Bounds and pools for entity generation."""

    seed: int = 0
    max_depth: int = 4
    max_width: int = 6
    max_count: int = 8
    species_pool: "tuple[str, ...]" = ("e", "p", "u")
    matom_pool: "tuple[str, ...]" = ("A", "B", "C")

    def __post_init__(self):
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ValueError("seed must be an integer")
        if not 0 <= self.max_depth <= 4:
            raise ValueError("max_depth must be between 0 and 4")
        if not 1 <= self.max_width <= 6:
            raise ValueError("max_width must be between 1 and 6")
        if not 1 <= self.max_count <= 8:
            raise ValueError("max_count must be between 1 and 8")
        if not self.species_pool or not self.matom_pool:
            raise ValueError("name pools must be nonempty")


def _random_qset(rng: random.Random, cfg: GenConfig, depth: int) -> QSet:
    elements = []
    for _ in range(rng.randint(0, cfg.max_width)):
        roll = rng.random()
        if depth > 1 and roll < 0.25:
            elements.append((_random_qset(rng, cfg, depth - 1), rng.randint(1, cfg.max_count)))
        elif roll < 0.6:
            elements.append((MAtom(rng.choice(cfg.species_pool)), rng.randint(1, cfg.max_count)))
        elif roll < 0.8:
            elements.append(MacroAtom(rng.choice(cfg.matom_pool)))
        else:
            elements.append(NatLabel(rng.randrange(10)))
    return QSet.from_elements(elements)


def _random_entity(rng: random.Random, cfg: GenConfig, depth: int) -> Entity:
    if depth > 0 and rng.random() < 0.55:
        return _random_qset(rng, cfg, depth)
    roll = rng.random()
    if roll < 0.5:
        return MAtom(rng.choice(cfg.species_pool))
    if roll < 0.75:
        return MacroAtom(rng.choice(cfg.matom_pool))
    return NatLabel(rng.randrange(10))


def _rebuild(entity: Entity) -> Entity:
    """A fresh object indistinguishable from ``entity``."""
    if isinstance(entity, QSet):
        return QSet.from_elements(list(entity.classes()))
    if isinstance(entity, MAtom):
        return MAtom(entity.species)
    if isinstance(entity, MacroAtom):
        return MacroAtom(entity.name)
    return NatLabel(entity.value)


def generate(cfg: GenConfig, count: int) -> "list[Entity]":
    """Deterministic stream of ``count`` entities within the bounds."""
    rng = random.Random(_mix(cfg.seed))
    return [_random_entity(rng, cfg, cfg.max_depth) for _ in range(count)]


# ---------------------------------------------------------------------------
# Property checks.  Each is a (generate inputs, test inputs) pair; tests
# raise AssertionError (or any unexpected exception) on failure.


def _describe(inputs) -> str:
    parts = [x.canonical() if isinstance(x, Entity) else repr(x) for x in inputs]
    return "(" + ", ".join(parts) + ")"


def _is_subqset(y: QSet, x: QSet) -> bool:
    counts = {rep.canonical(): count for rep, count in x.classes()}
    return all(counts.get(rep.canonical(), 0) >= count for rep, count in y.classes())


def _gen_equiv(rng, cfg):
    population = [_random_entity(rng, cfg, cfg.max_depth) for _ in range(4)]
    population.append(_rebuild(rng.choice(population)))
    return tuple(population)


def _test_equiv(inputs):
    for a in inputs:
        assert indist(a, a), f"reflexivity broke on {a.canonical()}"
    for a in inputs:
        for b in inputs:
            assert indist(a, b) == indist(b, a), (
                f"symmetry broke on {a.canonical()} vs {b.canonical()}"
            )
            for c in inputs:
                if indist(a, b) and indist(b, c):
                    assert indist(a, c), (
                        f"transitivity broke on {a.canonical()}, {b.canonical()}, {c.canonical()}"
                    )


def _gen_illformed(rng, cfg):
    return (
        MAtom(rng.choice(cfg.species_pool)),
        _random_entity(rng, cfg, cfg.max_depth),
        _random_qset(rng, cfg, cfg.max_depth),
    )


def _test_illformed(inputs):
    matom, other, container = inputs
    for a, b in ((matom, other), (other, matom)):
        try:
            ext_eq(a, b)
        except IllFormedFormula:
            pass
        else:
            raise AssertionError(f"ext_eq({a.canonical()}, {b.canonical()}) was accepted")
    try:
        member(matom, container)
    except IllFormedFormula:
        pass
    else:
        raise AssertionError(f"member({matom.canonical()}, ...) was accepted")


def _gen_non_matom(rng, cfg):
    while True:
        e = _random_entity(rng, cfg, cfg.max_depth)
        if not isinstance(e, MAtom):
            return e


def _gen_ext2indist(rng, cfg):
    a = _gen_non_matom(rng, cfg)
    b = _rebuild(a) if rng.random() < 0.5 else _gen_non_matom(rng, cfg)
    return (a, b)


def _test_ext2indist(inputs):
    a, b = inputs
    if isinstance(a, MAtom) or isinstance(b, MAtom):
        return
    if ext_eq(a, b):
        assert indist(a, b), f"ext_eq held but indist failed on {_describe(inputs)}"


def _gen_weakpair(rng, cfg):
    universe = _random_qset(rng, cfg, cfg.max_depth)
    classes = list(universe.classes())

    def pick():
        if classes and rng.random() < 0.7:
            return _rebuild(rng.choice(classes)[0])
        return _random_entity(rng, cfg, 1)

    return (pick(), pick(), universe)


def _test_weakpair(inputs):
    x, y, universe = inputs
    matches_x = any(indist(rep, x) for rep, _ in universe.classes())
    matches_y = any(indist(rep, y) for rep, _ in universe.classes())
    try:
        z = algebra.weak_pair(x, y, universe)
    except UniverseMiss:
        assert not (matches_x and matches_y), f"spurious miss on {_describe(inputs)}"
        return
    assert matches_x and matches_y, f"missing miss on {_describe(inputs)}"
    kept = {rep.canonical(): count for rep, count in z.classes()}
    for rep, count in z.classes():
        assert indist(rep, x) or indist(rep, y), (
            f"stray class {rep.canonical()} in weak pair of {_describe(inputs)}"
        )
    for rep, count in universe.classes():
        if indist(rep, x) or indist(rep, y):
            assert kept.get(rep.canonical()) == count, (
                f"class {rep.canonical()} not kept with full count for {_describe(inputs)}"
            )


_SEPARATION_MENU = (
    lambda rep: isinstance(rep, MAtom),
    lambda rep: isinstance(rep, QSet),
    lambda rep: is_set(rep),
    lambda rep: isinstance(rep, NatLabel) and rep.value % 2 == 0,
    lambda rep: True,
    lambda rep: False,
)


def _gen_sep(rng, cfg):
    return (_random_qset(rng, cfg, cfg.max_depth), rng.randrange(len(_SEPARATION_MENU)))


def _test_sep(inputs):
    x, menu_index = inputs
    predicate = _SEPARATION_MENU[menu_index % len(_SEPARATION_MENU)]
    y = algebra.separation(x, predicate)
    assert _is_subqset(y, x), f"separation left the sub-qset relation on {_describe(inputs)}"
    kept = {rep.canonical() for rep, _ in y.classes()}
    for rep, count in x.classes():
        if predicate(rep):
            assert rep.canonical() in kept, f"dropped satisfying class on {_describe(inputs)}"
        else:
            assert rep.canonical() not in kept, f"kept failing class on {_describe(inputs)}"


def _gen_one_qset(rng, cfg):
    return (_random_qset(rng, cfg, cfg.max_depth),)


def _test_qcunique(inputs):
    (x,) = inputs
    total = sum(count for _, count in x.classes())
    assert x.qc >= 0 and x.qc == total, f"qc mismatch on {x.canonical()}"
    assert (x.qc == 0) == (not list(x.classes())), f"qc zero iff empty broke on {x.canonical()}"
    assert EMPTY.qc == 0


def _test_subqc(inputs):
    (x,) = inputs
    betas = range(x.qc + 1) if x.qc <= 12 else sorted({0, 1, x.qc // 2, x.qc - 1, x.qc})
    for beta in betas:
        y = algebra.sub_qset_of_card(x, beta)
        assert y.qc == beta, f"sub-qset of cardinal {beta} got qc {y.qc} from {x.canonical()}"
        assert _is_subqset(y, x), f"sub-qset escaped {x.canonical()}"


def _test_powqc(inputs):
    (x,) = inputs
    power = algebra.power_qc(x)
    assert power == 1 << x.qc, f"power count wrong on {x.canonical()}"
    seen = algebra.distinguishable_subqsets(x)
    assert seen <= power, f"distinguishable exceeded power on {x.canonical()}"
    all_single = all(count == 1 for _, count in x.classes())
    assert (seen == power) == all_single, f"equality condition broke on {x.canonical()}"


def _gen_wext(rng, cfg):
    x = _random_qset(rng, cfg, cfg.max_depth)
    y = _rebuild(x) if rng.random() < 0.5 else _random_qset(rng, cfg, cfg.max_depth)
    return (x, y)


def _test_wext(inputs):
    x, y = inputs
    assert weak_ext_indist(x, y) == indist(x, y), (
        f"quotient matching and indist disagree on {_describe(inputs)}"
    )


def _gen_pairsym(rng, cfg):
    a = _random_entity(rng, cfg, cfg.max_depth - 1)
    return (a, _rebuild(a))


def _test_pairsym(inputs):
    a, b = inputs
    if not indist(a, b):
        return
    forward = algebra.ordered_pair(a, b)
    backward = algebra.ordered_pair(b, a)
    assert indist(forward.encoding, backward.encoding), (
        f"pair symmetry broke on {_describe(inputs)}"
    )
    collapsed = algebra.strong_pair(algebra.strong_pair(a, a), algebra.strong_pair(a, a))
    assert forward.encoding == collapsed, f"pair collapse broke on {_describe(inputs)}"


def _gen_labelpost(rng, cfg):
    species = rng.choice(cfg.species_pool)
    count = rng.randint(0, cfg.max_count)
    source = QSet(matoms=[(species, count)]) if count else QSet()
    return (source,)


def _test_labelpost(inputs):
    (source,) = inputs
    if source.macros or source.nats or source.nested or len(source.matoms) > 1:
        return
    warehouse = labelling.label(source)
    assert labelling.verify_weak_labelling(warehouse), (
        f"weak labelling postcondition broke on {source.canonical()}"
    )
    pairs = warehouse.pairs()
    assert warehouse.n == source.qc == warehouse.w.qc, f"size bookkeeping broke on {source.canonical()}"
    labels = sorted(second.value for _, second in pairs)
    assert labels == list(range(1, warehouse.n + 1)), f"label range broke on {source.canonical()}"
    regathered = reduce(algebra.union, (first for first, _ in pairs), EMPTY)
    assert indist(regathered, source), f"conservation broke on {source.canonical()}"


@lru_cache(maxsize=None)
def _stats_identity(n: int, k: int) -> None:
    be = stats.microstate_count(n, k, stats.StatKind.BOSE_EINSTEIN)
    fd = stats.microstate_count(n, k, stats.StatKind.FERMI_DIRAC)
    mb = stats.microstate_count(n, k, stats.StatKind.MAXWELL_BOLTZMANN)
    all_vectors = stats.enumerate_occupancies(n, k, exclusion=False)
    assert be == len(all_vectors), f"BE closed form vs enumeration broke at n={n} k={k}"
    assert fd == len(stats.enumerate_occupancies(n, k, exclusion=True)), (
        f"FD closed form vs enumeration broke at n={n} k={k}"
    )
    assert mb == sum(stats.mb_weight(v) for v in all_vectors) == k**n, (
        f"MB weight sum broke at n={n} k={k}"
    )
    pure = QSet(matoms=[("e", n)]) if n else QSet()
    assert stats.quasi_function_count(pure, k) == be, f"quasi-function count broke at n={n} k={k}"


def _gen_stats(rng, cfg):
    return (rng.randint(1, 8), rng.randint(1, 8))


def _test_stats(inputs):
    n, k = inputs
    if not (1 <= n <= 8 and 1 <= k <= 8):
        return
    _stats_identity(n, k)


_CHECKS = (
    ("EQUIV", _gen_equiv, _test_equiv),
    ("ILLFORMED", _gen_illformed, _test_illformed),
    ("EXT2INDIST", _gen_ext2indist, _test_ext2indist),
    ("WEAKPAIR", _gen_weakpair, _test_weakpair),
    ("SEP", _gen_sep, _test_sep),
    ("QCUNIQUE", _gen_one_qset, _test_qcunique),
    ("SUBQC", _gen_one_qset, _test_subqc),
    ("POWQC", _gen_one_qset, _test_powqc),
    ("WEXT", _gen_wext, _test_wext),
    ("PAIRSYM", _gen_pairsym, _test_pairsym),
    ("LABELPOST", _gen_labelpost, _test_labelpost),
    ("STATS", _gen_stats, _test_stats),
)

PROPERTY_NAMES = tuple(name for name, _, _ in _CHECKS)


# ---------------------------------------------------------------------------
# Shrinking and the runner.


def _shrink_candidates(value):
    if isinstance(value, QSet):
        classes = list(value.classes())
        for i in range(len(classes)):
            yield QSet.from_elements(classes[:i] + classes[i + 1 :])
        for i, (rep, count) in enumerate(classes):
            if count >= 2:
                yield QSet.from_elements(
                    classes[:i] + [(rep, count // 2)] + classes[i + 1 :]
                )
    elif isinstance(value, int) and not isinstance(value, bool):
        if value >= 2:
            yield value // 2


def _fails(test, inputs) -> bool:
    try:
        test(inputs)
    except Exception:
        return True
    return False


def _shrink(inputs, test):
    current = list(inputs)
    for _ in range(1000):
        for position in range(len(current)):
            reduced = None
            for candidate in _shrink_candidates(current[position]):
                trial = list(current)
                trial[position] = candidate
                if _fails(test, tuple(trial)):
                    reduced = trial
                    break
            if reduced is not None:
                current = reduced
                break
        else:
            break
    return tuple(current)


@dataclass(frozen=True)
class CheckFailure:
    case_index: int
    case_seed: int
    message: str


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    failures: "tuple[CheckFailure, ...]" = ()


@dataclass(frozen=True)
class SuiteReport:
    checks: "tuple[CheckResult, ...]" = field(default_factory=tuple)

    @property
    def total_failures(self) -> int:
        return sum(len(c.failures) for c in self.checks)

    def format(self) -> str:
        """One line per property: name, cases, failures, first counterexample."""
        lines = []
        for check in self.checks:
            line = f"{check.name}: cases={check.cases} failures={len(check.failures)}"
            if check.failures:
                first = check.failures[0]
                line += f" first=[seed={first.case_seed}] {first.message}"
            lines.append(line)
        return "\n".join(lines)


def _oneline(text: str) -> str:
    return " ".join(str(text).split())


def run_suite(cfg: GenConfig, cases: int) -> SuiteReport:
    """Run every property ``cases`` times; failures carry seeds and
    shrunk counterexamples."""
    if not isinstance(cases, int) or isinstance(cases, bool) or cases < 0:
        raise ValueError(f"bad case count {cases!r}")
    results = []
    for check_index, (name, gen, test) in enumerate(_CHECKS):
        failures = []
        for case_index in range(cases):
            case_seed = _mix(cfg.seed, check_index, case_index)
            inputs = gen(random.Random(case_seed), cfg)
            try:
                test(inputs)
            except Exception:
                shrunk = _shrink(inputs, test)
                try:
                    test(shrunk)
                    message = "failure did not reproduce after shrinking"
                except Exception as exc:
                    message = f"{type(exc).__name__}: {_oneline(exc)}"
                failures.append(
                    CheckFailure(case_index, case_seed, f"{message} inputs={_describe(shrunk)}")
                )
        results.append(CheckResult(name, cases, tuple(failures)))
    return SuiteReport(tuple(results))
