"""Seeded randomized checks of the algebraic and sheaf laws.

Operations are looked up through the module objects at call time, so a
test can monkeypatch e.g. ``algebra.implies`` and watch the suite report
a counterexample.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import algebra as alg
from . import sheaf as sh

DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 10)


def random_rational(rng: random.Random, upper: Fraction, denominators=DENOMINATORS) -> Fraction:
    d = rng.choice(denominators)
    return Fraction(rng.randint(0, int(upper * d)), d)


def random_lifetime(rng: random.Random, bounds: alg.Bounds, denominators=DENOMINATORS) -> alg.Lifetime:
    return alg.Lifetime._raw(
        random_rational(rng, bounds.eps1, denominators),
        random_rational(rng, bounds.eps2, denominators),
        bounds,
    )


def _size(obj) -> int:
    if isinstance(obj, alg.Lifetime):
        return sum(abs(q.numerator) + q.denominator for q in obj.as_tuple())
    if isinstance(obj, (list, tuple)):
        return sum(_size(o) for o in obj)
    if isinstance(obj, dict):
        return sum(_size(o) for o in obj.values())
    return 0


def _render(obj) -> str:
    if isinstance(obj, alg.Lifetime):
        return alg.format_lifetime(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(o) for o in obj) + "]"
    return str(obj)


@dataclass
class LawResult:
    name: str
    total: int = 0
    passed: int = 0
    counterexample: Optional[dict] = None
    # smallest failing instance by coordinate size; ties keep the earliest
    _best: int = field(default=-1, repr=False)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, holds: bool, instance: dict) -> None:
        self.total += 1
        if holds:
            self.passed += 1
            return
        size = _size(instance)
        if self.counterexample is None or size < self._best:
            self.counterexample, self._best = instance, size

    def describe_counterexample(self) -> str:
        if self.counterexample is None:
            return ""
        return " ".join(f"{k}={_render(v)}" for k, v in self.counterexample.items())


def check_adjunction(rng, bounds, samples) -> LawResult:
    res = LawResult("adjunction")
    for _ in range(samples):
        a, b, x = (random_lifetime(rng, bounds) for _ in range(3))
        imp = alg.implies(a, b)
        holds = alg.leq(alg.meet(x, a), b) == alg.leq(x, imp)
        res.record(holds, {"a": a, "b": b, "x": x, "a->b": imp})
    return res


def check_distributivity(rng, bounds, samples, max_family: int = 8) -> LawResult:
    res = LawResult("distributivity")
    for _ in range(samples):
        a = random_lifetime(rng, bounds)
        ys = [random_lifetime(rng, bounds) for _ in range(rng.randint(1, max_family))]
        lhs = alg.meet(a, alg.join_family(ys))
        rhs = alg.join_family([alg.meet(a, y) for y in ys])
        res.record(lhs == rhs, {"a": a, "ys": ys, "lhs": lhs, "rhs": rhs})
    return res


def check_absorption(rng, bounds, samples) -> LawResult:
    res = LawResult("absorption")
    for _ in range(samples):
        a, b = random_lifetime(rng, bounds), random_lifetime(rng, bounds)
        holds = alg.meet(a, alg.join(a, b)) == a and alg.join(a, alg.meet(a, b)) == a
        res.record(holds, {"a": a, "b": b})
    return res


def check_lattice(rng, bounds, samples) -> LawResult:
    """Associativity, commutativity, idempotence and order agreement."""
    res = LawResult("lattice")
    meet, join, leq = alg.meet, alg.join, alg.leq
    for _ in range(samples):
        a, b, c = (random_lifetime(rng, bounds) for _ in range(3))
        holds = (
            meet(a, meet(b, c)) == meet(meet(a, b), c)
            and join(a, join(b, c)) == join(join(a, b), c)
            and meet(a, b) == meet(b, a)
            and join(a, b) == join(b, a)
            and meet(a, a) == a
            and join(a, a) == a
            and leq(a, b) == (meet(a, b) == a) == (join(a, b) == b)
        )
        res.record(holds, {"a": a, "b": b, "c": c})
    return res


def check_gluing(rng, bounds, samples, max_patches: int = 5) -> LawResult:
    """Glue, restrict back, and look for a second section agreeing everywhere."""
    res = LawResult("gluing")
    for _ in range(samples):
        cover, hidden = sh.random_compatible_cover(rng, bounds, max_patches)
        try:
            z = sh.glue(cover)
        except sh.GluingError:
            res.record(False, {"patches": cover.patches, "sections": cover.sections})
            continue
        restricts = all(
            sh.restrict(z, cover.base, it.patch) == it.section for it in cover.items
        )
        other = alg.meet(random_lifetime(rng, bounds), cover.base)
        separated = sh.separated_check(cover.base, cover.patches, z, other) and sh.separated_check(
            cover.base, cover.patches, z, hidden
        )
        res.record(
            z == hidden and alg.leq(z, cover.base) and restricts and separated,
            {"patches": cover.patches, "sections": cover.sections, "glued": z, "other": other},
        )
    return res


SUITES: dict[str, Callable[..., LawResult]] = {
    "adjunction": check_adjunction,
    "distributivity": check_distributivity,
    "absorption": check_absorption,
    "lattice": check_lattice,
    "gluing": check_gluing,
}


def run_all(samples: int, seed: int, bounds: alg.Bounds) -> list[LawResult]:
    if samples <= 0:
        raise ValueError("samples must be positive")
    results = []
    for name, suite in SUITES.items():
        # independent stream per suite so adding a suite leaves others unchanged
        rng = random.Random(f"{seed}:{name}")
        results.append(suite(rng, bounds, samples))
    return results
