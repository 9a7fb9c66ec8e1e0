"""Seeded property suites: presentation relations, the conjugation lemma, the mixed identity."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .generators import calibration_checks, standard_generators
from .plmap import PLMap
from .witness import (
    LemmaFailure,
    SupportPair,
    WitnessError,
    check_mixed_identity,
    lemma1_witness,
)
from .words import Alphabet, Generator, GroupWord, random_word

DEFAULT_SEED = 20050101
DEFAULT_SAMPLES = 200
MAX_WORD_LENGTH = 24


@dataclass
class SectionResult:
    name: str
    passed: int = 0
    total: int = 0
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, detail: dict) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = detail


@dataclass
class CheckSummary:
    sections: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.sections)

    def first_failure(self) -> Optional[SectionResult]:
        return next((s for s in self.sections if not s.ok), None)

    def to_json(self) -> dict:
        doc = {s.name: f"{s.passed}/{s.total}" for s in self.sections}
        bad = self.first_failure()
        if bad is not None:
            doc["first_failure"] = {"section": bad.name, **bad.counterexample}
        doc["ok"] = self.ok
        return doc


def run_check_suite(samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                    generators: Optional[tuple[PLMap, PLMap]] = None) -> CheckSummary:
    """Relations and support facts, then ``samples`` random words for each randomized section.

    ``generators`` replaces the calibrated ``(x0, x1)``; a corrupted table
    must show up as failures here.
    """
    x0, x1 = generators if generators is not None else standard_generators()
    summary = CheckSummary()

    relations, supports = SectionResult("relations"), SectionResult("support")
    for name, ok in calibration_checks(x0, x1).items():
        target = supports if "trivial" in name else relations
        target.record(ok, {"check": name})
    summary.sections += [relations, supports]

    alpha = Alphabet("std2", (Generator("a", "x0", x0, "a"), Generator("b", "x1", x1, "b")))
    pair = SupportPair(GroupWord.parse("b", alpha), GroupWord.parse("abAA", alpha))
    rng = random.Random(seed)

    lemma = SectionResult("lemma1")
    for _ in range(samples):
        xi = random_word(alpha, rng.randint(0, MAX_WORD_LENGTH), rng)
        try:
            lemma1_witness(xi, pair)
            ok = True
        except (LemmaFailure, WitnessError):
            ok = False
        lemma.record(ok, {"xi": str(xi)})
    summary.sections.append(lemma)

    mixed = SectionResult("mixed")
    for _ in range(samples):
        g = random_word(alpha, rng.randint(0, MAX_WORD_LENGTH), rng)
        mixed.record(check_mixed_identity(g, x0, x1), {"g": str(g)})
    summary.sections.append(mixed)
    return summary
