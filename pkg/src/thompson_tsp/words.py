"""Generating sets and words over them.

Words use a compact syntax: each generator has a lowercase symbol and the
matching uppercase letter is its inverse.  The built-in symbols are
``a = x0``, ``b = x1``, ``c = x2`` and ``d = x1 x0^-1``.  Whitespace is
ignored, so ``"abAA"`` and ``"a b A A"`` both spell ``x0 x1 x0^-2``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Sequence

from .generators import generator_map, standard_generators
from .plmap import IDENTITY, PLMap, pl_compose, pl_invert


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    symbol: str
    name: str
    map: PLMap
    definition: str = ""


@dataclass(frozen=True, eq=False)
class Alphabet:
    """An ordered generating set; ``maps[i]`` and ``inverses[i]`` realize letter ``i``."""

    name: str
    generators: tuple[Generator, ...]

    def __post_init__(self):
        seen = set()
        for g in self.generators:
            if len(g.symbol) != 1 or not g.symbol.islower():
                raise WordError(f"generator symbol {g.symbol!r} must be one lowercase letter")
            if g.symbol in seen:
                raise WordError(f"duplicate generator symbol {g.symbol!r}")
            seen.add(g.symbol)

    @cached_property
    def maps(self) -> tuple[PLMap, ...]:
        return tuple(g.map for g in self.generators)

    @cached_property
    def inverses(self) -> tuple[PLMap, ...]:
        return tuple(pl_invert(g.map) for g in self.generators)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {g.symbol: i for i, g in enumerate(self.generators)}

    def letter_map(self, index: int, sign: int) -> PLMap:
        return self.maps[index] if sign > 0 else self.inverses[index]

    def signed_letters(self) -> list[tuple[int, int]]:
        return [(i, s) for i in range(len(self.generators)) for s in (1, -1)]

    def index_of(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise WordError(
                f"unknown generator {symbol!r} for alphabet {self.name} "
                f"(known: {', '.join(self._index)})"
            ) from None

    def symbol(self, index: int, sign: int) -> str:
        s = self.generators[index].symbol
        return s if sign > 0 else s.upper()

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Alphabet({self.name}: {' '.join(g.symbol + '=' + g.name for g in self.generators)})"


@dataclass(frozen=True)
class GroupWord:
    """A word as written: ``len`` counts letters, with no free reduction."""

    alphabet: Alphabet
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = len(self.alphabet)
        for idx, sign in self.letters:
            if not 0 <= idx < n or sign not in (1, -1):
                raise WordError(f"bad letter ({idx}, {sign}) for alphabet {self.alphabet.name}")

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "GroupWord":
        letters = []
        for ch in text:
            if ch.isspace():
                continue
            if not ch.isalpha():
                raise WordError(f"invalid character {ch!r} in word {text!r}")
            letters.append((alphabet.index_of(ch.lower()), 1 if ch.islower() else -1))
        return cls(alphabet, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.alphabet.symbol(i, s) for i, s in self.letters)

    def __add__(self, other: "GroupWord") -> "GroupWord":
        if other.alphabet is not self.alphabet:
            raise WordError("cannot concatenate words over different alphabets")
        return GroupWord(self.alphabet, self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(self.alphabet, tuple((i, -s) for i, s in reversed(self.letters)))

    def power(self, k: int) -> "GroupWord":
        base = self if k >= 0 else self.inverse()
        return GroupWord(self.alphabet, base.letters * abs(k))

    def letter_maps(self) -> list[PLMap]:
        return [self.alphabet.letter_map(i, s) for i, s in self.letters]


def pl_from_word(w: GroupWord) -> PLMap:
    """Evaluate a word left to right: the first letter acts first."""
    alpha = w.alphabet
    result = IDENTITY
    for i, s in w.letters:
        result = pl_compose(result, alpha.letter_map(i, s))
    return result


def random_word(alphabet: Alphabet, length: int, rng: random.Random) -> GroupWord:
    """Uniformly random signed letters; no reduction, so ``len`` is exactly ``length``."""
    choices = alphabet.signed_letters()
    return GroupWord(alphabet, tuple(rng.choice(choices) for _ in range(length)))


_PRESETS: dict[str, Alphabet] = {}


def preset(name: str) -> Alphabet:
    """One of the three built-in generating sets: ``std2``, ``x012``, ``mirror3``."""
    if name in _PRESETS:
        return _PRESETS[name]
    x0, x1 = standard_generators()
    gens = [Generator("a", "x0", x0, "a"), Generator("b", "x1", x1, "b")]
    if name == "std2":
        pass
    elif name == "x012":
        gens.append(Generator("c", "x2", generator_map(2), "Aba"))
    elif name == "mirror3":
        gens.append(Generator("d", "x1x0^-1", pl_compose(x1, pl_invert(x0)), "bA"))
    else:
        raise WordError(f"unknown alphabet preset {name!r} (expected std2, x012 or mirror3)")
    _PRESETS[name] = alpha = Alphabet(name, tuple(gens))
    return alpha


def alphabet_from_definitions(name: str, defs: Sequence[dict]) -> Alphabet:
    """Build an alphabet from ``{"symbol", "name", "word"}`` records.

    Each ``word`` is written over ``a = x0`` and ``b = x1``.
    """
    base = preset("std2")
    gens = []
    for d in defs:
        try:
            symbol, word = d["symbol"], d["word"]
        except KeyError as exc:
            raise WordError(f"generator definition {d!r} lacks {exc.args[0]!r}") from None
        m = pl_from_word(GroupWord.parse(word, base))
        gens.append(Generator(symbol, d.get("name", word), m, word))
    return Alphabet(name, tuple(gens))


def load_alphabet_file(path: str | Path) -> tuple[Alphabet, dict]:
    """Read a JSON alphabet definition; returns the alphabet and the raw document."""
    doc = json.loads(Path(path).read_text())
    if "generators" not in doc:
        raise WordError(f"{path}: missing 'generators'")
    return alphabet_from_definitions(doc.get("name", Path(path).stem), doc["generators"]), doc

