"""Free-group words over an indexed generator alphabet, and quandle terms.

Letters of a word are nonzero integers: ``+(i + 1)`` is generator ``i``,
``-(i + 1)`` is its inverse.  Words are stored fully reduced (no adjacent
pair g, g^-1) and are immutable, so they can be shared freely.

A quandle term is a base generator together with a word exponent; the
element the pair (x, w) denotes is x acted on by the letters of w in
order, left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Generator:
    """A named generator with a dense index assigned at declaration time."""

    name: str
    index: int

    def __post_init__(self):
        if not self.name:
            raise ValueError("generator name must be nonempty")
        if self.index < 0:
            raise ValueError("generator index must be >= 0")

    @property
    def letter(self) -> int:
        return self.index + 1


def reduce_letters(letters) -> tuple[int, ...]:
    """Freely reduce a sequence of signed letters with a stack."""
    out = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a valid letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """An always-reduced word in the free group on indexed generators."""

    letters: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def __invert__(self) -> "FreeWord":
        return FreeWord(tuple(-x for x in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return (~self) ** (-n)
        return FreeWord(self.letters * n)

    def max_index(self) -> int:
        """Largest generator index used, or -1 for the empty word."""
        return max((abs(x) for x in self.letters), default=0) - 1


EMPTY = FreeWord()


def word(*letters: int) -> FreeWord:
    return FreeWord(tuple(letters))


def gen_word(g: Generator, sign: int = 1) -> FreeWord:
    return FreeWord((sign * g.letter,))


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v


def invert(w: FreeWord) -> FreeWord:
    return ~w


@dataclass(frozen=True)
class QuandleTerm:
    """A quandle element written as a base generator with a word exponent."""

    base: int  # generator index
    exponent: FreeWord = EMPTY

    def __post_init__(self):
        if self.base < 0:
            raise ValueError("base must be a generator index >= 0")


def left_associate(t: QuandleTerm, s: QuandleTerm, sign: int = 1) -> QuandleTerm:
    """Act on term t by term s (sign +1) or by its inverse (sign -1).

    For t = x^u and s = y^v the result is x^{u v^-1 y^sign v}, which
    re-associates the nested operation into a single exponent word.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    u = t.exponent
    v = s.exponent
    y = FreeWord((sign * (s.base + 1),))
    return QuandleTerm(t.base, u * ~v * y * v)


# Text form: juxtaposed generator names, `^-1` marking an inverse letter.
# The empty word renders as "1".

_TOKEN = re.compile(r"([^\s^]+)(\^-1)?")


def word_to_text(w: FreeWord, names) -> str:
    if not w:
        return "1"
    parts = []
    for x in w:
        name = names[abs(x) - 1]
        parts.append(name if x > 0 else name + "^-1")
    return " ".join(parts)


def word_from_text(text: str, names) -> FreeWord:
    """Parse the rendering produced by word_to_text (lossless round-trip)."""
    index = {name: i for i, name in enumerate(names)}
    stripped = text.strip()
    if stripped in ("", "1"):
        return EMPTY
    letters = []
    for tok in stripped.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise ValueError(f"bad word token: {tok!r}")
        name, inv = m.group(1), m.group(2)
        if name not in index:
            raise ValueError(f"unknown generator {name!r} in word")
        letters.append(-(index[name] + 1) if inv else index[name] + 1)
    return FreeWord(tuple(letters))
