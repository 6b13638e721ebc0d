"""Freely reduced words stored as runs of (symbol, exponent)."""

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from ..exceptions import PresentationError

Syllable = tuple[str, int]

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^\(?(-?\d+)\)?)?$")


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[Syllable] = []
    for symbol, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] == symbol:
            total = stack[-1][1] + exp
            stack.pop()
            if total:
                stack.append((symbol, total))
        else:
            stack.append((symbol, exp))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """An element of a free group; adjacent syllables have distinct symbols."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "syllables", _reduce(self.syllables))

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls()

    @classmethod
    def generator(cls, symbol: str, exp: int = 1) -> "FreeWord":
        return cls(((symbol, exp),))

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """Parse ``"a b^-1 c^2"`` (``*`` also separates, ``1`` is the identity).

        Raises:
            PresentationError: On a malformed token
        """
        syllables = []
        for token in text.replace("*", " ").split():
            if token == "1":
                continue
            match = _TOKEN.match(token)
            if not match:
                raise PresentationError(f"bad word token {token!r}")
            syllables.append((match.group(1), int(match.group(2) or 1)))
        return cls(tuple(syllables))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.syllables + other.syllables)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((s, -e) for s, e in reversed(self.syllables)))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        out = FreeWord()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self) -> int:
        """Letter length."""
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def symbols(self) -> set[str]:
        return {s for s, _ in self.syllables}

    def occurrences(self, symbol: str) -> int:
        return sum(abs(e) for s, e in self.syllables if s == symbol)

    def exponent_sum(self, symbol: str) -> int:
        return sum(e for s, e in self.syllables if s == symbol)

    def letters(self) -> list[Syllable]:
        """Expanded letters (symbol, ±1)."""
        out = []
        for s, e in self.syllables:
            step = 1 if e > 0 else -1
            out.extend([(s, step)] * abs(e))
        return out

    @classmethod
    def from_letters(cls, letters: Iterable[Syllable]) -> "FreeWord":
        return cls(tuple(letters))

    def substitute(self, images: Mapping[str, "FreeWord"]) -> "FreeWord":
        """Replace each symbol by its image; unmapped symbols stay."""
        out = FreeWord()
        for s, e in self.syllables:
            image = images.get(s)
            out = out * (image**e if image is not None else FreeWord(((s, e),)))
        return out

    def cyclic_reduce(self) -> "FreeWord":
        """Shortest conjugate obtained by cancelling first against last."""
        syl = list(self.syllables)
        while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
            symbol = syl[0][0]
            total = syl[0][1] + syl[-1][1]
            middle = syl[1:-1]
            if total:
                syl = [(symbol, total), *middle]
                break
            syl = middle
        return FreeWord(tuple(syl))

    def rotations(self) -> list["FreeWord"]:
        """All cyclic letter rotations of the cyclically reduced word."""
        letters = self.cyclic_reduce().letters()
        return [
            FreeWord.from_letters(letters[k:] + letters[:k]) for k in range(len(letters))
        ] or [FreeWord()]

    def text(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self.syllables)

    def to_list(self) -> list[list]:
        return [[s, e] for s, e in self.syllables]

    def __str__(self) -> str:
        return self.text()


def canonical_relator(word: FreeWord) -> tuple[Syllable, ...]:
    """Least rotation of the word or its inverse, for equality up to
    free reduction, cyclic permutation and inversion."""
    candidates = word.rotations() + word.inverse().rotations()
    return min(c.syllables for c in candidates)


def relator_equivalent(r: FreeWord, s: FreeWord) -> bool:
    return canonical_relator(r) == canonical_relator(s)
