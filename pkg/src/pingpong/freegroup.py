"""Reduced words in a free group of finite rank.

Text syntax: lowercase ASCII letters are generators (``a`` is generator 0),
uppercase letters are their inverses. Whitespace is ignored, so ``"ab BA"``
parses to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_RANK = 26


class Letter(NamedTuple):
    generator_index: int
    inverted: bool = False

    def inverse(self) -> "Letter":
        return Letter(self.generator_index, not self.inverted)

    @property
    def code(self) -> int:
        # a=0, A=1, b=2, B=3, ...; used for lexicographic comparisons
        return 2 * self.generator_index + int(self.inverted)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(code // 2, bool(code % 2))

    @classmethod
    def parse(cls, ch: str) -> "Letter":
        if len(ch) != 1 or not ch.isascii() or not ch.isalpha():
            raise ValueError(f"not a letter: {ch!r}")
        return cls(ord(ch.lower()) - ord("a"), ch.isupper())

    def __str__(self) -> str:
        ch = chr(ord("a") + self.generator_index)
        return ch.upper() if self.inverted else ch


class RankMismatch(ValueError):
    pass


def _check_rank(rank: int) -> None:
    if not 1 <= rank <= MAX_RANK:
        raise ValueError(f"rank must be in [1, {MAX_RANK}], got {rank}")


@dataclass(frozen=True)
class Word:
    """An element of the free group F_rank, stored as a reduced letter tuple."""

    rank: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        _check_rank(self.rank)
        for x in self.letters:
            if not 0 <= x.generator_index < self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")
        for x, y in zip(self.letters, self.letters[1:]):
            if x == y.inverse():
                raise ValueError(f"word is not reduced: {self}")

    @classmethod
    def identity(cls, rank: int) -> "Word":
        return cls(rank)

    @classmethod
    def parse(cls, text: str, rank: int) -> "Word":
        letters = [Letter.parse(ch) for ch in text if not ch.isspace()]
        return reduce(letters, rank)

    @classmethod
    def generator(cls, index: int, rank: int) -> "Word":
        return cls(rank, (Letter(index),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(str(x) for x in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, rank={self.rank})"

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def inverse(self) -> "Word":
        return Word(self.rank, tuple(x.inverse() for x in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters


def reduce(raw: Iterable[Letter], rank: int) -> Word:
    """Freely reduce a sequence of letters."""
    stack: list[Letter] = []
    for x in raw:
        x = Letter(*x)
        if stack and stack[-1] == x.inverse():
            stack.pop()
        else:
            stack.append(x)
    return Word(rank, tuple(stack))


def multiply(u: Word, v: Word) -> Word:
    if u.rank != v.rank:
        raise RankMismatch(f"rank {u.rank} vs {v.rank}")
    # cancel at the seam only; both halves are already reduced
    i = 0
    lu, lv = u.letters, v.letters
    while i < min(len(lu), len(lv)) and lu[-1 - i] == lv[i].inverse():
        i += 1
    return Word(u.rank, lu[: len(lu) - i] + lv[i:])


def letters(rank: int) -> list[Letter]:
    """The symmetric generating set in code order: a, A, b, B, ..."""
    _check_rank(rank)
    return [Letter.from_code(c) for c in range(2 * rank)]


def ball(n: int, radius: int) -> list[Word]:
    """All reduced words of length at most ``radius``, shortest first."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    alphabet = letters(n)
    out = [Word(n)]
    layer: list[tuple[Letter, ...]] = [()]
    for _ in range(radius):
        nxt = []
        for w in layer:
            for x in alphabet:
                if w and w[-1] == x.inverse():
                    continue
                nxt.append(w + (x,))
        out.extend(Word(n, w) for w in nxt)
        layer = nxt
    return out


def ball_size(n: int, radius: int) -> int:
    return 1 + sum(2 * n * (2 * n - 1) ** (d - 1) for d in range(1, radius + 1))


def parse_letters(items: Sequence[str]) -> list[Letter]:
    return [Letter.parse(s) for s in items]
