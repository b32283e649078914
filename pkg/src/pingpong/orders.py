"""Circular orders on F_n induced by a realization, and their lifts.

The circular order compares the images of the basepoint. The linear
order on F_n x Z uses the lifted action on the line: a generator acts by
its canonical lift (value at 0 in [0, 1)), words by composition, and the
central generator ``z`` by the unit translation. ``(g, m)`` is then placed
at ``L(g, m) = lift(g)(0) + m``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from pingpong import circle
from pingpong.freegroup import Word, ball
from pingpong.realize import Realization, apply


@dataclass(frozen=True)
class CentralElement:
    g: Word
    m: int = 0

    def __mul__(self, other: "CentralElement") -> "CentralElement":
        return CentralElement(self.g * other.g, self.m + other.m)

    @classmethod
    def parse(cls, text: str, rank: int) -> "CentralElement":
        """``"ab"`` or ``"ab:-2"``; the identity may be written ``""`` or ``"1"``."""
        word, _, m = text.partition(":")
        word = word.strip()
        if word == "1":
            word = ""
        return cls(Word.parse(word, rank), int(m) if m.strip() else 0)

    def __str__(self) -> str:
        return f"{self.g or '1'}:{self.m}"


@dataclass(frozen=True)
class Counterexample:
    kind: str
    elements: tuple
    values: tuple

    def to_dict(self) -> dict:
        return {"kind": self.kind, "elements": [str(e) for e in self.elements], "values": list(self.values)}


def _check_rank(r: Realization, words: Iterable[Word]) -> None:
    for w in words:
        if w.rank != r.rank:
            raise ValueError(f"word {w} has rank {w.rank}, realization has rank {r.rank}")


def circular_order(r: Realization, g1: Word, g2: Word, g3: Word) -> int:
    _check_rank(r, (g1, g2, g3))
    x = r.basepoint
    return circle.ord3(apply(r, g1, x), apply(r, g2, x), apply(r, g3, x))


def orbit(r: Realization, words: Sequence[Word]) -> list[Fraction]:
    return [apply(r, w, r.basepoint) for w in words]


def _ranks(values: Sequence[Fraction]) -> list[int]:
    """Replace points by their rank in [0, 1); equal points share a rank."""
    distinct = sorted(set(values))
    index = {v: i for i, v in enumerate(distinct)}
    return [index[v] for v in values]


def _ord_ranks(x: int, y: int, z: int) -> int:
    if x == y or y == z or x == z:
        return 0
    # even permutation of the sorted triple <=> counterclockwise
    return 1 if (x < y < z) or (y < z < x) or (z < x < y) else -1


def cocycle_check(
    r: Realization, radius: int, multipliers: int = 20, seed: int = 0, multiplier_radius: int = 4
) -> Counterexample | None:
    """Verify the cocycle identity, homogeneity and non-degeneracy on a ball."""
    bad = nondegeneracy_check(r, radius)
    if bad is not None:
        return bad
    words = ball(r.rank, radius)
    ranks = _ranks(orbit(r, words))
    N = len(words)
    c = _ord_ranks
    for i0, i1, i2, i3 in itertools.product(range(N), repeat=4):
        a, b, cc, d = ranks[i0], ranks[i1], ranks[i2], ranks[i3]
        total = c(b, cc, d) - c(a, cc, d) + c(a, b, d) - c(a, b, cc)
        if total:
            return Counterexample("cocycle", (words[i0], words[i1], words[i2], words[i3]), (total,))
    rng = random.Random(seed)
    pool = ball(r.rank, multiplier_radius)
    for _ in range(multipliers):
        gamma = rng.choice(pool)
        shifted = _ranks(orbit(r, [gamma * w for w in words]))
        for i0, i1, i2 in itertools.product(range(N), repeat=3):
            before = c(ranks[i0], ranks[i1], ranks[i2])
            after = c(shifted[i0], shifted[i1], shifted[i2])
            if before != after:
                return Counterexample("homogeneity", (gamma, words[i0], words[i1], words[i2]), (before, after))
    return None


def nondegeneracy_check(r: Realization, radius: int) -> Counterexample | None:
    """The order vanishes exactly on triples with a repeated word."""
    words = ball(r.rank, radius)
    ranks = _ranks(orbit(r, words))
    N = len(words)
    for i0, i1, i2 in itertools.product(range(N), repeat=3):
        v = _ord_ranks(ranks[i0], ranks[i1], ranks[i2])
        repeated = i0 == i1 or i1 == i2 or i0 == i2
        if (v == 0) != repeated:
            return Counterexample("non-degeneracy", (words[i0], words[i1], words[i2]), (v,))
    return None


def lift_value(r: Realization, u: CentralElement) -> Fraction:
    """``L(g, m)``: the lifted action of ``g`` at 0, plus ``m``."""
    _check_rank(r, (u.g,))
    x = Fraction(0)
    for letter in reversed(u.g.letters):
        x = r.lift(letter)(x)
    return x + u.m


def linear_compare(r: Realization, u: CentralElement, v: CentralElement) -> int:
    d = lift_value(r, u) - lift_value(r, v)
    return (d > 0) - (d < 0)


def cofinality_bound(r: Realization, g: Word) -> int:
    """Least ``N >= 1`` with ``(id, -N) < (g, 0) < (id, N)``."""
    return math.floor(abs(lift_value(r, CentralElement(g)))) + 1


def quotient_circular(r: Realization, g1: Word, g2: Word, g3: Word) -> int:
    """Circular order recovered from the linear order on F_n x Z.

    Each ``g_i`` is represented by the unique ``(g_i, m_i)`` between the
    identity (inclusive) and ``z`` (exclusive); the answer is the sign of
    the permutation sorting the representatives.
    """
    reps = []
    for g in (g1, g2, g3):
        m = -math.floor(lift_value(r, CentralElement(g)))
        reps.append(CentralElement(g, m))
    if len({u.g for u in reps}) < 3:
        return 0
    order = sorted(range(3), key=lambda i: lift_value(r, reps[i]))
    return _perm_sign(order)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def order_agreement(ra: Realization, rb: Realization, radius: int) -> Counterexample | None:
    """First triple from the ball on which the two induced orders differ."""
    if ra.rank != rb.rank:
        raise ValueError("realizations have different ranks")
    words = ball(ra.rank, radius)
    xa, xb = orbit(ra, words), orbit(rb, words)
    for i, j, k in itertools.product(range(len(words)), repeat=3):
        va = circle.ord3(xa[i], xa[j], xa[k])
        vb = circle.ord3(xb[i], xb[j], xb[k])
        if va != vb:
            return Counterexample("disagreement", (words[i], words[j], words[k]), (va, vb))
    return None
