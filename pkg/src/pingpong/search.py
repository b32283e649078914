"""Exhaustive and sampled surveys of ping-pong configurations.

Configurations are enumerated up to rotation of the cyclic word: for each
vector of component counts ``k``, the necklaces with that letter content
are generated directly (each in its lexicographically least rotation) and
combined with every offset choice. The cost is roughly
``multinomial(m; k) / m * prod(k)`` configurations per count vector.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from pingpong.config import Configuration, InternalError, canonical_form, gamma_graph
from pingpong.freegroup import Letter
from pingpong.surface import classify

DEFAULT_CEILING = 10**7


class BoundTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SearchBound:
    rank: int
    max_k: int | None = None
    max_m: int | None = None

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise ValueError("rank must be >= 2")
        if self.max_k is None and self.max_m is None:
            raise ValueError("give max_k or max_m")
        for b in (self.max_k, self.max_m):
            if b is not None and b < 1:
                raise ValueError("bounds must be >= 1")

    def k_vectors(self) -> list[tuple[int, ...]]:
        top = self.max_k if self.max_k is not None else max(1, (self.max_m or 0) // 2 - (self.rank - 1))
        out = []
        for ks in itertools.product(range(1, top + 1), repeat=self.rank):
            if self.max_m is not None and 2 * sum(ks) > self.max_m:
                continue
            out.append(ks)
        return out


def necklaces(counts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Necklaces with fixed content, each as its least rotation, in lex order.

    ``counts[j]`` is the number of copies of symbol ``j``; ``counts[0]``
    must be positive.
    """
    n = sum(counts)
    K = len(counts)
    if n == 0:
        return
    if counts[0] <= 0:
        raise ValueError("symbol 0 must occur")
    a = [0] * (n + 1)
    num = list(counts)
    num[0] -= 1

    def gen(t: int, p: int) -> Iterator[tuple[int, ...]]:
        if t > n:
            if n % p == 0:
                yield tuple(a[1:])
            return
        for j in range(a[t - p], K):
            if num[j]:
                a[t] = j
                num[j] -= 1
                yield from gen(t + 1, p if j == a[t - p] else t)
                num[j] += 1

    yield from gen(2, 1)


def configs_with_counts(rank: int, ks: Sequence[int]) -> Iterator[Configuration]:
    counts = [ks[c // 2] for c in range(2 * rank)]
    for neck in necklaces(counts):
        word = tuple(Letter.from_code(c) for c in neck)
        for offsets in itertools.product(*(range(k) for k in ks)):
            yield Configuration(rank, word, offsets)


def estimated_count(bound: SearchBound) -> int:
    total = 0
    for ks in bound.k_vectors():
        m = 2 * sum(ks)
        words = math.factorial(m)
        for k in ks:
            words //= math.factorial(k) ** 2
        total += -(-words // m) * math.prod(ks)
    return total


def enumerate_configs(bound: SearchBound, ceiling: int | None = None) -> Iterator[Configuration]:
    if ceiling is not None and estimated_count(bound) > ceiling:
        raise BoundTooLarge(f"about {estimated_count(bound)} configurations exceed the ceiling {ceiling}")
    for ks in bound.k_vectors():
        yield from configs_with_counts(bound.rank, ks)


def brute_force_configs(bound: SearchBound) -> set[Configuration]:
    """All words and offsets, filtered and deduplicated by canonical form. Small bounds only."""
    out = set()
    for ks in bound.k_vectors():
        pool = [Letter.from_code(c) for c in range(2 * bound.rank) for _ in range(ks[c // 2])]
        for perm in set(itertools.permutations(pool)):
            for offsets in itertools.product(*(range(k) for k in ks)):
                out.add(canonical_form(Configuration(bound.rank, perm, offsets)))
    return out


def random_config(rng: random.Random, rank: int, max_k: int | None = None, max_m: int | None = None) -> Configuration:
    """A uniformly shuffled word with random counts and offsets, in canonical form."""
    bound = SearchBound(rank, max_k=max_k, max_m=max_m)
    ks = rng.choice(bound.k_vectors())
    pool = [Letter.from_code(c) for c in range(2 * rank) for _ in range(ks[c // 2])]
    rng.shuffle(pool)
    offsets = tuple(rng.randrange(k) for k in ks)
    return canonical_form(Configuration(rank, tuple(pool), offsets))


def relabel(cfg: Configuration, perm: Sequence[int], flips: Sequence[bool]) -> Configuration:
    """Apply the automorphism sending generator ``g`` to ``perm[g]`` (inverted if ``flips[g]``)."""
    def image(x: Letter) -> Letter:
        return Letter(perm[x.generator_index], x.inverted != flips[x.generator_index])

    word = tuple(image(x) for x in cfg.word)
    offsets = [0] * cfg.rank
    for g in range(cfg.rank):
        # the new generator perm[g] is the old letter g, or its inverse when flipped
        offsets[perm[g]] = cfg.offset(Letter(g, flips[g]))
    return canonical_form(Configuration(cfg.rank, word, tuple(offsets)))


def symmetry_key(cfg: Configuration) -> Configuration:
    """Least image under generator relabelling and inversion (metadata only)."""
    images = (
        relabel(cfg, perm, flips)
        for perm in itertools.permutations(range(cfg.rank))
        for flips in itertools.product((False, True), repeat=cfg.rank)
    )
    return min(images, key=lambda c: ([x.code for x in c.word], c.offsets))


def _examine(cfg: Configuration) -> tuple[Configuration, int, str | None]:
    try:
        for g in range(cfg.rank):
            gamma_graph(cfg, g)
        b = classify(cfg).boundary_count
    except InternalError as e:
        return cfg, -1, str(e)
    return cfg, b, None


@dataclass
class SurveyReport:
    rank: int
    total: int = 0
    histogram: Counter = field(default_factory=Counter)
    isolated: list[Configuration] = field(default_factory=list)
    parity_violations: list[Configuration] = field(default_factory=list)
    defects: list[str] = field(default_factory=list)

    def add(self, cfg: Configuration, b: int, defect: str | None) -> None:
        self.total += 1
        if defect is not None:
            self.defects.append(defect)
            return
        self.histogram[b] += 1
        if b % 2 != (self.rank + 1) % 2:
            self.parity_violations.append(cfg)
        if b == 1:
            self.isolated.append(cfg)

    def to_dict(self) -> dict:
        from pingpong.config import to_dict

        return {
            "rank": self.rank,
            "total": self.total,
            "histogram": {str(b): n for b, n in sorted(self.histogram.items())},
            "isolated_count": len(self.isolated),
            "isolated": [to_dict(c) for c in sorted(self.isolated, key=_sort_key)],
            "isolated_symmetry_classes": len({symmetry_key(c) for c in self.isolated}),
            "parity_violations": [to_dict(c) for c in sorted(self.parity_violations, key=_sort_key)],
            "defects": sorted(self.defects),
        }


def _sort_key(cfg: Configuration):
    return (len(cfg.word), [x.code for x in cfg.word], cfg.offsets)


class ParityViolation(InternalError):
    pass


def survey_configs(rank: int, configs, jobs: int = 1, strict: bool = True) -> SurveyReport:
    report = SurveyReport(rank)
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.imap(_examine, configs, chunksize=256)
            for cfg, b, defect in results:
                report.add(cfg, b, defect)
    else:
        for cfg in configs:
            report.add(*_examine(cfg))
    if strict and (report.parity_violations or report.defects):
        raise ParityViolation(
            f"{len(report.parity_violations)} parity violations, {len(report.defects)} defects"
        )
    return report


def survey(bound: SearchBound, ceiling: int = DEFAULT_CEILING, jobs: int = 1, strict: bool = True) -> SurveyReport:
    return survey_configs(bound.rank, enumerate_configs(bound, ceiling), jobs=jobs, strict=strict)


def sample_survey(
    rank: int, size: int, seed: int = 0, max_k: int | None = None, max_m: int | None = None, strict: bool = True
) -> SurveyReport:
    rng = random.Random(seed)
    configs = [random_config(rng, rank, max_k=max_k, max_m=max_m) for _ in range(size)]
    return survey_configs(rank, configs, strict=strict)
