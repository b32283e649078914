"""Combinatorial ping-pong configurations.

A configuration is a cyclic word listing the domain arcs counterclockwise
(one letter per arc) together with one offset per generator. Arc ``j`` is
the word position ``j``; outer gap ``j`` sits between arc ``j`` and arc
``j + 1`` (mod ``m``).

Occurrences of a letter are numbered in word order from position 0. The
gap of ``D(a^-1)`` with index ``i`` starts right after occurrence ``i`` of
``a^-1``, and the generator ``a`` maps it onto occurrence ``i + o_a`` of
``a``. The inverse letter then carries the forced offset ``1 - o_a``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Mapping, Sequence

from pingpong.freegroup import Letter, letters


class InvalidConfiguration(ValueError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ConfigFormatError(ValueError):
    """Malformed configuration document (as opposed to an invalid configuration)."""


class InternalError(RuntimeError):
    """An invariant that should hold for every valid input failed."""


@dataclass(frozen=True)
class GammaCycle:
    generator_index: int
    # word positions, alternating between a-arcs and A-arcs, starting at the first a-arc
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Configuration:
    rank: int
    word: tuple[Letter, ...]
    offsets: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(Letter(*x) for x in self.word))
        object.__setattr__(self, "offsets", tuple(int(o) for o in self.offsets))

    @classmethod
    def from_text(cls, rank: int, word: str, offsets: Sequence[int] | None = None) -> "Configuration":
        """``Configuration.from_text(2, "BABabAba", [0, 1])``."""
        ws = tuple(Letter.parse(ch) for ch in word if not ch.isspace())
        if offsets is None:
            offsets = [0] * rank
        return cls(rank, ws, tuple(offsets))

    @property
    def m(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        offs = ",".join(f"{Letter(i)}:{o}" for i, o in enumerate(self.offsets))
        return f"{''.join(map(str, self.word))} [{offs}]"

    @cached_property
    def _occurrences(self) -> dict[Letter, tuple[int, ...]]:
        occ: dict[Letter, list[int]] = {x: [] for x in letters(self.rank)} if 1 <= self.rank <= 26 else {}
        for pos, x in enumerate(self.word):
            occ.setdefault(x, []).append(pos)
        return {x: tuple(v) for x, v in occ.items()}

    @cached_property
    def _occurrence_index(self) -> tuple[int, ...]:
        idx = [0] * self.m
        for positions in self._occurrences.values():
            for i, pos in enumerate(positions):
                idx[pos] = i
        return tuple(idx)

    def occurrences(self, x: Letter) -> tuple[int, ...]:
        return self._occurrences.get(Letter(*x), ())

    def occurrence_index(self, pos: int) -> int:
        """Which occurrence of its letter the arc at ``pos`` is."""
        return self._occurrence_index[pos % self.m]

    def k(self, generator_index: int) -> int:
        return len(self.occurrences(Letter(generator_index)))

    def offset(self, x: Letter) -> int:
        """Offset of a letter; inverse letters get the forced value ``1 - o_a``."""
        x = Letter(*x)
        o = self.offsets[x.generator_index]
        k = self.k(x.generator_index)
        return (1 - o) % k if x.inverted else o % k

    def gap_index(self, x: Letter, pos: int) -> int:
        """Index of the gap of ``D(x)`` containing the arc at ``pos`` (not an ``x``-arc)."""
        occ = self.occurrences(x)
        pos %= self.m
        # last occurrence strictly before pos, cyclically
        best = len(occ) - 1
        for i, p in enumerate(occ):
            if p < pos:
                best = i
            else:
                break
        return best

    def image_arc(self, x: Letter, gap: int) -> int:
        """Position of the ``x``-arc onto which ``x`` maps gap ``gap`` of ``D(x^-1)``."""
        occ = self.occurrences(x)
        return occ[(gap + self.offset(x)) % len(occ)]

    def successor(self, pos: int) -> int:
        """Out-neighbour of arc ``pos`` in its Gamma graph.

        For an ``s``-arc ``I`` the gap of ``D(s)`` right of ``I`` is mapped by
        ``s^-1`` onto the closure of the returned ``s^-1``-arc.
        """
        x = self.word[pos % self.m]
        i = self.occurrence_index(pos)
        inv = x.inverse()
        occ = self.occurrences(inv)
        # s^-1 maps gap j of D(s) onto occurrence j + o_{s^-1} of s^-1
        return occ[(i + self.offset(inv)) % len(occ)]

    def predecessor(self, pos: int) -> int:
        """In-neighbour of arc ``pos`` in its Gamma graph."""
        x = self.word[pos % self.m]
        i = self.occurrence_index(pos)
        occ = self.occurrences(x.inverse())
        return occ[(i - self.offset(x)) % len(occ)]


def validate(cfg: Configuration) -> list[str]:
    """List every violated configuration invariant; empty means valid."""
    problems: list[str] = []
    if not isinstance(cfg.rank, int) or cfg.rank < 2:
        return [f"rank must be >= 2, got {cfg.rank}"]
    if cfg.rank > 26:
        return [f"rank must be <= 26, got {cfg.rank}"]
    for pos, x in enumerate(cfg.word):
        if not 0 <= x.generator_index < cfg.rank:
            problems.append(f"letter {x} at position {pos} exceeds rank {cfg.rank}")
    if len(cfg.offsets) != cfg.rank:
        problems.append(f"expected {cfg.rank} offsets, got {len(cfg.offsets)}")
    for g in range(cfg.rank):
        a, A = Letter(g), Letter(g, True)
        ka, kA = len(cfg.occurrences(a)), len(cfg.occurrences(A))
        if ka != kA:
            problems.append(f"k({a})={ka} ≠ k({a}^{{-1}})={kA}")
        elif ka == 0:
            problems.append(f"k({a})=0: generator {a} has no arcs")
        elif g < len(cfg.offsets) and not 0 <= cfg.offsets[g] < ka:
            problems.append(f"offset of {a} is {cfg.offsets[g]}, outside [0, {ka})")
    return problems


def check(cfg: Configuration) -> Configuration:
    problems = validate(cfg)
    if problems:
        raise InvalidConfiguration(problems)
    return cfg


def gamma_graph(cfg: Configuration, generator_index: int) -> GammaCycle:
    check(cfg)
    a = Letter(generator_index)
    occ = cfg.occurrences(a)
    k = len(occ)
    start = occ[0]
    vertices = [start]
    pos = cfg.successor(start)
    while pos != start:
        if len(vertices) > 2 * k:
            raise InternalError(f"Gamma graph of {a} does not close up: {cfg}")
        vertices.append(pos)
        pos = cfg.successor(pos)
    if len(vertices) != 2 * k:
        raise InternalError(f"Gamma graph of {a} has a {len(vertices)}-cycle, expected {2 * k}: {cfg}")
    for i, pos in enumerate(vertices):
        if cfg.word[pos] != Letter(generator_index, bool(i % 2)):
            raise InternalError(f"Gamma graph of {a} is not bipartite: {cfg}")
    return GammaCycle(generator_index, tuple(vertices))


def lambda_assignments(cfg: Configuration) -> dict[tuple[Letter, int], int]:
    """Map ``(s, j)`` to the ``s``-arc containing the image of arc ``j`` under ``s``.

    Defined for every letter ``s`` and every arc ``j`` not labelled ``s^-1``.
    """
    check(cfg)
    out = {}
    for x in letters(cfg.rank):
        inv = x.inverse()
        for pos, y in enumerate(cfg.word):
            if y == inv:
                continue
            out[x, pos] = cfg.image_arc(x, cfg.gap_index(inv, pos))
    return out


def is_alternating(cfg: Configuration, generator_index: int) -> bool:
    check(cfg)
    seq = [x.inverted for x in cfg.word if x.generator_index == generator_index]
    return all(seq[i] != seq[(i + 1) % len(seq)] for i in range(len(seq)))


def rotate(cfg: Configuration, r: int) -> Configuration:
    """Start the cyclic word at position ``r``, re-indexing offsets to match."""
    r %= cfg.m
    prefix = cfg.word[:r]
    offsets = []
    for g, o in enumerate(cfg.offsets):
        k = cfg.k(g)
        shift = prefix.count(Letter(g, True)) - prefix.count(Letter(g))
        offsets.append((o + shift) % k if k else o)
    return Configuration(cfg.rank, cfg.word[r:] + prefix, tuple(offsets))


def min_rotation(codes: Sequence[int]) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm)."""
    s = list(codes) * 2
    n = len(codes)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n if n else 0


def canonical_form(cfg: Configuration) -> Configuration:
    check(cfg)
    return rotate(cfg, min_rotation([x.code for x in cfg.word]))


def is_canonical(cfg: Configuration) -> bool:
    return canonical_form(cfg) == cfg


# JSON document: {"rank": n, "word": ["B", "A", ...], "offsets": {"a": 0, "b": 1}}


def to_dict(cfg: Configuration) -> dict[str, Any]:
    return {
        "rank": cfg.rank,
        "word": [str(x) for x in cfg.word],
        "offsets": {str(Letter(g)): o for g, o in enumerate(cfg.offsets)},
    }


def from_dict(doc: Mapping[str, Any]) -> Configuration:
    if not isinstance(doc, Mapping):
        raise ConfigFormatError("configuration must be a JSON object")
    try:
        rank = doc["rank"]
        word = doc["word"]
        raw_offsets = doc.get("offsets", {})
    except KeyError as e:
        raise ConfigFormatError(f"missing key {e}") from None
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise ConfigFormatError("rank must be an integer")
    if not isinstance(word, list) or not all(isinstance(s, str) for s in word):
        raise ConfigFormatError("word must be a list of one-letter strings")
    if not isinstance(raw_offsets, Mapping):
        raise ConfigFormatError("offsets must be an object")
    try:
        ws = tuple(Letter.parse(s) for s in word)
    except ValueError as e:
        raise ConfigFormatError(str(e)) from None
    offsets = [0] * max(rank, 0)
    seen = set()
    for key, value in raw_offsets.items():
        try:
            x = Letter.parse(key)
        except ValueError as e:
            raise ConfigFormatError(str(e)) from None
        if x.inverted:
            raise ConfigFormatError(f"offsets are keyed by generators, got {key!r}")
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConfigFormatError(f"offset for {key!r} must be an integer")
        if x.generator_index >= rank:
            raise ConfigFormatError(f"offset for {key!r} exceeds rank {rank}")
        offsets[x.generator_index] = value
        seen.add(x.generator_index)
    missing = [str(Letter(g)) for g in range(max(rank, 0)) if g not in seen]
    if missing and raw_offsets:
        raise ConfigFormatError(f"missing offsets for {', '.join(missing)}")
    return Configuration(rank, ws, tuple(offsets))


def loads(text: str) -> Configuration:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigFormatError(f"malformed JSON: {e}") from None
    return from_dict(doc)


def dumps(cfg: Configuration) -> str:
    return json.dumps(to_dict(cfg), sort_keys=True)
