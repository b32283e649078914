"""Piecewise-linear realizations of ping-pong configurations.

The standard layout places arc ``j`` in the middle third of the sector
``[j/m, (j+1)/m]``; the perturbed layout uses the middle fifth. Each
generator ``a`` maps every closed gap of ``D(a^-1)`` affinely onto an
``a``-arc (as dictated by the offsets) and every ``a^-1``-arc affinely onto
the complementary closed gap of ``D(a)``.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Mapping, Sequence

from pingpong import circle
from pingpong.circle import Interval, LiftedMap, PLCircleMap
from pingpong.config import Configuration, InternalError, canonical_form, check
from pingpong.freegroup import Letter, Word, letters

LAYOUTS = {"standard": (3, 1), "perturbed": (5, 2)}

Domains = Mapping[Letter, Sequence[Interval]]


@dataclass(frozen=True)
class Realization:
    cfg: Configuration
    arcs: tuple[Interval, ...]
    maps: Mapping[Letter, PLCircleMap]  # every letter, inverses included
    mu: Fraction
    basepoint: Fraction = Fraction(0)
    _lifts: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.cfg.rank

    def domains(self) -> dict[Letter, list[Interval]]:
        out: dict[Letter, list[Interval]] = {x: [] for x in letters(self.rank)}
        for pos, x in enumerate(self.cfg.word):
            out[x].append(self.arcs[pos])
        return out

    def outer_gap(self, g: int) -> Interval:
        m = self.cfg.m
        return self.arcs[g % m][1], self.arcs[(g + 1) % m][0]

    def lift(self, x: Letter) -> LiftedMap:
        """Canonical lift for generators; inverse letters get the inverse lift."""
        x = Letter(*x)
        if x not in self._lifts:
            gen = LiftedMap(self.maps[Letter(x.generator_index)])
            self._lifts[x] = gen.inverse() if x.inverted else gen
        return self._lifts[x]


def layout(m: int, name: str = "standard") -> tuple[Interval, ...]:
    try:
        parts, lo = LAYOUTS[name]
    except KeyError:
        raise ValueError(f"unknown layout {name!r}; choose from {sorted(LAYOUTS)}") from None
    return tuple(
        (Fraction(parts * j + lo, parts * m), Fraction(parts * j + lo + 1, parts * m)) for j in range(m)
    )


def _generator_map(cfg: Configuration, arcs: Sequence[Interval], a: Letter) -> PLCircleMap:
    A = a.inverse()
    occ_a, occ_A = cfg.occurrences(a), cfg.occurrences(A)
    k = len(occ_a)
    o = cfg.offset(a)
    pts = []
    for i, p in enumerate(occ_A):
        left, right = arcs[p]
        # arc i of D(a^-1) sits between gap i-1 and gap i
        pts.append((left, arcs[occ_a[(i - 1 + o) % k]][1]))
        pts.append((right, arcs[occ_a[(i + o) % k]][0]))
    return PLCircleMap(pts)


def expansion_constant(cfg: Configuration, arcs: Sequence[Interval], maps: Mapping[Letter, PLCircleMap]) -> Fraction:
    """Least slope of ``s`` over the arcs of ``D(s^-1)``, for all letters ``s``."""
    slopes = []
    for pos, x in enumerate(cfg.word):
        f = maps[x.inverse()]
        slopes.append(f.slope_at(arcs[pos][0]))
    return min(slopes)


def standard_realization(cfg: Configuration, layout_name: str = "standard") -> Realization:
    check(cfg)
    arcs = layout(cfg.m, layout_name)
    maps: dict[Letter, PLCircleMap] = {}
    for g in range(cfg.rank):
        a = Letter(g)
        maps[a] = _generator_map(cfg, arcs, a)
        maps[a.inverse()] = maps[a].inverse()
    mu = expansion_constant(cfg, arcs, maps)
    if mu <= 1:
        raise InternalError(f"expansion constant {mu} is not > 1 for {cfg}")
    return Realization(cfg, arcs, maps, mu, Fraction(0))


def apply(r: Realization, w: Word, x: Fraction) -> Fraction:
    """Image of ``x`` under the word, acting on the left."""
    if w.rank != r.rank:
        raise ValueError(f"word rank {w.rank} != realization rank {r.rank}")
    x = circle.point(x)
    for letter in reversed(w.letters):
        x = r.maps[letter](x)
    return x


def image_of_interval(r: Realization, s: Letter, iv: Interval) -> Interval:
    return r.maps[Letter(*s)].image(iv)


def arc_at(r: Realization, x: Fraction) -> int | None:
    """Position of the open arc containing ``x``, if any."""
    lefts = [iv[0] for iv in r.arcs]
    i = bisect_right(lefts, x) - 1
    for j in (i % r.cfg.m, (i - 1) % r.cfg.m):
        if circle.in_open(x, r.arcs[j]):
            return j
    return None


def gap_at(r: Realization, x: Fraction) -> int | None:
    """Outer gap whose closure contains ``x``, if ``x`` lies in no open arc."""
    for g in range(r.cfg.m):
        if circle.in_closed(x, r.outer_gap(g)):
            return g
    return None


def escape_to_gap(r: Realization, x: Fraction, max_steps: int = 10_000) -> tuple[int, int]:
    """Push ``x`` out of the domains by the expanding inverse letters.

    While ``x`` lies in an ``s``-arc, replace it by its image under
    ``s^-1``. The complementary interval of the minimal set containing
    ``x`` is carried along, so the outer gap reached identifies its orbit.
    Returns ``(gap, steps)``; never terminates for points of the minimal set,
    hence the step cap.
    """
    x = circle.point(x)
    for step in range(max_steps):
        j = arc_at(r, x)
        if j is None:
            g = gap_at(r, x)
            assert g is not None
            return g, step
        x = r.maps[r.cfg.word[j].inverse()](x)
    raise RuntimeError(f"point {x} did not leave the domains in {max_steps} steps")


def realized_gap_targets(r: Realization, g: int, side: str) -> list[int]:
    """Outer gaps met by the realized image of the closed outer gap ``g``.

    ``side="left"`` moves by the inverse of the letter of arc ``g``,
    ``side="right"`` by the inverse of the letter of arc ``g + 1``. The image
    avoids the minimal set, so every gap returned lies in the same
    complementary interval; there are two only when the image swallows a
    whole arc, which then misses the minimal set.
    """
    m = r.cfg.m
    pos = g if side == "left" else (g + 1) % m
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    img = r.maps[r.cfg.word[pos].inverse()].image(r.outer_gap(g))
    return [h for h in range(m) if circle.closures_meet(img, r.outer_gap(h))]


# ---------------------------------------------------------------------------
# ping-pong verification and configuration extraction


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    witness: Interval

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "message": self.message, "witness": [circle.fmt(self.witness[0]), circle.fmt(self.witness[1])]}


class ExtractionError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations))


def _closed_gaps(components: Sequence[Interval]) -> list[Interval]:
    """Closed complementary intervals of a union of open arcs, in order."""
    comps = circle.sort_intervals(components)
    return [(comps[i][1], comps[(i + 1) % len(comps)][0]) for i in range(len(comps))]


def _all_maps(maps: Mapping[Letter, PLCircleMap]) -> dict[Letter, PLCircleMap]:
    out = {}
    for x, f in maps.items():
        x = Letter(*x)
        if x.inverted:
            continue
        out[x] = f
        out[x.inverse()] = maps.get(x.inverse()) or f.inverse()
    return out


def verify_pingpong(maps: Mapping[Letter, PLCircleMap], domains: Domains) -> list[Violation]:
    """Check the ping-pong conditions exactly; an empty list means they hold."""
    maps = _all_maps(maps)
    out: list[Violation] = []
    labelled = [(Letter(*x), iv) for x, ivs in domains.items() for iv in ivs]
    for x, iv in labelled:
        if iv[0] == iv[1]:
            out.append(Violation("degenerate", f"empty component of D({x})", iv))
    for i, (x, iv) in enumerate(labelled):
        for y, jv in labelled[i + 1:]:
            if circle.opens_meet(iv, jv):
                out.append(Violation("overlap", f"components of D({x}) and D({y}) overlap", iv))
            elif circle.closures_meet(iv, jv):
                out.append(Violation("closure", f"closures of components of D({x}) and D({y}) meet", iv))
    if out:
        return out
    for x, f in maps.items():
        target = domains.get(x, [])
        source = domains.get(x.inverse(), [])
        if not source:
            out.append(Violation("inclusion", f"D({x.inverse()}) is empty, so {x} cannot map its complement into D({x})", (circle.ZERO, circle.ZERO)))
            continue
        for gap in _closed_gaps(source):
            img = f.image(gap)
            if not any(circle.within(img, iv) for iv in target):
                out.append(Violation("inclusion", f"{x} maps a gap of D({x.inverse()}) outside the closure of D({x})", img))
    return out


def normalize_domains(maps: Mapping[Letter, PLCircleMap], domains: Domains) -> dict[Letter, list[Interval]]:
    """Shrink each generator domain to ``a(S^1 - closure D(a^-1))``.

    Components that the image ``s(S^1 - closure D(s^-1))`` never meets are
    dropped first, so a redundant interval is removed whichever letter's
    domain it was attached to.
    """
    maps = _all_maps(maps)
    pruned = {}
    for x, f in maps.items():
        images = [f.image(gap) for gap in _closed_gaps(domains[x.inverse()])]
        pruned[x] = [iv for iv in domains[x] if any(circle.opens_meet(iv, img) for img in images)]
    out = dict(pruned)
    for x, f in maps.items():
        if not x.inverted:
            out[x] = [f.image(gap) for gap in _closed_gaps(pruned[x.inverse()])]
    return out


def extract_config(maps: Mapping[Letter, PLCircleMap], domains: Domains) -> Configuration:
    """Read the (canonical) configuration off a ping-pong action."""
    problems = verify_pingpong(maps, domains)
    if problems:
        raise ExtractionError(problems)
    maps = _all_maps(maps)
    rank = len([x for x in maps if not x.inverted])
    if sorted(x.generator_index for x in maps if not x.inverted) != list(range(rank)):
        raise ValueError("generators must be a, b, c, ... without gaps")
    norm = normalize_domains(maps, domains)
    problems = verify_pingpong(maps, norm)
    if problems:
        raise ExtractionError(problems)
    labelled = sorted(((iv, x) for x, ivs in norm.items() for iv in ivs), key=lambda t: t[0][0])
    word = tuple(x for _, x in labelled)
    proto = Configuration(rank, word, (0,) * rank)
    offsets = []
    for g in range(rank):
        a = Letter(g)
        f = maps[a]
        occ_a = proto.occurrences(a)
        found = set()
        occ_A = proto.occurrences(a.inverse())
        for i, p in enumerate(occ_A):
            gap = (labelled[p][0][1], labelled[occ_A[(i + 1) % len(occ_A)]][0][0])
            img = f(circle.midpoint(gap))
            hits = [q for q in occ_a if circle.in_open(img, labelled[q][0])]
            if len(hits) != 1:
                raise InternalError(f"gap image of {a} not in a single component")
            found.add((occ_a.index(hits[0]) - i) % len(occ_a))
        if len(found) != 1:
            raise InternalError(f"{a} does not map gaps to components by a rotation")
        offsets.append(found.pop())
    return canonical_form(Configuration(rank, word, tuple(offsets)))


# ---------------------------------------------------------------------------
# covers of the minimal set


def cover_levels(r: Realization, depth: int) -> Iterator[list[tuple[Interval, Letter]]]:
    """Level 0 is the closed arcs; level d+1 holds ``s(C)`` for level-d ``C`` outside ``D(s^-1)``.

    Each interval is tagged with the letter of the arc containing it.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    level = [(iv, x) for iv, x in zip(r.arcs, r.cfg.word)]
    yield level
    alphabet = letters(r.rank)
    for _ in range(depth):
        nxt = []
        for iv, x in level:
            for s in alphabet:
                if s == x.inverse():
                    continue
                nxt.append((r.maps[s].image(iv), s))
        level = nxt
        yield level


def minimal_set_cover(r: Realization, depth: int) -> list[Interval]:
    *_, last = cover_levels(r, depth)
    return [iv for iv, _ in last]


# ---------------------------------------------------------------------------
# action file: rationals as "p/q" strings


def action_to_dict(maps: Mapping[Letter, PLCircleMap], domains: Domains) -> dict[str, Any]:
    gens = sorted((Letter(*x) for x in maps if not Letter(*x).inverted), key=lambda x: x.code)
    return {
        "generators": {
            str(x): {"breakpoints": [[circle.fmt(p), circle.fmt(q)] for p, q in maps[x].breakpoints]} for x in gens
        },
        "domains": {
            str(x): [[circle.fmt(p), circle.fmt(q)] for p, q in domains[x]]
            for x in sorted((Letter(*y) for y in domains), key=lambda y: y.code)
        },
    }


def realization_to_dict(r: Realization) -> dict[str, Any]:
    return action_to_dict({x: f for x, f in r.maps.items() if not x.inverted}, r.domains())


def action_from_dict(doc: Mapping[str, Any]) -> tuple[dict[Letter, PLCircleMap], dict[Letter, list[Interval]]]:
    try:
        maps = {
            Letter.parse(name): PLCircleMap((circle.parse(p), circle.parse(q)) for p, q in entry["breakpoints"])
            for name, entry in doc["generators"].items()
        }
        domains = {
            Letter.parse(name): [(circle.parse(p), circle.parse(q)) for p, q in ivs]
            for name, ivs in doc["domains"].items()
        }
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ValueError(f"malformed action document: {e}") from None
    if any(x.inverted for x in maps):
        raise ValueError("generator maps must be keyed by lowercase letters")
    for x in list(maps):
        domains.setdefault(x, [])
        domains.setdefault(x.inverse(), [])
    return maps, domains


def dumps_action(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True)
