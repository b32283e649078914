"""Boundary components of the glued surface and the isolation verdict.

Outer gap ``g`` lies between arc ``g`` (letter ``s``) and arc ``g + 1``
(letter ``t``). Its complementary interval of the minimal set is moved
by ``s^-1`` (the left move) and by ``t^-1`` (the right move). The two moves
are mutually inverse, so the classes of the equivalence relation they
generate are the cycles of the right move. Each class is one boundary
component of the surface obtained by gluing one ``4k(a)``-gon per
generator to the disc.
"""

from __future__ import annotations

from dataclasses import dataclass

from pingpong.config import Configuration, InternalError, check


@dataclass(frozen=True)
class GapMoveTable:
    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    boundary_count: int
    chi: int
    genus: int
    isolated: bool
    boundary_cycles: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "boundary_count": self.boundary_count,
            "chi": self.chi,
            "genus": self.genus,
            "isolated": self.isolated,
            "cycles": [list(c) for c in self.boundary_cycles],
        }


def gap_moves(cfg: Configuration) -> GapMoveTable:
    check(cfg)
    m = cfg.m
    # left move: s^-1 sends the right end of arc g to the left end of its Gamma successor
    left = tuple((cfg.successor(g) - 1) % m for g in range(m))
    # right move: t^-1 sends the left end of arc g+1 to the right end of its Gamma predecessor
    right = tuple(cfg.predecessor((g + 1) % m) for g in range(m))
    return GapMoveTable(left, right)


def _cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        g = start
        while not seen[g]:
            seen[g] = True
            cyc.append(g)
            g = perm[g]
        if g != start:
            raise InternalError(f"right move is not a permutation: {perm}")
        out.append(tuple(cyc))
    return out


def _union_find_classes(table: GapMoveTable) -> list[frozenset[int]]:
    m = len(table.left)
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in range(m):
        for h in (table.left[g], table.right[g]):
            rg, rh = find(g), find(h)
            if rg != rh:
                parent[rg] = rh
    groups: dict[int, set[int]] = {}
    for g in range(m):
        groups.setdefault(find(g), set()).add(g)
    return [frozenset(s) for s in groups.values()]


def boundary_components(cfg: Configuration) -> tuple[tuple[int, ...], ...]:
    """Cycles of the right-move permutation on outer gaps.

    Cross-checked against the union-find classes of both moves.
    """
    table = gap_moves(cfg)
    cycles = _cycles(table.right)
    classes = _union_find_classes(table)
    if {frozenset(c) for c in cycles} != set(classes) or len(cycles) != len(classes):
        raise InternalError(f"boundary cycles disagree with gap classes: {cfg}")
    return tuple(cycles)


def euler_characteristic(cfg: Configuration) -> int:
    """Disc plus one face and 2k(a) edges per generator."""
    check(cfg)
    return 1 + sum(1 - 2 * cfg.k(g) for g in range(cfg.rank))


def classify(cfg: Configuration) -> Verdict:
    cycles = boundary_components(cfg)
    b = len(cycles)
    chi = euler_characteristic(cfg)
    twice_genus = 2 - chi - b
    if twice_genus < 0 or twice_genus % 2:
        raise InternalError(f"non-orientable bookkeeping: chi={chi}, b={b} for {cfg}")
    return Verdict(
        boundary_count=b,
        chi=chi,
        genus=twice_genus // 2,
        isolated=b == 1,
        boundary_cycles=cycles,
    )
