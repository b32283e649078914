"""Exact arithmetic on the circle R/Z with rational points.

Intervals are pairs ``(left, right)`` read counterclockwise from ``left``;
they may wrap through 0. Whether an interval is open or closed is up to
the caller.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[Fraction, int]
Interval = tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def point(x: Rational | str) -> Fraction:
    """A circle point as a reduced fraction in [0, 1)."""
    return Fraction(x) % 1


def ccw(x: Fraction, y: Fraction) -> Fraction:
    """Counterclockwise distance from ``x`` to ``y``, in [0, 1)."""
    return (y - x) % 1


def ord3(x: Fraction, y: Fraction, z: Fraction) -> int:
    """Cyclic orientation: +1 counterclockwise, -1 clockwise, 0 if two points coincide."""
    dy, dz = ccw(x, y), ccw(x, z)
    if dy == 0 or dz == 0 or dy == dz:
        return 0
    return 1 if dy < dz else -1


def length(iv: Interval) -> Fraction:
    return ccw(iv[0], iv[1])


def in_open(x: Fraction, iv: Interval) -> bool:
    d = ccw(iv[0], x)
    return 0 < d < length(iv)


def in_closed(x: Fraction, iv: Interval) -> bool:
    return ccw(iv[0], x) <= length(iv)


def within(inner: Interval, outer: Interval) -> bool:
    """Closed ``inner`` lies in closed ``outer`` (both proper arcs)."""
    a = ccw(outer[0], inner[0])
    b = ccw(outer[0], inner[1])
    return a <= b <= length(outer)


def closures_meet(i: Interval, j: Interval) -> bool:
    return in_closed(j[0], i) or in_closed(j[1], i) or in_closed(i[0], j) or in_closed(i[1], j)


def opens_meet(i: Interval, j: Interval) -> bool:
    if i[0] == j[0]:
        return True
    return in_open(j[0], i) or in_open(i[0], j)


def midpoint(iv: Interval) -> Fraction:
    return (iv[0] + length(iv) / 2) % 1


def fmt(x: Fraction) -> str:
    """Rational as ``"p/q"``; the action-file format."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse(s: str) -> Fraction:
    if not isinstance(s, str):
        raise ValueError(f"expected a 'p/q' string, got {s!r}")
    return Fraction(s)


class PLCircleMap:
    """Orientation-preserving piecewise-linear homeomorphism of the circle.

    Given by breakpoint pairs ``(x_i, y_i)``; affine on lifts between
    consecutive breakpoints. Inputs are kept sorted in [0, 1).
    """

    __slots__ = ("breakpoints", "_xs")

    def __init__(self, breakpoints: Iterable[tuple[Rational, Rational]]):
        pts = sorted((point(x), point(y)) for x, y in breakpoints)
        if not pts:
            raise ValueError("need at least one breakpoint")
        xs = [x for x, _ in pts]
        if len(set(xs)) != len(xs):
            raise ValueError("repeated breakpoint input")
        if len(pts) > 1:
            ys = [y for _, y in pts]
            if len(set(ys)) != len(ys):
                raise ValueError("repeated breakpoint output")
            turn = sum(ccw(ys[i], ys[(i + 1) % len(ys)]) for i in range(len(ys)))
            if turn != 1:
                raise ValueError("breakpoint outputs are not cyclically increasing")
        self.breakpoints: tuple[tuple[Fraction, Fraction], ...] = tuple(pts)
        self._xs = xs

    @classmethod
    def rotation(cls, theta: Rational) -> "PLCircleMap":
        return cls([(0, theta)])

    @classmethod
    def identity(cls) -> "PLCircleMap":
        return cls([(0, 0)])

    def _piece(self, i: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        n = len(self.breakpoints)
        x0, y0 = self.breakpoints[i]
        x1, y1 = self.breakpoints[(i + 1) % n]
        dx = ccw(x0, x1) or ONE
        dy = ccw(y0, y1) or ONE
        return x0, y0, dx, dy

    def __call__(self, x: Rational) -> Fraction:
        x = point(x)
        i = bisect_right(self._xs, x) - 1
        x0, y0, dx, dy = self._piece(i)
        return (y0 + ccw(x0, x) * dy / dx) % 1

    def slopes(self) -> list[Fraction]:
        return [dy / dx for _, _, dx, dy in (self._piece(i) for i in range(len(self.breakpoints)))]

    def slope_at(self, x: Rational) -> Fraction:
        """Slope of the affine piece containing ``x`` (the right derivative)."""
        i = bisect_right(self._xs, point(x)) - 1
        _, _, dx, dy = self._piece(i)
        return dy / dx

    def inverse(self) -> "PLCircleMap":
        return PLCircleMap((y, x) for x, y in self.breakpoints)

    def __matmul__(self, other: "PLCircleMap") -> "PLCircleMap":
        """Composition ``self ∘ other``."""
        inv = other.inverse()
        xs = {x for x, _ in other.breakpoints} | {inv(x) for x, _ in self.breakpoints}
        return PLCircleMap((x, self(other(x))) for x in xs).simplified()

    def simplified(self) -> "PLCircleMap":
        """Drop breakpoints where the slope does not change."""
        n = len(self.breakpoints)
        if n == 1:
            return self if self.breakpoints[0][0] == ZERO else PLCircleMap([(ZERO, self(ZERO))])
        slopes = self.slopes()
        keep = [self.breakpoints[i] for i in range(n) if slopes[i - 1] != slopes[i]]
        if not keep:
            return PLCircleMap([(ZERO, self(ZERO))])
        return PLCircleMap(keep)

    def image(self, iv: Interval) -> Interval:
        return self(iv[0]), self(iv[1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PLCircleMap):
            return NotImplemented
        return self.simplified().breakpoints == other.simplified().breakpoints

    def __hash__(self) -> int:
        return hash(self.simplified().breakpoints)

    def __repr__(self) -> str:
        body = ", ".join(f"({fmt(x)} -> {fmt(y)})" for x, y in self.breakpoints)
        return f"PLCircleMap[{body}]"


class LiftedMap:
    """A lift of a circle map to the line, commuting with x -> x + 1.

    ``shift`` counts whole turns relative to the canonical lift, which is
    the one with value at 0 in [0, 1).
    """

    __slots__ = ("map", "shift")

    def __init__(self, circle_map: PLCircleMap, shift: int = 0):
        self.map = circle_map
        self.shift = int(shift)

    def __call__(self, x: Rational) -> Fraction:
        x = Fraction(x)
        n = math.floor(x)
        u = x - n
        f0 = self.map(ZERO)
        return f0 + ccw(f0, self.map(u)) + n + self.shift

    def inverse(self) -> "LiftedMap":
        g = LiftedMap(self.map.inverse())
        y0 = self(ZERO)
        s = -g(y0)
        assert s.denominator == 1
        return LiftedMap(g.map, int(s))

    def __matmul__(self, other: "LiftedMap") -> "LiftedMap":
        h = LiftedMap(self.map @ other.map)
        s = self(other(ZERO)) - h(ZERO)
        assert s.denominator == 1
        return LiftedMap(h.map, int(s))

    def __repr__(self) -> str:
        return f"LiftedMap({self.map!r}, shift={self.shift})"


def sort_intervals(ivs: Sequence[Interval]) -> list[Interval]:
    return sorted(ivs, key=lambda iv: iv[0])
